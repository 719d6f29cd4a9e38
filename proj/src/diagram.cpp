#include "rauzy/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

#include "rauzy/error.hpp"

namespace rauzy {

namespace {

std::size_t move_slot(Move m) { return static_cast<std::size_t>(m); }

// Plain modulo keeps sampled paths identical across standard libraries,
// unlike std::uniform_int_distribution.
std::size_t pick_index(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace

RauzyDiagram RauzyDiagram::explore(const LabeledPermutation& seed, bool augmented,
                                   std::size_t cap) {
  if (!is_irreducible(seed)) fail(ErrorKind::InvalidMove, "seed is reducible: " + seed.display());
  if (cap == 0) fail(ErrorKind::CapExceeded, "vertex cap is zero");
  RauzyDiagram d;
  d.augmented_ = augmented;
  auto add_vertex = [&](const LabeledPermutation& p) {
    auto [it, inserted] = d.index_.try_emplace(p.display(), d.vertices_.size());
    if (inserted) {
      if (d.vertices_.size() >= cap)
        fail(ErrorKind::CapExceeded, "component has more than " + std::to_string(cap) + " vertices");
      d.vertices_.push_back(p);
      d.out_.emplace_back();
    }
    return std::pair{it->second, inserted};
  };
  add_vertex(seed);
  std::vector<Move> kinds{Move::Top, Move::Bottom};
  if (augmented) kinds.push_back(Move::Flip);
  for (std::size_t v = 0; v < d.vertices_.size(); ++v) {
    for (Move m : kinds) {
      EdgeRecord e = apply_move(d.vertices_[v], m);
      auto [target, inserted] = add_vertex(e.target);
      d.out_[v][move_slot(m)] = d.edges_.size();
      d.edges_.push_back(DiagramEdge{v, target, m, e.winner, e.loser});
    }
  }
  return d;
}

RauzyDiagram RauzyDiagram::from_vertices(std::vector<LabeledPermutation> vertices) {
  RauzyDiagram d;
  for (auto& p : vertices) {
    if (d.index_.try_emplace(p.display(), d.vertices_.size()).second) {
      d.vertices_.push_back(std::move(p));
      d.out_.emplace_back();
    }
  }
  return d;
}

std::optional<std::size_t> RauzyDiagram::find(const LabeledPermutation& p) const {
  auto it = index_.find(p.display());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RauzyDiagram::out_edge(std::size_t v, Move m) const {
  return out_.at(v)[move_slot(m)];
}

std::vector<std::size_t> RauzyDiagram::unlabeled_matches(const LabeledPermutation& p) const {
  const UnlabeledPermutation pi = unlabeled(p);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (unlabeled(vertices_[v]) == pi) out.push_back(v);
  return out;
}

bool injectivity_check(const RauzyDiagram& d) {
  std::map<std::vector<std::size_t>, std::size_t> seen;
  for (const auto& p : d.vertices())
    if (!seen.emplace(unlabeled(p).images, 0).second) return false;
  return true;
}

std::string to_dot(const RauzyDiagram& d) {
  std::ostringstream out;
  out << "digraph rauzy {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t v = 0; v < d.size(); ++v) {
    std::string label = d.vertex(v).display_rows();
    std::string escaped;
    for (char c : label) {
      if (c == '\n')
        escaped += "\\n";
      else if (c == '"' || c == '\\')
        escaped += std::string("\\") + c;
      else
        escaped += c;
    }
    out << "  v" << v << " [label=\"" << escaped << "\"];\n";
  }
  for (const auto& e : d.edges())
    out << "  v" << e.source << " -> v" << e.target << " [label=\"" << move_char(e.kind) << "\"];\n";
  out << "}\n";
  return out.str();
}

Reading parse_reading(std::string_view text) {
  if (text == "paper" || text == "rtl") return Reading::Paper;
  if (text == "ltr") return Reading::LeftToRight;
  fail(ErrorKind::Parse, "unknown reading '" + std::string(text) + "' (expected paper or ltr)");
}

std::vector<Move> parse_move_word(std::string_view word, Reading reading) {
  std::vector<Move> moves;
  std::size_t i = 0;
  while (i < word.size()) {
    const char c = word[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const Move m = move_from_char(c);
    ++i;
    std::size_t repeat = 1;
    if (i < word.size() && word[i] == '^') {
      ++i;
      std::size_t digits_start = i;
      while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) ++i;
      if (i == digits_start) fail(ErrorKind::Parse, "missing exponent after '^' in move word");
      if (i - digits_start > 6) fail(ErrorKind::Parse, "move exponent too large");
      repeat = std::stoul(std::string(word.substr(digits_start, i - digits_start)));
    }
    moves.insert(moves.end(), repeat, m);
  }
  if (reading == Reading::Paper) std::reverse(moves.begin(), moves.end());
  return moves;
}

std::string format_move_word(const std::vector<Move>& moves) {
  std::string s;
  s.reserve(moves.size());
  for (Move m : moves) s += move_char(m);
  return s;
}

namespace {

LabeledPermutation walk(const LabeledPermutation& start, const std::vector<Move>& moves) {
  LabeledPermutation p = start;
  for (Move m : moves) p = apply_move(p, m).target;
  return p;
}

}  // namespace

AllowedPath::AllowedPath(LabeledPermutation start, std::vector<Move> moves)
    : start_(std::move(start)), moves_(std::move(moves)), end_(walk(start_, moves_)) {}

std::vector<EdgeRecord> AllowedPath::edges() const {
  std::vector<EdgeRecord> out;
  out.reserve(moves_.size());
  LabeledPermutation p = start_;
  for (Move m : moves_) {
    out.push_back(apply_move(p, m));
    p = out.back().target;
  }
  return out;
}

AllowedPath build_path(const LabeledPermutation& start, std::string_view word, Reading reading) {
  if (!is_irreducible(start)) fail(ErrorKind::InvalidMove, "path start is reducible: " + start.display());
  return AllowedPath(start, parse_move_word(word, reading));
}

std::optional<std::vector<Move>> sample_path(const RauzyDiagram& d, std::size_t from,
                                             const std::vector<std::size_t>& targets,
                                             std::size_t min_length, std::size_t max_length,
                                             std::mt19937_64& rng) {
  if (from >= d.size()) fail(ErrorKind::Domain, "start vertex out of range");
  if (min_length > max_length) return std::nullopt;
  // reach[l][v]: some walk of exactly l edges leads from v into `targets`.
  std::vector<std::vector<char>> reach(max_length + 1, std::vector<char>(d.size(), 0));
  for (std::size_t t : targets) reach[0].at(t) = 1;
  for (std::size_t l = 1; l <= max_length; ++l)
    for (const auto& e : d.edges())
      if (reach[l - 1][e.target]) reach[l][e.source] = 1;

  std::vector<std::size_t> lengths;
  for (std::size_t l = min_length; l <= max_length; ++l)
    if (reach[l][from]) lengths.push_back(l);
  if (lengths.empty()) return std::nullopt;
  std::size_t remaining = lengths[pick_index(rng, lengths.size())];

  std::vector<Move> moves;
  std::size_t v = from;
  std::vector<const DiagramEdge*> choices;
  while (remaining > 0) {
    choices.clear();
    for (Move m : {Move::Top, Move::Bottom, Move::Flip}) {
      auto e = d.out_edge(v, m);
      if (e && reach[remaining - 1][d.edges()[*e].target]) choices.push_back(&d.edges()[*e]);
    }
    if (choices.empty()) fail(ErrorKind::Internal, "path sampler lost reachability");
    const DiagramEdge* pick = choices[pick_index(rng, choices.size())];
    moves.push_back(pick->kind);
    v = pick->target;
    --remaining;
  }
  return moves;
}

}  // namespace rauzy
