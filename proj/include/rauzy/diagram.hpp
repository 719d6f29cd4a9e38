#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rauzy/induction.hpp"
#include "rauzy/perm.hpp"

namespace rauzy {

struct DiagramEdge {
  std::size_t source;
  std::size_t target;
  Move kind;
  std::optional<Letter> winner;
  std::optional<Letter> loser;
};

// A connected component of the labeled (optionally augmented) Rauzy diagram.
// Vertices are numbered in BFS discovery order from the seed with children
// visited in the order t, b, f, so numbering is reproducible.
class RauzyDiagram {
 public:
  static RauzyDiagram explore(const LabeledPermutation& seed, bool augmented,
                              std::size_t cap = 1'000'000);

  // A bare vertex set without edges, for checks that only need vertices.
  static RauzyDiagram from_vertices(std::vector<LabeledPermutation> vertices);

  bool augmented() const noexcept { return augmented_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<LabeledPermutation>& vertices() const noexcept { return vertices_; }
  const LabeledPermutation& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<DiagramEdge>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> find(const LabeledPermutation& p) const;
  // Index of the edge leaving `v` with the given move, if present.
  std::optional<std::size_t> out_edge(std::size_t v, Move m) const;

  // Vertices whose unlabeled permutation equals that of `p`.
  std::vector<std::size_t> unlabeled_matches(const LabeledPermutation& p) const;

 private:
  bool augmented_ = false;
  std::vector<LabeledPermutation> vertices_;
  std::vector<DiagramEdge> edges_;
  std::vector<std::array<std::optional<std::size_t>, 3>> out_;
  std::unordered_map<std::string, std::size_t> index_;
};

// True iff no two distinct vertices share an unlabeled permutation.
bool injectivity_check(const RauzyDiagram& d);

std::string to_dot(const RauzyDiagram& d);

// Right-to-left is the convention where "ftb^g" means b first.
enum class Reading { Paper, LeftToRight };

Reading parse_reading(std::string_view text);

// Letters t, b, f, each optionally followed by ^k; whitespace ignored.
// Returns the moves in execution order.
std::vector<Move> parse_move_word(std::string_view word, Reading reading = Reading::Paper);

std::string format_move_word(const std::vector<Move>& moves);  // execution order

class AllowedPath {
 public:
  // Throws InvalidMove if a move hits a reducible permutation.
  AllowedPath(LabeledPermutation start, std::vector<Move> moves);

  const LabeledPermutation& start() const noexcept { return start_; }
  const std::vector<Move>& moves() const noexcept { return moves_; }
  const LabeledPermutation& end() const noexcept { return end_; }
  // Re-derived from start and moves on each call.
  std::vector<EdgeRecord> edges() const;
  bool allowed() const { return equal_unlabeled(start_, end_); }

 private:
  LabeledPermutation start_;
  std::vector<Move> moves_;
  LabeledPermutation end_;
};

AllowedPath build_path(const LabeledPermutation& start, std::string_view word,
                       Reading reading = Reading::Paper);

// Random walk from `from` that ends in one of `targets` after between
// min_length and max_length edges, choosing uniformly at each step among
// edges that can still reach a target in time. Returns nullopt when no such
// walk exists.
std::optional<std::vector<Move>> sample_path(const RauzyDiagram& d, std::size_t from,
                                             const std::vector<std::size_t>& targets,
                                             std::size_t min_length, std::size_t max_length,
                                             std::mt19937_64& rng);

}  // namespace rauzy
