#include "rauzy/perm.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "rauzy/error.hpp"

namespace rauzy {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::Parse, "duplicate letter in alphabet");
}

AlphabetPtr Alphabet::canonical(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  return std::make_shared<const Alphabet>(std::move(names));
}

Letter Alphabet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    fail(ErrorKind::Parse, "letter '" + std::string(name) + "' is not in the alphabet");
  return static_cast<Letter>(it - names_.begin());
}

namespace {

std::vector<std::size_t> positions_of(const std::vector<Letter>& row, std::size_t n,
                                      const char* which) {
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] >= n) fail(ErrorKind::Parse, std::string(which) + " row has a letter outside the alphabet");
    if (pos[row[i]] != n) fail(ErrorKind::Parse, std::string("duplicate letter in ") + which + " row");
    pos[row[i]] = i;
  }
  return pos;
}

}  // namespace

LabeledPermutation::LabeledPermutation(AlphabetPtr alphabet, std::vector<Letter> top,
                                       std::vector<Letter> bottom)
    : alphabet_(std::move(alphabet)), top_(std::move(top)), bottom_(std::move(bottom)) {
  if (!alphabet_) fail(ErrorKind::Parse, "missing alphabet");
  const std::size_t n = alphabet_->size();
  if (top_.size() != bottom_.size())
    fail(ErrorKind::Parse, "row length mismatch (" + std::to_string(top_.size()) + " vs " +
                               std::to_string(bottom_.size()) + ")");
  if (top_.size() != n) fail(ErrorKind::Parse, "rows do not cover the alphabet");
  if (n < 2) fail(ErrorKind::Parse, "a labeled permutation needs at least 2 letters");
  top_pos_ = positions_of(top_, n, "top");
  bottom_pos_ = positions_of(bottom_, n, "bottom");
}

std::string LabeledPermutation::display() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < top_.size(); ++i) out << (i ? " " : "") << alphabet_->name(top_[i]);
  out << " /";
  for (Letter x : bottom_) out << ' ' << alphabet_->name(x);
  return out.str();
}

std::string LabeledPermutation::display_rows() const {
  std::size_t width = 0;
  for (const auto& name : alphabet_->names()) width = std::max(width, name.size());
  auto row = [&](const std::vector<Letter>& letters) {
    std::string line;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const std::string& name = alphabet_->name(letters[i]);
      if (i) line += ' ';
      line += name;
      if (i + 1 < letters.size()) line.append(width - name.size(), ' ');
    }
    return line;
  };
  return row(top_) + "\n" + row(bottom_);
}

bool LabeledPermutation::operator==(const LabeledPermutation& other) const {
  return top_ == other.top_ && bottom_ == other.bottom_ &&
         (alphabet_ == other.alphabet_ || *alphabet_ == *other.alphabet_);
}

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

}  // namespace

LabeledPermutation parse_permutation(std::string_view text, AlphabetPtr alphabet) {
  std::string_view top_text, bottom_text;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    top_text = text.substr(0, slash);
    bottom_text = text.substr(slash + 1);
    if (bottom_text.find('/') != std::string_view::npos)
      fail(ErrorKind::Parse, "more than one '/' separator");
  } else {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) lines.push_back(line);
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    if (lines.size() != 2)
      fail(ErrorKind::Parse, "expected two rows, given on two lines or separated by '/'");
    top_text = lines[0];
    bottom_text = lines[1];
  }
  std::vector<std::string> top_words = split_words(top_text);
  std::vector<std::string> bottom_words = split_words(bottom_text);
  if (top_words.size() != bottom_words.size())
    fail(ErrorKind::Parse, "row length mismatch (" + std::to_string(top_words.size()) + " vs " +
                               std::to_string(bottom_words.size()) + ")");
  if (top_words.size() < 2) fail(ErrorKind::Parse, "a labeled permutation needs at least 2 letters");

  if (!alphabet) {
    std::vector<std::string> sorted = top_words;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorKind::Parse, "duplicate letter in top row");
    alphabet = std::make_shared<const Alphabet>(top_words);
  }
  std::unordered_map<std::string, Letter> index;
  for (Letter x = 0; x < alphabet->size(); ++x) index.emplace(alphabet->name(x), x);
  auto lookup = [&](const std::vector<std::string>& words, const char* which) {
    std::vector<Letter> row;
    row.reserve(words.size());
    for (const auto& w : words) {
      auto it = index.find(w);
      if (it == index.end())
        fail(ErrorKind::Parse, std::string("rows over different letter sets: '") + w + "' in " +
                                   which + " row");
      row.push_back(it->second);
    }
    return row;
  };
  return LabeledPermutation(alphabet, lookup(top_words, "top"), lookup(bottom_words, "bottom"));
}

UnlabeledPermutation unlabeled(const LabeledPermutation& p) {
  UnlabeledPermutation pi;
  pi.images.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) pi.images[i] = p.bottom_position(p.top()[i]) + 1;
  return pi;
}

bool is_irreducible(const UnlabeledPermutation& pi) {
  // {1..k} is invariant exactly when the running maximum of pi(1..k) is k.
  std::size_t running_max = 0;
  for (std::size_t k = 1; k < pi.size(); ++k) {
    running_max = std::max(running_max, pi.images[k - 1]);
    if (running_max == k) return false;
  }
  return true;
}

bool equal_unlabeled(const LabeledPermutation& p, const LabeledPermutation& q) {
  return unlabeled(p) == unlabeled(q);
}

LabeledPermutation central(std::size_t n) {
  if (n < 2) fail(ErrorKind::Domain, "central permutation needs n >= 2");
  std::vector<Letter> top(n), bottom(n);
  for (std::size_t i = 0; i < n; ++i) {
    top[i] = i;
    bottom[i] = n - 1 - i;
  }
  return LabeledPermutation(Alphabet::canonical(n), std::move(top), std::move(bottom));
}

LabeledPermutation fg_start(std::size_t g) {
  if (g < 2) fail(ErrorKind::Domain, "f_g family needs g >= 2");
  const std::size_t n = 2 * g;
  std::vector<Letter> top(n), bottom;
  bottom.reserve(n);
  for (std::size_t i = 0; i < n; ++i) top[i] = i;
  // 0-based: a_k is letter k-1.
  bottom.push_back(n - 1);
  for (std::size_t k = g - 1; k >= 1; --k) bottom.push_back(k - 1);
  for (std::size_t k = n - 1; k >= g; --k) bottom.push_back(k - 1);
  return LabeledPermutation(Alphabet::canonical(n), std::move(top), std::move(bottom));
}

}  // namespace rauzy
