#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace rauzy {

// Letters are indices into the alphabet; matrix rows and columns follow the
// same order.
using Letter = std::size_t;

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  // a1, ..., an
  static std::shared_ptr<const Alphabet> canonical(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  // Throws Parse when the name is not a letter of this alphabet.
  Letter index_of(std::string_view name) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

// pi(i) for i = 1..n stored 1-based: images[i - 1] = pi(i).
struct UnlabeledPermutation {
  std::vector<std::size_t> images;

  std::size_t size() const noexcept { return images.size(); }
  bool operator==(const UnlabeledPermutation&) const = default;
};

// Two rows over a shared alphabet. top[i] is the letter in top position i+1
// (the inverse of pi_t), likewise bottom.
class LabeledPermutation {
 public:
  LabeledPermutation(AlphabetPtr alphabet, std::vector<Letter> top,
                     std::vector<Letter> bottom);

  std::size_t size() const noexcept { return top_.size(); }
  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }

  const std::vector<Letter>& top() const noexcept { return top_; }
  const std::vector<Letter>& bottom() const noexcept { return bottom_; }

  // 0-based positions, i.e. pi_t(x) - 1 and pi_b(x) - 1.
  std::size_t top_position(Letter x) const { return top_pos_.at(x); }
  std::size_t bottom_position(Letter x) const { return bottom_pos_.at(x); }

  Letter top_last() const noexcept { return top_.back(); }
  Letter bottom_last() const noexcept { return bottom_.back(); }

  // "A B C / C B A"
  std::string display() const;
  // Two lines, columns padded.
  std::string display_rows() const;

  bool operator==(const LabeledPermutation& other) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> top_;
  std::vector<Letter> bottom_;
  std::vector<std::size_t> top_pos_;
  std::vector<std::size_t> bottom_pos_;
};

// Two whitespace-separated rows, given either on two lines or on one line
// split by '/'. The top row fixes the alphabet order unless `alphabet` is
// supplied, in which case both rows must be permutations of it.
LabeledPermutation parse_permutation(std::string_view text,
                                     AlphabetPtr alphabet = nullptr);

UnlabeledPermutation unlabeled(const LabeledPermutation& p);

bool is_irreducible(const UnlabeledPermutation& pi);
inline bool is_irreducible(const LabeledPermutation& p) {
  return is_irreducible(unlabeled(p));
}

bool equal_unlabeled(const LabeledPermutation& p, const LabeledPermutation& q);

// (a1 ... an / an ... a1)
LabeledPermutation central(std::size_t n);

// Top a1..a2g; bottom a2g, a(g-1)..a1, a(2g-1)..ag.
LabeledPermutation fg_start(std::size_t g);

}  // namespace rauzy
