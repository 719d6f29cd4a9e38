#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rauzy/rational.hpp"

namespace rauzy {

// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t order) : order_(order), entries_(order * order) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t order);

  std::size_t order() const noexcept { return order_; }

  Integer& operator()(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }
  const Integer& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  std::vector<Integer> apply(const std::vector<Integer>& x) const;

  // Entrywise > 0 / >= 0.
  bool is_positive() const;
  bool is_nonnegative() const;
  bool has_positive_diagonal_entry() const;

  Integer row_sum(std::size_t row) const;
  Integer determinant() const;

  // Copies a block of `src` with its top-left corner placed at (row, col).
  void set_block(std::size_t row, std::size_t col, const IntMatrix& src);
  IntMatrix block(std::size_t row, std::size_t col, std::size_t order) const;

 private:
  std::size_t order_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix power(const IntMatrix& m, unsigned long exponent);

Integer min_row_sum(const IntMatrix& m);

// Smallest p <= cap with m^p entrywise positive, or nullopt. The default cap
// is Wielandt's bound (n-1)^2 + 1, past which a primitive matrix is always
// positive. 1x1 matrices are primitive iff their entry is positive.
std::optional<unsigned long> min_positive_power(const IntMatrix& m,
                                                std::optional<unsigned long> cap = {});

unsigned long wielandt_bound(std::size_t order);

inline bool is_primitive(const IntMatrix& m) { return min_positive_power(m).has_value(); }

struct SpectralBracket {
  Rational low;
  Rational high;
  unsigned iterations = 0;
};

// Collatz-Wielandt bracket of the spectral radius of a primitive matrix: for
// every positive x, min_i (Mx)_i / x_i <= rho <= max_i (Mx)_i / x_i. The
// iterate starts at the all-ones vector (so iteration 0 gives the row sums)
// and is refined by power iteration; the bracket is exact for whatever x is
// used, so rounding x only affects how fast the bracket tightens.
// Throws NotPrimitive for non-primitive input and CapExceeded when the
// width is still above `tol` after `max_iterations`.
SpectralBracket spectral_radius(const IntMatrix& m, const Rational& tol,
                                unsigned max_iterations = 200);

// Bracket from a single positive vector; exposed for tests.
SpectralBracket collatz_wielandt(const IntMatrix& m, const std::vector<Integer>& x);

}  // namespace rauzy
