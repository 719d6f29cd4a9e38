#include "rauzy/linalg.hpp"

#include <algorithm>
#include <cstdint>

#include "rauzy/error.hpp"

namespace rauzy {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != order_) fail(ErrorKind::Parse, "matrix literal is not square");
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t order) {
  IntMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (order_ != rhs.order_) fail(ErrorKind::Domain, "matrix order mismatch");
  IntMatrix out(order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t k = 0; k < order_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < order_; ++j) {
        const Integer& b = rhs(k, j);
        if (b != 0) mpz_addmul(out(i, j).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      }
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (order_ != rhs.order_) fail(ErrorKind::Domain, "matrix order mismatch");
  IntMatrix out(order_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& x) const {
  if (x.size() != order_) fail(ErrorKind::Domain, "vector length mismatch");
  std::vector<Integer> y(order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j)
      if ((*this)(i, j) != 0) mpz_addmul(y[i].get_mpz_t(), (*this)(i, j).get_mpz_t(), x[j].get_mpz_t());
  return y;
}

bool IntMatrix::is_positive() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& v) { return v > 0; });
}

bool IntMatrix::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& v) { return v >= 0; });
}

bool IntMatrix::has_positive_diagonal_entry() const {
  for (std::size_t i = 0; i < order_; ++i)
    if ((*this)(i, i) > 0) return true;
  return false;
}

Integer IntMatrix::row_sum(std::size_t row) const {
  Integer s = 0;
  for (std::size_t j = 0; j < order_; ++j) s += (*this)(row, j);
  return s;
}

Integer IntMatrix::determinant() const {
  // Bareiss fraction-free elimination.
  if (order_ == 0) return 1;
  IntMatrix a = *this;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < order_; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < order_ && a(swap, k) == 0) ++swap;
      if (swap == order_) return 0;
      for (std::size_t j = 0; j < order_; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < order_; ++i) {
      for (std::size_t j = k + 1; j < order_; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(order_ - 1, order_ - 1);
}

void IntMatrix::set_block(std::size_t row, std::size_t col, const IntMatrix& src) {
  if (row + src.order() > order_ || col + src.order() > order_)
    fail(ErrorKind::Domain, "block does not fit");
  for (std::size_t i = 0; i < src.order(); ++i)
    for (std::size_t j = 0; j < src.order(); ++j) (*this)(row + i, col + j) = src(i, j);
}

IntMatrix IntMatrix::block(std::size_t row, std::size_t col, std::size_t order) const {
  if (row + order > order_ || col + order > order_) fail(ErrorKind::Domain, "block out of range");
  IntMatrix out(order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) out(i, j) = (*this)(row + i, col + j);
  return out;
}

IntMatrix power(const IntMatrix& m, unsigned long exponent) {
  IntMatrix result = IntMatrix::identity(m.order());
  IntMatrix base = m;
  while (exponent) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Integer min_row_sum(const IntMatrix& m) {
  if (m.order() == 0) fail(ErrorKind::Domain, "empty matrix");
  Integer best = m.row_sum(0);
  for (std::size_t i = 1; i < m.order(); ++i) best = std::min(best, m.row_sum(i));
  return best;
}

unsigned long wielandt_bound(std::size_t order) {
  const unsigned long n = order;
  return n == 0 ? 1 : (n - 1) * (n - 1) + 1;
}

namespace {

// Zero pattern of a nonnegative matrix; products over the boolean semiring.
class BoolMatrix {
 public:
  explicit BoolMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}
  explicit BoolMatrix(const IntMatrix& m) : BoolMatrix(m.order()) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) bits_[i * n_ + j] = m(i, j) != 0;
  }

  BoolMatrix operator*(const BoolMatrix& rhs) const {
    BoolMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        if (!bits_[i * n_ + k]) continue;
        for (std::size_t j = 0; j < n_; ++j) out.bits_[i * n_ + j] |= rhs.bits_[k * n_ + j];
      }
    return out;
  }

  bool all() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; });
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

}  // namespace

std::optional<unsigned long> min_positive_power(const IntMatrix& m,
                                                std::optional<unsigned long> cap) {
  if (!m.is_nonnegative()) fail(ErrorKind::Domain, "primitivity needs a nonnegative matrix");
  const unsigned long limit = cap.value_or(wielandt_bound(m.order()));
  if (m.order() == 0 || limit == 0) return std::nullopt;
  if (m.order() == 1) {
    if (m(0, 0) > 0) return 1UL;
    return std::nullopt;
  }

  // squares[k] = B^(2^k) for 2^k <= limit.
  std::vector<BoolMatrix> squares{BoolMatrix(m)};
  while ((1UL << squares.size()) <= limit) squares.push_back(squares.back() * squares.back());

  // Positivity of B^p is monotone in p (a positive power forces primitivity,
  // hence no zero columns), so binary lifting finds the largest p <= limit
  // with B^p not positive.
  std::optional<BoolMatrix> acc;
  unsigned long p = 0;
  for (std::size_t k = squares.size(); k-- > 0;) {
    const unsigned long step = 1UL << k;
    if (p + step > limit) continue;
    BoolMatrix candidate = acc ? *acc * squares[k] : squares[k];
    if (!candidate.all()) {
      acc = std::move(candidate);
      p += step;
    }
  }
  if (p >= limit) return std::nullopt;
  BoolMatrix check = acc ? *acc * squares[0] : squares[0];
  if (!check.all()) return std::nullopt;
  return p + 1;
}

SpectralBracket collatz_wielandt(const IntMatrix& m, const std::vector<Integer>& x) {
  for (const auto& v : x)
    if (v <= 0) fail(ErrorKind::Domain, "Collatz-Wielandt vector must be positive");
  std::vector<Integer> y = m.apply(x);
  SpectralBracket b;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational r(y[i], x[i]);
    r.canonicalize();
    if (i == 0 || r < b.low) b.low = r;
    if (i == 0 || r > b.high) b.high = r;
  }
  return b;
}

namespace {

std::size_t bit_length(const Integer& v) { return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2); }

// Scales y down so its largest entry has about `precision` bits, rounding
// each entry up so the result stays positive.
std::vector<Integer> renormalize(const std::vector<Integer>& y, std::size_t precision) {
  std::size_t top = 0;
  for (const auto& v : y) top = std::max(top, bit_length(v));
  std::vector<Integer> x(y.size());
  if (top <= precision) {
    for (std::size_t i = 0; i < y.size(); ++i) x[i] = y[i] > 0 ? y[i] : Integer(1);
    return x;
  }
  const mp_bitcnt_t shift = top - precision;
  for (std::size_t i = 0; i < y.size(); ++i) {
    mpz_cdiv_q_2exp(x[i].get_mpz_t(), y[i].get_mpz_t(), shift);
    if (x[i] <= 0) x[i] = 1;
  }
  return x;
}

}  // namespace

SpectralBracket spectral_radius(const IntMatrix& m, const Rational& tol, unsigned max_iterations) {
  if (tol <= 0) fail(ErrorKind::Domain, "tolerance must be positive");
  if (!is_primitive(m)) fail(ErrorKind::NotPrimitive, "spectral bracket needs a primitive matrix");

  std::vector<Integer> x(m.order(), Integer(1));
  SpectralBracket b = collatz_wielandt(m, x);
  if (b.high - b.low <= tol) return b;

  // Working precision: enough bits that rounding x cannot dominate the width.
  const Integer inverse_tol = tol.get_den() / tol.get_num() + 1;
  std::size_t precision = 64 + bit_length(inverse_tol) + 2 * bit_length(Integer(m.order()));
  for (std::size_t i = 0; i < m.order(); ++i) precision += bit_length(m.row_sum(i)) / m.order() + 1;

  // Power iteration on M^(2^j): each round squares the accelerator while its
  // entries stay moderate, so the eigenvector error shrinks doubly
  // exponentially.
  IntMatrix accel = m;
  constexpr std::size_t kMaxAccelBits = 1 << 13;
  for (unsigned it = 1; it <= max_iterations; ++it) {
    x = renormalize(accel.apply(x), precision);
    SpectralBracket next = collatz_wielandt(m, x);
    next.iterations = it;
    b = next;
    if (b.high - b.low <= tol) return b;
    std::size_t accel_bits = 0;
    for (std::size_t i = 0; i < m.order(); ++i)
      for (std::size_t j = 0; j < m.order(); ++j) accel_bits = std::max(accel_bits, bit_length(accel(i, j)));
    if (2 * accel_bits < kMaxAccelBits) accel = accel * accel;
    precision += 8;
  }
  fail(ErrorKind::CapExceeded, "spectral bracket did not reach tolerance after " +
                                   std::to_string(max_iterations) + " iterations");
}

}  // namespace rauzy
