#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rauzy/linalg.hpp"

using namespace rauzy;

namespace {
IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int max_entry, int zero_bias) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = static_cast<long>(rng() % zero_bias == 0 ? 1 + rng() % max_entry : 0);
  return m;
}
}  // namespace

TEST_CASE("products match the oracle") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const auto a = random_matrix(rng, n, 9, 2), b = random_matrix(rng, n, 9, 2);
    CHECK(oracle::from(a * b) == oracle::mul(oracle::from(a), oracle::from(b)));
    CHECK(oracle::from(a + b) == oracle::add(oracle::from(a), oracle::from(b)));
    CHECK(oracle::from(power(a, 3)) == oracle::pow(oracle::from(a), 3));
    CHECK(a.determinant() == oracle::det(oracle::from(a)));
  }
}

TEST_CASE("min_row_sum") {
  CHECK(min_row_sum(IntMatrix::identity(4)) == 1);
  CHECK(min_row_sum(IntMatrix{{1, 2}, {0, 1}}) == 1);
}

TEST_CASE("primitivity exponent is exact") {
  CHECK_FALSE(min_positive_power(IntMatrix::identity(3)).has_value());
  CHECK(*min_positive_power(IntMatrix{{2}}) == 1);
  CHECK_FALSE(min_positive_power(IntMatrix{{0}}).has_value());
  // Wielandt's extremal matrix reaches (n-1)^2 + 1
  IntMatrix w(4);
  w(0, 1) = w(1, 2) = w(2, 3) = w(3, 0) = w(3, 1) = 1;
  CHECK(*min_positive_power(w) == 10);
  CHECK(wielandt_bound(4) == 10);
  CHECK_FALSE(min_positive_power(w, 9).has_value());

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 4;
    const auto m = random_matrix(rng, n, 2, 3);
    const auto p = min_positive_power(m);
    // oracle: first power with all entries positive, within the Wielandt bound
    std::optional<unsigned long> expected;
    oracle::Mat acc = oracle::from(m);
    for (unsigned long k = 1; k <= (n - 1) * (n - 1) + 1; ++k) {
      bool pos = true;
      for (auto& row : acc)
        for (auto& x : row) pos = pos && x > 0;
      if (pos) {
        expected = k;
        break;
      }
      acc = oracle::mul(acc, oracle::from(m));
    }
    CHECK(p == expected);
    if (p) {
      CHECK(power(m, *p).is_positive());
      if (*p > 1) CHECK_FALSE(power(m, *p - 1).is_positive());
    }
  }
}

TEST_CASE("spectral brackets") {
  const Rational tol = make_rational(1, 1000000000);
  const IntMatrix fib{{1, 1}, {1, 0}};
  const auto b = spectral_radius(fib, tol);
  CHECK(b.low <= b.high);
  CHECK(b.high - b.low <= tol);
  // golden ratio: low^2 - low - 1 <= 0 <= high^2 - high - 1
  CHECK(b.low * b.low - b.low - 1 <= 0);
  CHECK(b.high * b.high - b.high - 1 >= 0);

  const IntMatrix m{{2, 1, 0}, {1, 1, 1}, {0, 1, 3}};
  const auto r = spectral_radius(m, tol);
  CHECK(r.low >= Rational(min_row_sum(m)));
  for (unsigned k : {2u, 3u}) {
    const auto rk = spectral_radius(power(m, k), tol);
    Rational lo = 1, hi = 1;
    for (unsigned i = 0; i < k; ++i) lo *= r.low, hi *= r.high;
    CHECK(rk.low <= hi + make_rational(1, 100000));
    CHECK(rk.high >= lo - make_rational(1, 100000));
  }

  CHECK_KIND(spectral_radius(IntMatrix{{0, 1}, {1, 0}}, tol), NotPrimitive);
  CHECK_KIND(spectral_radius(IntMatrix::identity(3), tol), NotPrimitive);
  const auto one = spectral_radius(IntMatrix{{5}}, tol);
  CHECK(one.low == 5);
  CHECK(one.high == 5);
}

TEST_CASE("collatz-wielandt bracket from a vector") {
  const IntMatrix m{{1, 1}, {1, 0}};
  const auto b = collatz_wielandt(m, {2, 1});
  CHECK(b.low == make_rational(3, 2));
  CHECK(b.high == 2);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("0.25") == make_rational(1, 4));
  CHECK(parse_rational("1e-3") == make_rational(1, 1000));
  CHECK_KIND(parse_rational("abc"), Parse);
  CHECK(to_decimal(make_rational(1, 3), 4) == "0.3333");
}
