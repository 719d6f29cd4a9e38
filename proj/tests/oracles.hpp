#pragma once

// Reference implementations used only by tests. Nothing here calls into the
// library's move, matrix or spectral code.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rauzy/linalg.hpp"
#include "rauzy/perm.hpp"

namespace oracle {

using Row = std::vector<int>;  // letter indices
using Mat = std::vector<std::vector<mpz_class>>;

struct Rows {
  Row top, bottom;
  bool operator==(const Rows&) const = default;
};

inline Rows rows_of(const rauzy::LabeledPermutation& p) {
  Rows r;
  for (auto x : p.top()) r.top.push_back(static_cast<int>(x));
  for (auto x : p.bottom()) r.bottom.push_back(static_cast<int>(x));
  return r;
}

inline std::size_t pos(const Row& row, int x) {
  return static_cast<std::size_t>(std::find(row.begin(), row.end(), x) - row.begin());
}

// pi(i) = bottom position of the i-th top letter, 1-based
inline std::vector<int> images(const Rows& r) {
  std::vector<int> out;
  for (int x : r.top) out.push_back(static_cast<int>(pos(r.bottom, x)) + 1);
  return out;
}

inline bool irreducible(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  for (int k = 1; k < n; ++k) {
    bool closed = true;
    for (int i = 0; i < k; ++i) closed = closed && pi[i] <= k;
    if (closed) return false;
  }
  return true;
}

// Top move: the bottom loser is re-seated right after the top winner in the bottom row.
inline Rows top_move(Rows r) {
  const int w = r.top.back(), l = r.bottom.back();
  r.bottom.pop_back();
  r.bottom.insert(r.bottom.begin() + static_cast<long>(pos(r.bottom, w)) + 1, l);
  return r;
}

inline Rows bottom_move(Rows r) {
  const int w = r.bottom.back(), l = r.top.back();
  r.top.pop_back();
  r.top.insert(r.top.begin() + static_cast<long>(pos(r.top, w)) + 1, l);
  return r;
}

inline Rows flip(Rows r) {
  std::reverse(r.top.begin(), r.top.end());
  std::reverse(r.bottom.begin(), r.bottom.end());
  std::swap(r.top, r.bottom);
  return r;
}

inline Mat identity(std::size_t n) {
  Mat m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat add(const Mat& a, const Mat& b) {
  Mat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += b[i][j];
  return c;
}

inline Mat pow(const Mat& a, unsigned k) {
  Mat r = identity(a.size());
  for (unsigned i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

inline Mat from(const rauzy::IntMatrix& m) {
  Mat out(m.order(), std::vector<mpz_class>(m.order()));
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) out[i][j] = m(i, j);
  return out;
}

inline Mat from(std::initializer_list<std::initializer_list<long>> rows) {
  Mat out;
  for (auto& r : rows) {
    out.emplace_back();
    for (long v : r) out.back().emplace_back(v);
  }
  return out;
}

// Cofactor expansion; fine for n <= 8.
inline mpz_class det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  mpz_class total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      minor.emplace_back();
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) minor.back().push_back(m[i][j]);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return total;
}

// Replays moves on plain rows, accumulating Id + E(winner, loser), then P.
inline Mat path_matrix(const Rows& start, const std::string& exec_order) {
  const std::size_t n = start.top.size();
  Rows cur = start;
  Mat v = identity(n);
  for (char c : exec_order) {
    Mat e = identity(n);
    if (c == 't') {
      e[cur.top.back()][cur.bottom.back()] += 1;
      cur = top_move(cur);
    } else if (c == 'b') {
      e[cur.bottom.back()][cur.top.back()] += 1;
      cur = bottom_move(cur);
    } else {
      cur = flip(cur);
    }
    v = mul(v, e);
  }
  // letter x sits where the end row puts it; P sends a to the end letter in x's start slot
  Mat p(n, std::vector<mpz_class>(n, 0));
  for (std::size_t b = 0; b < n; ++b) p[cur.top[pos(start.top, static_cast<int>(b))]][b] = 1;
  return mul(v, p);
}

// Largest real root of x^4 - x^3 - x^2 - x + 1 by bisection on exact rationals.
inline mpq_class quartic_root(const mpq_class& width) {
  auto f = [](const mpq_class& x) -> mpq_class { return x * x * x * x - x * x * x - x * x - x + 1; };
  mpq_class lo(3, 2), hi(2);  // f(3/2) < 0 < f(2)
  while (hi - lo > width) {
    mpq_class mid = (lo + hi) / 2;
    mid.canonicalize();
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

// All bottoms over a fixed top 0..n-1.
inline std::vector<Rows> all_rows(int n) {
  std::vector<Rows> out;
  Row top(n);
  std::iota(top.begin(), top.end(), 0);
  Row bottom = top;
  do out.push_back({top, bottom});
  while (std::next_permutation(bottom.begin(), bottom.end()));
  return out;
}

inline rauzy::LabeledPermutation to_perm(const Rows& r) {
  auto a = rauzy::Alphabet::canonical(r.top.size());
  std::vector<rauzy::Letter> t(r.top.begin(), r.top.end()), b(r.bottom.begin(), r.bottom.end());
  return rauzy::LabeledPermutation(a, t, b);
}

}  // namespace oracle
