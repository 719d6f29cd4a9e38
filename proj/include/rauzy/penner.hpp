#pragma once

#include <string>
#include <vector>

#include "rauzy/fg.hpp"
#include "rauzy/linalg.hpp"
#include "rauzy/rational.hpp"

namespace rauzy {

struct PennerMatrices {
  std::size_t g = 0;
  Integer n;
  IntMatrix a, b, c, d;  // 3x3, d = a + b c
  IntMatrix m;           // 3g x 3g
};

// Block companion matrix: block row 0 is [0 ... 0 Id], row 1 is
// [A B 0 ... 0 C], row i >= 2 has Id in column i-1.
PennerMatrices build_penner(std::size_t g, const Integer& n);

// Closed form of M^g from its blocks (separate forms for g = 3 and g >= 4).
IntMatrix penner_power_closed_form(const PennerMatrices& p);

bool verify_power_identity(std::size_t g, const Integer& n);

struct StretchReport {
  std::size_t g = 0;
  Integer n;
  Integer min_row_sum_power;  // of M^g
  SpectralBracket rho;
  std::pair<double, double> teich_length;
  Rational low_pow_g;  // rho.low^g
  std::vector<CheckItem> checks;

  bool ok() const { return all_passed(checks); }
};

// `slack` is how far rho.low^g may fall below n+1.
StretchReport stretch_bounds(std::size_t g, const Integer& n, const Rational& tol,
                             const Rational& slack);

struct RotationReport {
  std::size_t g = 0;
  std::vector<std::string> orbit;  // b1, b2, ..., b0
  std::size_t steps = 0;
  long distance = 0;
  Rational value;
  std::vector<std::string> assumptions;
};

// Curves a_i, b_i, c_i (i mod g) with f acting as the rotation on curves
// disjoint from a_0, b_0, c_0. Disjointness comes from a fixed table.
RotationReport lc_upper_rotation(std::size_t g);

// Whether curves x_i and y_j are disjoint according to the table; the letters
// are 'a', 'b' or 'c'.
bool rotation_disjoint(std::size_t g, char x, std::size_t i, char y, std::size_t j);

// Block matrix [[1, b], [0, A]].
IntMatrix homology_block(const IntMatrix& a, const std::vector<Integer>& b);

// [[1, b S], [0, A^n]] with S = I + A + ... + A^(n-1), or with S missing the
// identity term when `with_identity` is false.
IntMatrix homology_closed_form(const IntMatrix& a, const std::vector<Integer>& b, unsigned long n,
                               bool with_identity = true);

bool homology_power_check(const IntMatrix& a, const std::vector<Integer>& b, unsigned long n);

struct HgReport {
  std::size_t g = 0;
  Integer n;  // g^g
  SpectralBracket rho;
  std::pair<double, double> teich_length;
  Rational lc_upper;
  std::vector<CheckItem> checks;

  bool ok() const { return all_passed(checks); }
};

HgReport hg_sequence(std::size_t g, const Rational& tol, std::size_t max_genus = 8);

}  // namespace rauzy
