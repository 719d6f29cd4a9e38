#include "rauzy/penner.hpp"

#include "rauzy/error.hpp"

namespace rauzy {

namespace {

IntMatrix block3(std::initializer_list<std::initializer_list<long>> rows) { return IntMatrix(rows); }

void require_penner(std::size_t g) {
  if (g < 3) fail(ErrorKind::Domain, "Penner family needs g >= 3");
}

// Adds src into the 3x3 block (bi, bj).
void add_block(IntMatrix& m, std::size_t bi, std::size_t bj, const IntMatrix& src) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(3 * bi + i, 3 * bj + j) += src(i, j);
}

}  // namespace

PennerMatrices build_penner(std::size_t g, const Integer& n) {
  require_penner(g);
  if (n < 1) fail(ErrorKind::Domain, "Penner family needs n >= 1");
  PennerMatrices p;
  p.g = g;
  p.n = n;
  p.a = block3({{1, 1, 1}, {0, 1, 0}, {1, 1, 2}});
  p.a(0, 0) += n;
  p.a(1, 0) += n;
  p.a(2, 0) += n;
  p.b = block3({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}});
  p.c = block3({{0, 0, 1}, {0, 0, 0}, {0, 0, 1}});
  p.d = p.a + p.b * p.c;

  p.m = IntMatrix(3 * g);
  const IntMatrix id = IntMatrix::identity(3);
  add_block(p.m, 0, g - 1, id);
  add_block(p.m, 1, 0, p.a);
  add_block(p.m, 1, 1, p.b);
  add_block(p.m, 1, g - 1, p.c);
  for (std::size_t i = 2; i < g; ++i) add_block(p.m, i, i - 1, id);
  return p;
}

IntMatrix penner_power_closed_form(const PennerMatrices& p) {
  const std::size_t g = p.g;
  const IntMatrix& a = p.a;
  const IntMatrix& b = p.b;
  const IntMatrix& c = p.c;
  const IntMatrix& d = p.d;
  IntMatrix out(3 * g);
  if (g == 3) {
    add_block(out, 0, 0, a);
    add_block(out, 0, 1, b);
    add_block(out, 0, 2, c);
    add_block(out, 1, 0, c * a);
    add_block(out, 1, 1, d + c * b);
    add_block(out, 1, 2, b * a + c);
    add_block(out, 2, 0, b * a);
    add_block(out, 2, 1, c);
    add_block(out, 2, 2, d);
    return out;
  }
  add_block(out, 0, 0, a);
  add_block(out, 0, 1, b);
  add_block(out, 0, g - 1, c);
  add_block(out, 1, 0, c * a);
  add_block(out, 1, 1, d + c * b);
  add_block(out, 1, 2, b * a);
  add_block(out, 1, g - 1, c * c);
  for (std::size_t i = 2; i + 1 < g; ++i) {
    add_block(out, i, i - 1, c);
    add_block(out, i, i, d);
    add_block(out, i, i + 1, b * a);
  }
  add_block(out, g - 1, 0, b * a);
  add_block(out, g - 1, g - 2, c);
  add_block(out, g - 1, g - 1, d);
  return out;
}

bool verify_power_identity(std::size_t g, const Integer& n) {
  const PennerMatrices p = build_penner(g, n);
  IntMatrix acc = p.m;
  for (std::size_t i = 1; i < g; ++i) acc = acc * p.m;
  return acc == penner_power_closed_form(p);
}

namespace {

Rational pow_rational(const Rational& q, std::size_t e) {
  Rational r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

StretchReport stretch_bounds(std::size_t g, const Integer& n, const Rational& tol,
                             const Rational& slack) {
  const PennerMatrices p = build_penner(g, n);
  StretchReport r;
  r.g = g;
  r.n = n;
  r.min_row_sum_power = min_row_sum(power(p.m, g));
  r.rho = spectral_radius(p.m, tol);
  r.teich_length = {log_lower(r.rho.low), log_upper(r.rho.high)};
  r.low_pow_g = pow_rational(r.rho.low, g);
  const Integer target = n + 1;
  r.checks.push_back({"min row sum of M^g = n+1", r.min_row_sum_power == target,
                      r.min_row_sum_power.get_str()});
  r.checks.push_back({"rho_low^g >= n+1", r.low_pow_g >= Rational(target) - slack, to_decimal(r.low_pow_g)});
  return r;
}

bool rotation_disjoint(std::size_t g, char x, std::size_t i, char y, std::size_t j) {
  require_penner(g);
  for (char ch : {x, y})
    if (ch != 'a' && ch != 'b' && ch != 'c') fail(ErrorKind::Domain, "curve family must be a, b or c");
  // Asserted input: rho^k(b) misses a, b and c for k != 0 mod g, and by
  // rotation every b_i misses the curves indexed j != i. Nothing else is
  // recorded.
  if ((i % g + g - j % g) % g == 0) return false;
  return x == 'b' || y == 'b';
}

RotationReport lc_upper_rotation(std::size_t g) {
  require_penner(g);
  RotationReport r;
  r.g = g;
  r.assumptions.push_back("disjointness-table-asserted");
  std::size_t idx = 1;
  r.orbit.push_back("b1");
  while (idx % g != 0) {
    for (char twist : {'a', 'b', 'c'})
      if (!rotation_disjoint(g, 'b', idx, twist, 0))
        fail(ErrorKind::Internal, "rotation orbit meets a twist curve");
    idx = (idx + 1) % g;
    r.orbit.push_back("b" + std::to_string(idx));
    ++r.steps;
  }
  r.distance = rotation_disjoint(g, 'b', 1, 'b', 0) ? 1 : 2;
  r.value = make_rational(r.distance, static_cast<long>(r.steps));
  return r;
}

IntMatrix homology_block(const IntMatrix& a, const std::vector<Integer>& b) {
  if (b.size() != a.order()) fail(ErrorKind::Domain, "coupling vector length must match A");
  const std::size_t d = a.order();
  IntMatrix h(d + 1);
  h(0, 0) = 1;
  for (std::size_t j = 0; j < d; ++j) h(0, j + 1) = b[j];
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) h(i + 1, j + 1) = a(i, j);
  return h;
}

IntMatrix homology_closed_form(const IntMatrix& a, const std::vector<Integer>& b, unsigned long n,
                               bool with_identity) {
  if (n < 1) fail(ErrorKind::Domain, "power must be at least 1");
  const std::size_t d = a.order();
  IntMatrix sum(d);
  IntMatrix term = IntMatrix::identity(d);
  for (unsigned long k = 0; k < n; ++k) {
    if (k > 0 || with_identity) sum = sum + term;
    term = term * a;
  }
  // term = A^n now.
  std::vector<Integer> top(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) top[j] += b[i] * sum(i, j);
  return homology_block(term, top);
}

bool homology_power_check(const IntMatrix& a, const std::vector<Integer>& b, unsigned long n) {
  const IntMatrix h = homology_block(a, b);
  IntMatrix acc = h;
  for (unsigned long k = 1; k < n; ++k) acc = acc * h;
  return acc == homology_closed_form(a, b, n);
}

HgReport hg_sequence(std::size_t g, const Rational& tol, std::size_t max_genus) {
  require_penner(g);
  if (g > max_genus)
    fail(ErrorKind::CapExceeded, "genus " + std::to_string(g) + " above the cap " + std::to_string(max_genus));
  HgReport r;
  r.g = g;
  mpz_ui_pow_ui(r.n.get_mpz_t(), g, g);
  const PennerMatrices p = build_penner(g, r.n);
  r.rho = spectral_radius(p.m, tol);
  r.teich_length = {log_lower(r.rho.low), log_upper(r.rho.high)};
  r.lc_upper = lc_upper_rotation(g).value;
  r.checks.push_back({"rho >= g", r.rho.low >= static_cast<long>(g) - tol, to_decimal(r.rho.low)});
  r.checks.push_back({"lc upper 1/(g-1)", r.lc_upper == make_rational(1, static_cast<long>(g) - 1),
                      to_decimal(r.lc_upper)});
  return r;
}

}  // namespace rauzy
