#include "rauzy/fg.hpp"

#include <algorithm>
#include <random>

#include "rauzy/error.hpp"
#include "rauzy/surface.hpp"

namespace rauzy {

bool all_passed(const std::vector<CheckItem>& items) {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

namespace {

void require_genus(std::size_t g) {
  if (g < 2) fail(ErrorKind::Domain, "genus must be at least 2");
}

// Letters given 1-based, over the canonical alphabet.
LabeledPermutation from_indices(std::size_t n, const std::vector<std::size_t>& top,
                                const std::vector<std::size_t>& bottom) {
  std::vector<Letter> t, b;
  for (auto i : top) t.push_back(letter(i));
  for (auto i : bottom) b.push_back(letter(i));
  return LabeledPermutation(Alphabet::canonical(n), std::move(t), std::move(b));
}

// lo, lo+1, ..., hi (empty when lo > hi)
void up(std::vector<std::size_t>& row, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i <= hi && lo <= hi; ++i) row.push_back(i);
}
// hi, hi-1, ..., lo (empty when lo > hi)
void down(std::vector<std::size_t>& row, std::size_t hi, std::size_t lo) {
  if (lo > hi) return;
  for (std::size_t i = hi + 1; i-- > lo;) row.push_back(i);
}

}  // namespace

AllowedPath build_gamma(std::size_t g) {
  require_genus(g);
  return build_path(fg_start(g), "ftb^" + std::to_string(g), Reading::Paper);
}

LabeledPermutation fg_after_bottom(std::size_t g, std::size_t k) {
  require_genus(g);
  if (k < 1 || k > g) fail(ErrorKind::Domain, "k must lie in 1..g");
  std::vector<std::size_t> top, bottom;
  up(top, 1, g);
  up(top, 2 * g - k + 1, 2 * g);
  up(top, g + 1, 2 * g - k);
  bottom.push_back(2 * g);
  down(bottom, g - 1, 1);
  down(bottom, 2 * g - 1, g);
  return from_indices(2 * g, top, bottom);
}

LabeledPermutation fg_after_top(std::size_t g) {
  require_genus(g);
  std::vector<std::size_t> top, bottom;
  up(top, 1, 2 * g);
  bottom.push_back(2 * g);
  down(bottom, g, 1);
  down(bottom, 2 * g - 1, g + 1);
  return from_indices(2 * g, top, bottom);
}

LabeledPermutation fg_end(std::size_t g) {
  require_genus(g);
  std::vector<std::size_t> top, bottom;
  up(top, g + 1, 2 * g - 1);
  up(top, 1, g);
  top.push_back(2 * g);
  down(bottom, 2 * g, 1);
  return from_indices(2 * g, top, bottom);
}

bool intermediate_check(std::size_t g) {
  LabeledPermutation p = fg_start(g);
  for (std::size_t k = 1; k <= g; ++k) {
    p = apply_bottom(p).target;
    if (!(p == fg_after_bottom(g, k))) return false;
  }
  p = apply_top(p).target;
  if (!(p == fg_after_top(g))) return false;
  p = apply_flip(p).target;
  return p == fg_end(g);
}

IntMatrix block_matrix(std::size_t g) {
  require_genus(g);
  const std::size_t n = 2 * g;
  IntMatrix v(n);
  // Top g rows: [A_{g x g-1} | Id + B | B_{g x 1}].
  for (std::size_t c = 0; c + 1 < g; ++c) v(g - 1, c) = 1;
  for (std::size_t i = 0; i < g; ++i) v(i, g - 1 + i) = 1;
  v(g - 1, 2 * g - 2) += 1;
  v(g - 1, 2 * g - 1) = 1;
  // Middle g-1 rows: [Id | 0 | 0].
  for (std::size_t i = 0; i + 1 < g; ++i) v(g + i, i) = 1;
  // Last row: [0 | B_{1 x g} | 1].
  v(n - 1, 2 * g - 2) = 1;
  v(n - 1, n - 1) = 1;
  return v;
}

FgReport theorem11(std::size_t g, const Rational& tol) {
  require_genus(g);
  AllowedPath path = build_gamma(g);
  IntMatrix v = path_matrix(path);
  PACertificate cert = certify(path, tol, LowerMode::PaperCap);
  const bool block_ok = v == block_matrix(g);
  const bool forms_ok = intermediate_check(g);
  FgReport r{g, path, v, block_ok, forms_ok, std::move(cert)};
  const long gl = static_cast<long>(g);
  r.thm11_upper = make_rational(1, gl - 1);
  r.thm11_lower = make_rational(1, 16 * gl - 12);
  r.lower_paper = r.certificate.lc_lower;
  r.lower_exact = lc_lower_bound(path, LowerMode::Exact);
  auto add = [&r](std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back(CheckItem{std::move(name), ok, std::move(detail)});
  };

  add("allowed", path.allowed());
  add("b^g returns to start", fg_after_bottom(g, g) == path.start());
  add("intermediate forms", forms_ok);
  add("block form", block_ok);

  bool pairs_ok = true;
  const auto edges = path.edges();
  for (std::size_t k = 1; k <= g; ++k)
    pairs_ok = pairs_ok && edges[k - 1].winner == letter(g) && edges[k - 1].loser == letter(2 * g - k + 1);
  pairs_ok = pairs_ok && edges[g].winner == letter(2 * g) && edges[g].loser == letter(g);
  add("winner-loser sequence", pairs_ok);

  const GluedSurface s = glue(path.start());
  add("single vertex, genus g", s.vertex_count == 1 && s.genus == gl,
      "vertices " + std::to_string(s.vertex_count) + ", genus " + std::to_string(s.genus));

  const auto& c = r.certificate;
  add("primitive", c.primitive);
  add("exponent <= 4g-4", c.positive_power && *c.positive_power <= 4 * g - 4,
      c.positive_power ? "exponent " + std::to_string(*c.positive_power) : "none");
  if (c.lambda) {
    add("lambda bracket width <= tol", c.lambda->high - c.lambda->low <= tol);
    add("lambda >= sqrt 2", c.lambda->low * c.lambda->low >= 2, "low " + to_decimal(c.lambda->low));
  } else {
    add("lambda >= sqrt 2", false, "no bracket");
  }

  if (c.lc_upper) {
    const auto& o = c.lc_upper->orbit;
    add("upper bound 1/(g-1)", c.lc_upper->value == r.thm11_upper && o.steps == 2 * g - 2,
        to_decimal(c.lc_upper->value) + " after " + std::to_string(o.steps) + " steps");
    bool traj_ok = o.trajectory.size() == 2 * g - 1 && o.trajectory[0] == letter(2 * g - 1);
    for (std::size_t k = 1; traj_ok && k < o.trajectory.size(); ++k) {
      const std::size_t idx = k % 2 ? g - (k + 1) / 2 : 2 * g - (k + 2) / 2;
      traj_ok = o.trajectory[k] == letter(idx);
    }
    add("orbit trajectory", traj_ok);
  } else {
    add("upper bound 1/(g-1)", false, "no bound");
  }

  add("lower bound 1/(16g-12)", r.lower_paper && r.lower_paper->value == r.thm11_lower,
      r.lower_paper ? to_decimal(r.lower_paper->value) : "none");
  add("exact lower bound >= 1/(16g-12)", r.lower_exact && r.lower_exact->value >= r.thm11_lower,
      r.lower_exact ? "exponent " + std::to_string(r.lower_exact->exponent) : "none");
  return r;
}

LabeledPermutation central_loop(std::size_t n, std::size_t m) {
  if (n < 2) fail(ErrorKind::Domain, "central permutation needs n >= 2");
  if (m > n - 1) fail(ErrorKind::Domain, "loop index must lie in 0..n-1");
  std::vector<std::size_t> top, bottom;
  up(top, 1, n);
  bottom.push_back(n);
  down(bottom, m, 1);
  down(bottom, n - 1, m + 1);
  return from_indices(n, top, bottom);
}

namespace {

LabeledPermutation flip_of(const LabeledPermutation& p) { return apply_flip(p).target; }

// f . t^m . central as displayed.
LabeledPermutation flipped_loop_form(std::size_t n, std::size_t m) {
  std::vector<std::size_t> top, bottom;
  up(top, m + 1, n - 1);
  up(top, 1, m);
  top.push_back(n);
  down(bottom, n, 1);
  return from_indices(n, top, bottom);
}

}  // namespace

CentralReport theorem12_checks(std::size_t n, const CentralOptions& options) {
  if (n < 3) fail(ErrorKind::Domain, "central checks need n >= 3");
  CentralReport r;
  r.n = n;
  r.genus = static_cast<long>(n / 2);
  const long g = r.genus;
  if (g < 2) r.warnings.push_back("genus 1: bound formula evaluated outside its range");
  auto add = [&r](std::string name, bool ok, std::string detail = {}) {
    r.checks.push_back(CheckItem{std::move(name), ok, std::move(detail)});
  };

  const RauzyDiagram d = RauzyDiagram::explore(central(n), false, options.cap);
  r.component_size = d.size();
  add("(i) injectivity", injectivity_check(d), std::to_string(d.size()) + " vertices");

  bool loop_ok = true;
  LabeledPermutation p = central(n);
  std::vector<std::string> seen;
  for (std::size_t m = 1; m < n; ++m) {
    p = apply_top(p).target;
    loop_ok = loop_ok && p == central_loop(n, m) && d.find(p).has_value();
    seen.push_back(p.display());
  }
  std::sort(seen.begin(), seen.end());
  const bool distinct = std::unique(seen.begin(), seen.end()) == seen.end();
  add("(ii) central loop", loop_ok && distinct && central_loop(n, n - 1) == central(n));

  bool endpoint_ok = true;
  bool corner_ok = true;
  for (std::size_t m = 1; m < n; ++m) {
    const LabeledPermutation ft = flip_of(central_loop(n, m));
    const auto matches = d.unlabeled_matches(ft);
    endpoint_ok = endpoint_ok && ft == flipped_loop_form(n, m) && matches.size() == 1 &&
                  d.vertex(matches[0]) == central_loop(n, n - m - 1);
    const IntMatrix pm = relabel_matrix(central_loop(n, m), flip_of(central_loop(n, n - m - 1)));
    corner_ok = corner_ok && pm(n - 1, n - 1) == 1;
  }
  add("(iii) f t^m matches t^(n-m-1)", endpoint_ok);
  add("(iv) (n,n) entry of P is 1", corner_ok);

  const std::size_t max_len = options.max_length ? options.max_length : 2 * n;
  const unsigned long k = 4 * static_cast<unsigned long>(g) + 2;
  std::mt19937_64 rng(options.seed);
  // Only primitive samples are kept; non-primitive matrices say nothing.
  for (int family = 1; family <= 2; ++family) {
    std::size_t kept = 0;
    for (std::size_t attempt = 0; kept < options.samples_per_family && attempt < options.max_attempts; ++attempt) {
      std::optional<AllowedPath> path;
      if (family == 1) {
        const std::size_t v = static_cast<std::size_t>(rng() % d.size());
        auto moves = sample_path(d, v, {v}, 1, max_len, rng);
        if (moves) path.emplace(d.vertex(v), std::move(*moves));
      } else {
        const std::size_t m = 1 + static_cast<std::size_t>(rng() % (n - 1));
        const std::size_t from = *d.find(central_loop(n, m));
        const std::size_t to = *d.find(central_loop(n, n - m - 1));
        auto moves = sample_path(d, from, {to}, 0, max_len - 1, rng);
        if (moves) {
          moves->push_back(Move::Flip);
          path.emplace(d.vertex(from), std::move(*moves));
        }
      }
      if (!path) continue;
      ++r.drawn[family];
      const IntMatrix v = path_matrix(*path);
      SampledPath s{family, *path};
      s.exponent = min_positive_power(v);
      s.primitive = s.exponent.has_value();
      if (!s.primitive) continue;
      s.positive_diagonal = v.has_positive_diagonal_entry();
      r.samples.push_back(std::move(s));
      ++kept;
    }
  }

  std::size_t primitive[3] = {0, 0, 0};
  bool diag_ok = true, power_ok = true;
  for (const auto& s : r.samples) {
    ++primitive[s.family];
    diag_ok = diag_ok && s.positive_diagonal;
    power_ok = power_ok && *s.exponent <= k;
  }
  r.bound = lower_bound_from_exponent(g, k);
  for (int family = 1; family <= 2; ++family)
    if (primitive[family] == 0)
      r.warnings.push_back("family " + std::to_string(family) + ": no primitive path of length <= " +
                           std::to_string(max_len) + " in " + std::to_string(r.drawn[family]) + " draws");
  add("(v) primitive samples found", primitive[1] + primitive[2] > 0,
      std::to_string(primitive[1]) + " of " + std::to_string(r.drawn[1]) + " closed loops, " +
          std::to_string(primitive[2]) + " of " + std::to_string(r.drawn[2]) + " flip paths");
  add("(v) positive diagonal", diag_ok);
  add("(v) V^(4g+2) positive", power_ok);
  add("(v) bound 1/(16g-10)", r.bound == make_rational(1, 16 * g - 10), to_decimal(r.bound));
  return r;
}

}  // namespace rauzy
