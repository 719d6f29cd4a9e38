#include "rauzy/pa.hpp"

#include <algorithm>
#include <set>

#include "rauzy/error.hpp"
#include "rauzy/surface.hpp"

namespace rauzy {

IntMatrix relabel_matrix(const LabeledPermutation& start, const LabeledPermutation& end) {
  if (!(start.alphabet() == end.alphabet()))
    fail(ErrorKind::NotAllowed, "endpoints use different alphabets");
  if (!equal_unlabeled(start, end))
    fail(ErrorKind::NotAllowed, "endpoints differ as unlabeled permutations: " + start.display() +
                                    " vs " + end.display());
  IntMatrix p(start.size());
  for (Letter b = 0; b < start.size(); ++b) p(end.top()[start.top_position(b)], b) = 1;
  return p;
}

IntMatrix path_matrix(const AllowedPath& path) {
  IntMatrix v = IntMatrix::identity(path.start().size());
  for (const auto& e : path.edges())
    if (e.kind != Move::Flip) v = v * edge_matrix(e);
  return v * relabel_matrix(path.start(), path.end());
}

std::vector<Letter> orbit_map(const AllowedPath& path) {
  std::vector<Letter> sigma(path.start().size());
  for (Letter x = 0; x < sigma.size(); ++x) sigma[x] = path.start().top()[path.end().top_position(x)];
  return sigma;
}

std::vector<Letter> winner_set(const AllowedPath& path) {
  std::set<Letter> w;
  for (const auto& e : path.edges())
    if (e.winner) w.insert(*e.winner);
  return {w.begin(), w.end()};
}

namespace {

void require_genus(const GluedSurface& s) {
  if (s.genus < 2)
    fail(ErrorKind::Domain, "curve-graph bounds need genus >= 2, got genus " + std::to_string(s.genus));
}

}  // namespace

std::optional<UpperBound> lc_upper_bound(const AllowedPath& path) {
  const IntMatrix v = path_matrix(path);
  const GluedSurface surface = glue(path.start());
  require_genus(surface);

  OrbitReport report;
  report.winners = winner_set(path);
  report.orbit_map = orbit_map(path);
  const std::size_t n = v.order();
  std::vector<bool> is_winner(n, false);
  for (Letter w : report.winners) is_winner[w] = true;

  // A letter that never wins keeps its row through every edge factor, so its
  // row of V is the row of P.
  for (Letter s = 0; s < n; ++s) {
    if (is_winner[s]) continue;
    for (Letter c = 0; c < n; ++c) {
      const Integer expected = c == report.orbit_map[s] ? 1 : 0;
      if (v(s, c) != expected)
        fail(ErrorKind::Internal, "row " + path.start().alphabet().name(s) +
                                      " of the path matrix is not the unit vector at sigma");
    }
  }

  std::optional<std::vector<Letter>> best;
  for (Letter s = 0; s < n; ++s) {
    if (is_winner[s]) continue;
    if (!surface.side_closed[s] || !surface.side_homology_nonzero[s]) {
      report.skipped_sides.push_back(s);
      continue;
    }
    std::vector<Letter> trajectory{s};
    std::vector<bool> seen(n, false);
    seen[s] = true;
    Letter cur = s;
    bool cycled = false;
    while (true) {
      cur = report.orbit_map[cur];
      trajectory.push_back(cur);
      if (is_winner[cur]) break;
      if (seen[cur]) {
        cycled = true;
        break;
      }
      seen[cur] = true;
    }
    if (cycled) {
      report.cycling_starts.push_back(s);
      continue;
    }
    if (!best || trajectory.size() > best->size()) best = std::move(trajectory);
  }
  if (!best) return std::nullopt;
  report.best_start = best->front();
  report.steps = best->size() - 1;
  report.trajectory = std::move(*best);
  UpperBound out;
  out.value = make_rational(kDistanceStep, static_cast<long>(report.steps));
  out.orbit = std::move(report);
  return out;
}

LowerMode parse_lower_mode(std::string_view text) {
  if (text == "exact") return LowerMode::Exact;
  if (text == "paper_cap" || text == "paper-cap") return LowerMode::PaperCap;
  fail(ErrorKind::Parse, "unknown lower-bound mode '" + std::string(text) + "' (expected exact or paper_cap)");
}

std::string lower_mode_name(LowerMode mode) {
  return mode == LowerMode::Exact ? "exact" : "paper_cap";
}

Rational lower_bound_from_exponent(long genus, unsigned long p) {
  const long k = 6 * (2 * genus - 2) + static_cast<long>(p);
  if (k <= 0) fail(ErrorKind::Domain, "nonpositive nesting constant");
  return make_rational(1, k);
}

std::optional<LowerBound> lc_lower_bound(const AllowedPath& path, LowerMode mode) {
  const IntMatrix v = path_matrix(path);
  const GluedSurface surface = glue(path.start());
  require_genus(surface);
  const auto exact = min_positive_power(v);
  if (!exact) return std::nullopt;
  LowerBound out;
  out.mode = mode;
  if (mode == LowerMode::Exact) {
    out.exponent = *exact;
  } else {
    if (!v.has_positive_diagonal_entry()) return std::nullopt;
    out.exponent = 2 * v.order();
    if (*exact > out.exponent)
      fail(ErrorKind::Internal, "primitive matrix with positive diagonal needs power above 2n");
  }
  out.value = lower_bound_from_exponent(surface.genus, out.exponent);
  return out;
}

PACertificate certify(const AllowedPath& path, const Rational& tol, LowerMode mode) {
  PACertificate c{path, path_matrix(path)};
  const GluedSurface surface = glue(path.start());
  c.genus = surface.genus;
  c.positive_power = min_positive_power(c.matrix);
  c.primitive = c.positive_power.has_value();
  if (c.primitive) {
    c.lambda = spectral_radius(c.matrix, tol);
    c.teich_length = std::pair{log_lower(c.lambda->low), log_upper(c.lambda->high)};
  } else {
    c.warnings.push_back("path matrix is not primitive; the criterion is only sufficient, verdict inconclusive");
  }
  if (path.start().size() == 2) c.warnings.push_back("n = 2: torus");

  if (surface.genus < 2) {
    c.warnings.push_back("genus below 2: curve-graph bounds skipped");
    return c;
  }
  c.lc_upper = lc_upper_bound(path);
  if (c.lc_upper) {
    c.assumptions.push_back("sides-essential-by-homology");
    c.assumptions.push_back("distance-step-2");
    if (!c.lc_upper->orbit.skipped_sides.empty())
      c.warnings.push_back("some sides skipped: not closed or homologically trivial");
  }
  if (c.lc_upper && !c.lc_upper->orbit.cycling_starts.empty())
    c.warnings.push_back("sigma-cycle avoiding all winners: no bound from those starts");
  if (!c.lc_upper) c.warnings.push_back("no side reaches a winner under sigma: no upper bound");

  if (c.primitive) {
    c.lc_lower = lc_lower_bound(path, mode);
    if (c.lc_lower) {
      c.assumptions.push_back("diagonal-extension-constant-6(2g-2)-cited");
      if (mode == LowerMode::PaperCap) c.assumptions.push_back("exponent-2n-from-positive-diagonal");
    } else {
      c.warnings.push_back("capped lower bound needs a positive diagonal entry");
    }
  }
  if (c.lc_upper && c.lc_lower && c.lc_lower->value > c.lc_upper->value)
    fail(ErrorKind::Internal, "lower bound exceeds upper bound");
  return c;
}

}  // namespace rauzy
