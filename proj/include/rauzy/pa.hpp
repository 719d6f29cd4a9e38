#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rauzy/diagram.hpp"
#include "rauzy/linalg.hpp"
#include "rauzy/perm.hpp"
#include "rauzy/rational.hpp"

namespace rauzy {

// P[a][b] = 1 iff phi(b) = a, where phi(b) = end.top[start.top_position(b)].
// Throws NotAllowed when the endpoints differ as unlabeled permutations.
IntMatrix relabel_matrix(const LabeledPermutation& start, const LabeledPermutation& end);

// V_e1 * ... * V_ek * P, first edge leftmost.
IntMatrix path_matrix(const AllowedPath& path);

// sigma(x) = start.top[end.top_position(x)], the inverse of phi.
std::vector<Letter> orbit_map(const AllowedPath& path);

// Letters that win some t/b edge of the path, sorted.
std::vector<Letter> winner_set(const AllowedPath& path);

struct OrbitReport {
  std::vector<Letter> winners;
  std::vector<Letter> orbit_map;
  Letter best_start = 0;
  std::size_t steps = 0;
  std::vector<Letter> trajectory;  // best_start, sigma(best_start), ...
  std::vector<Letter> skipped_sides;   // not closed or homologically trivial
  std::vector<Letter> cycling_starts;  // sigma-cycles avoiding the winners
};

struct UpperBound {
  Rational value;  // distance step / steps
  OrbitReport orbit;
};

// Distance between a side and its image when both are closed curves meeting
// at most once.
inline constexpr long kDistanceStep = 2;

// Follows sigma from every closed, homologically nonzero non-winner side
// until it lands in the winner set; the longest such run gives 2/k.
// Returns nullopt when no start reaches a winner. Throws Domain for genus < 2
// and Internal when a never-winner row of V disagrees with sigma.
std::optional<UpperBound> lc_upper_bound(const AllowedPath& path);

enum class LowerMode { PaperCap, Exact };

LowerMode parse_lower_mode(std::string_view text);
std::string lower_mode_name(LowerMode mode);

struct LowerBound {
  Rational value;
  unsigned long exponent = 0;
  LowerMode mode = LowerMode::Exact;
};

// 1 / (6(2g-2) + p).
Rational lower_bound_from_exponent(long genus, unsigned long p);

// Exact mode uses the least positive power of V; the capped mode uses 2n
// and needs a positive diagonal entry. nullopt when V is not primitive or
// the capped mode does not apply. Throws Domain for genus < 2.
std::optional<LowerBound> lc_lower_bound(const AllowedPath& path, LowerMode mode);

struct PACertificate {
  AllowedPath path;
  IntMatrix matrix;
  bool primitive = false;
  std::optional<unsigned long> positive_power;
  std::optional<SpectralBracket> lambda;
  std::optional<std::pair<double, double>> teich_length;  // [log low, log high]
  std::optional<UpperBound> lc_upper;
  std::optional<LowerBound> lc_lower;
  long genus = 0;
  std::vector<std::string> assumptions;
  std::vector<std::string> warnings;

  bool pseudo_anosov() const noexcept { return primitive; }
};

// Throws NotAllowed for a path whose endpoints differ.
PACertificate certify(const AllowedPath& path, const Rational& tol,
                      LowerMode mode = LowerMode::Exact);

}  // namespace rauzy
