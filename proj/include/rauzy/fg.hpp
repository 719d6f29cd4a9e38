#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rauzy/diagram.hpp"
#include "rauzy/linalg.hpp"
#include "rauzy/pa.hpp"

namespace rauzy {

// One named check with its outcome; reports collect these instead of
// throwing on the first failure.
struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

bool all_passed(const std::vector<CheckItem>& items);

// fg_start(g) with moves b^g, t, f in execution order.
AllowedPath build_gamma(std::size_t g);

// Closed forms of b^k (k = 1..g), t b^g and f t b^g applied to fg_start(g).
LabeledPermutation fg_after_bottom(std::size_t g, std::size_t k);
LabeledPermutation fg_after_top(std::size_t g);
LabeledPermutation fg_end(std::size_t g);

bool intermediate_check(std::size_t g);

// V_gamma_g assembled from its block description.
IntMatrix block_matrix(std::size_t g);

// Letter a_i (1-based) of the canonical alphabet.
inline Letter letter(std::size_t i) { return i - 1; }

struct FgReport {
  std::size_t g = 0;
  AllowedPath path;
  IntMatrix matrix;
  bool block_form_matches = false;
  bool intermediate_forms_match = false;
  PACertificate certificate;
  std::optional<LowerBound> lower_paper;
  std::optional<LowerBound> lower_exact;
  Rational thm11_upper;
  Rational thm11_lower;
  std::vector<CheckItem> checks;

  bool ok() const { return all_passed(checks); }
};

FgReport theorem11(std::size_t g, const Rational& tol);

struct SampledPath {
  int family = 1;  // 1: closed loop without flips, 2: t/b walk ending in one flip
  AllowedPath path;
  bool primitive = false;
  bool positive_diagonal = false;
  std::optional<unsigned long> exponent;
};

struct CentralReport {
  std::size_t n = 0;
  long genus = 0;
  std::size_t component_size = 0;
  std::vector<SampledPath> samples;  // primitive ones only
  std::size_t drawn[3] = {0, 0, 0};  // paths drawn per family (index 1, 2)
  Rational bound;  // 1/(16g-10)
  std::vector<CheckItem> checks;
  std::vector<std::string> warnings;

  bool ok() const { return all_passed(checks); }
};

struct CentralOptions {
  std::size_t samples_per_family = 24;  // primitive samples wanted
  std::size_t max_attempts = 5000;      // per family
  std::size_t max_length = 0;  // 0 means 2n
  std::uint64_t seed = 20240917;
  std::size_t cap = 1'000'000;
};

// t^m applied to central(n), as displayed for the central loop.
LabeledPermutation central_loop(std::size_t n, std::size_t m);

CentralReport theorem12_checks(std::size_t n, const CentralOptions& options = {});

}  // namespace rauzy
