#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rauzy/diagram.hpp"
#include "rauzy/pa.hpp"

using namespace rauzy;

namespace {

const Rational kTol = make_rational(1, 1000000000);

// Allowed paths in the augmented central(n) diagram, any length <= max_len.
std::vector<AllowedPath> random_loops(std::size_t n, std::size_t count, std::size_t max_len, std::uint64_t seed) {
  const auto d = RauzyDiagram::explore(central(n), true);
  std::mt19937_64 rng(seed);
  std::vector<AllowedPath> out;
  while (out.size() < count) {
    const std::size_t v = rng() % d.size();
    const auto targets = d.unlabeled_matches(d.vertex(v));
    auto moves = sample_path(d, v, targets, 1, max_len, rng);
    if (!moves) continue;
    AllowedPath p(d.vertex(v), std::move(*moves));
    REQUIRE(p.allowed());
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("flip example: V is the swap matrix") {
  const auto s = parse_permutation("A B C / C A B");
  const auto e = parse_permutation("B A C / C B A", s.alphabet_ptr());
  const IntMatrix p{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(relabel_matrix(s, e) == p);
  const AllowedPath path(s, {Move::Flip});
  CHECK(path_matrix(path) == p);
  CHECK(relabel_matrix(s, s) == IntMatrix::identity(3));
  CHECK_KIND(relabel_matrix(central(3), apply_bottom(central(3)).target), NotAllowed);

  const auto c = certify(path, kTol);
  CHECK_FALSE(c.primitive);
  CHECK_FALSE(c.pseudo_anosov());
  CHECK(power(c.matrix, 2) == IntMatrix::identity(3));
}

TEST_CASE("gamma_2 relabeling and path matrix") {
  const auto gamma = build_path(fg_start(2), "ftbb");
  CHECK(relabel_matrix(gamma.start(), gamma.end()) ==
        IntMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}});
  const IntMatrix v{{0, 1, 0, 0}, {1, 0, 2, 1}, {1, 0, 0, 0}, {0, 0, 1, 1}};
  CHECK(path_matrix(gamma) == v);
  CHECK(oracle::path_matrix(oracle::rows_of(gamma.start()), format_move_word(gamma.moves())) == oracle::from(v));
  CHECK(*min_positive_power(v) <= 4);
}

TEST_CASE("empty path") {
  const AllowedPath p(central(4), {});
  CHECK(path_matrix(p) == IntMatrix::identity(4));
  const auto c = certify(p, kTol);
  CHECK_FALSE(c.primitive);
  CHECK_FALSE(lc_lower_bound(p, LowerMode::Exact).has_value());
}

TEST_CASE("gamma_2 certificate") {
  const auto c = certify(build_path(fg_start(2), "ftbb"), kTol);
  REQUIRE(c.primitive);
  REQUIRE(c.lc_upper);
  REQUIRE(c.lc_lower);
  CHECK(c.lc_upper->value == 1);
  CHECK(c.lc_upper->orbit.steps == 2);
  CHECK(c.lc_upper->orbit.trajectory == std::vector<Letter>{2, 0, 1});  // a3 a1 a2
  CHECK(c.lc_lower->value == make_rational(1, 16));
  CHECK(c.lambda->low * c.lambda->low >= 2);
  const auto q = oracle::quartic_root(make_rational(1, 1000000000000LL));
  CHECK(c.lambda->low <= q + make_rational(1, 1000000));
  CHECK(c.lambda->high >= q - make_rational(1, 1000000));
}

TEST_CASE("upper bound needs a non-winner") {
  // every letter wins somewhere on this loop, so sigma has nowhere to start
  const auto d = RauzyDiagram::explore(central(4), false);
  std::mt19937_64 rng(3);
  bool seen = false;
  for (int i = 0; i < 2000 && !seen; ++i) {
    const std::size_t v = rng() % d.size();
    const auto moves = sample_path(d, v, {v}, 1, 12, rng);
    if (!moves) continue;
    const AllowedPath p(d.vertex(v), *moves);
    if (winner_set(p).size() == 4) {
      seen = true;
      CHECK_FALSE(lc_upper_bound(p).has_value());
    }
  }
  CHECK(seen);
}

TEST_CASE("genus below 2 is refused") {
  const auto p = build_path(parse_permutation("a1 a3 a2 / a3 a2 a1", central(3).alphabet_ptr()), "t");
  CHECK_KIND(lc_upper_bound(p), Domain);
  CHECK_KIND(lc_lower_bound(p, LowerMode::Exact), Domain);
  const auto c = certify(p, kTol);
  CHECK_FALSE(c.lc_upper.has_value());
  CHECK_FALSE(c.warnings.empty());
}

TEST_CASE("lower bound modes") {
  CHECK(parse_lower_mode("exact") == LowerMode::Exact);
  CHECK(parse_lower_mode("paper_cap") == LowerMode::PaperCap);
  CHECK_KIND(parse_lower_mode("cap"), Parse);
  CHECK(lower_bound_from_exponent(2, 4) == make_rational(1, 16));
  for (std::size_t g = 2; g <= 6; ++g) {
    const auto gamma = build_path(fg_start(g), "ftb^" + std::to_string(g));
    const auto cap = lc_lower_bound(gamma, LowerMode::PaperCap);
    const auto ex = lc_lower_bound(gamma, LowerMode::Exact);
    REQUIRE(cap);
    REQUIRE(ex);
    CHECK(cap->value == make_rational(1, 16 * static_cast<long>(g) - 12));
    CHECK(ex->exponent <= cap->exponent);
    CHECK(ex->value >= cap->value);
  }
}

TEST_CASE("random allowed loops: determinant, never-winner rows, bound order") {
  std::size_t checked = 0, primitive = 0;
  for (std::size_t n = 3; n <= 6; ++n)
    for (const auto& p : random_loops(n, 50, 3 * n, 100 + n)) {
      const IntMatrix v = path_matrix(p);
      CHECK(oracle::from(v) == oracle::path_matrix(oracle::rows_of(p.start()), format_move_word(p.moves())));
      const auto d = oracle::det(oracle::from(v));
      CHECK((d == 1 || d == -1));
      const auto w = winner_set(p);
      for (Letter s = 0; s < n; ++s) {
        if (std::binary_search(w.begin(), w.end(), s)) continue;
        const Letter sigma = p.start().top()[p.end().top_position(s)];
        CHECK(orbit_map(p)[s] == sigma);
        for (Letter j = 0; j < n; ++j) CHECK(v(s, j) == (j == sigma ? 1 : 0));
      }
      ++checked;
      const auto c = certify(p, make_rational(1, 1000000));
      if (c.primitive) {
        ++primitive;
        CHECK(c.lambda->low >= 1);
        if (c.lc_upper && c.lc_lower) CHECK(c.lc_lower->value <= c.lc_upper->value);
        if (v.has_positive_diagonal_entry() && c.genus >= 2) {
          const auto cap = lc_lower_bound(p, LowerMode::PaperCap);
          REQUIRE(cap);
          CHECK(*c.positive_power <= cap->exponent);
        }
      }
    }
  CHECK(checked == 200);
  CHECK(primitive > 0);
}

TEST_CASE("concatenated closed loops multiply") {
  const auto d = RauzyDiagram::explore(central(5), false);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    const std::size_t v = rng() % d.size();
    auto m1 = sample_path(d, v, {v}, 1, 10, rng);
    auto m2 = sample_path(d, v, {v}, 1, 10, rng);
    if (!m1 || !m2) continue;
    const AllowedPath p1(d.vertex(v), *m1), p2(d.vertex(v), *m2);
    std::vector<Move> both = *m1;
    both.insert(both.end(), m2->begin(), m2->end());
    CHECK(path_matrix(AllowedPath(d.vertex(v), both)) == path_matrix(p1) * path_matrix(p2));
  }
}
