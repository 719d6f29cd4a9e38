#include <doctest.h>

#include <functional>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rauzy/fg.hpp"

using namespace rauzy;

namespace {
const Rational kTol = make_rational(1, 1000000000);
}

TEST_CASE("gamma_g replays through the row oracle") {
  for (std::size_t g = 2; g <= 10; ++g) {
    const auto gamma = build_gamma(g);
    CHECK(gamma.moves().size() == g + 2);
    CHECK(gamma.allowed());
    oracle::Rows r = oracle::rows_of(fg_start(g));
    for (std::size_t k = 1; k <= g; ++k) {
      r = oracle::bottom_move(r);
      CHECK(oracle::rows_of(fg_after_bottom(g, k)) == r);
    }
    CHECK(r == oracle::rows_of(fg_start(g)));
    r = oracle::top_move(r);
    CHECK(oracle::rows_of(fg_after_top(g)) == r);
    r = oracle::flip(r);
    CHECK(oracle::rows_of(fg_end(g)) == r);
    CHECK(gamma.end() == fg_end(g));
    CHECK(intermediate_check(g));
    CHECK(oracle::from(block_matrix(g)) ==
          oracle::path_matrix(oracle::rows_of(fg_start(g)), format_move_word(gamma.moves())));
    CHECK(path_matrix(gamma) == block_matrix(g));
  }
  CHECK(fg_after_bottom(3, 3) == fg_start(3));
  CHECK(fg_after_bottom(2, 1).display() == "a1 a2 a4 a3 / a4 a1 a3 a2");
  CHECK(block_matrix(2) == IntMatrix{{0, 1, 0, 0}, {1, 0, 2, 1}, {1, 0, 0, 0}, {0, 0, 1, 1}});
}

TEST_CASE("f_g reports, g = 2..8") {
  for (std::size_t g = 2; g <= 8; ++g) {
    const auto r = theorem11(g, kTol);
    for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name << " at g=" << g << ": " << c.detail);
    CHECK(r.certificate.lc_upper->value == make_rational(1, static_cast<long>(g) - 1));
    CHECK(r.lower_paper->value == make_rational(1, 16 * static_cast<long>(g) - 12));
    CHECK(r.certificate.lambda->low * r.certificate.lambda->low >= 2);
    CHECK(*r.certificate.positive_power <= 4 * g);
  }
  const auto r5 = theorem11(5, kTol);
  CHECK(r5.thm11_upper == make_rational(1, 4));
  CHECK(r5.thm11_lower == make_rational(1, 68));
  const auto r2 = theorem11(2, kTol);
  CHECK(r2.thm11_lower == make_rational(1, 20));
  CHECK(r2.thm11_upper == 1);
  const auto r10 = theorem11(10, kTol);
  CHECK(r10.certificate.lc_upper->orbit.steps == 18);
  CHECK_KIND(theorem11(1, kTol), Domain);
}

TEST_CASE("orbit trajectory skips exactly a_g and a_2g") {
  for (std::size_t g = 2; g <= 10; ++g) {
    const auto c = certify(build_gamma(g), kTol);
    const auto& o = c.lc_upper->orbit;
    CHECK(o.best_start == letter(2 * g - 1));
    CHECK(o.trajectory.back() == letter(g));
    CHECK(o.trajectory.size() == 2 * g - 1);
    std::vector<Letter> before(o.trajectory.begin(), o.trajectory.end() - 1);
    std::sort(before.begin(), before.end());
    std::vector<Letter> expected;
    for (std::size_t i = 1; i <= 2 * g; ++i)
      if (i != g && i != 2 * g) expected.push_back(letter(i));
    CHECK(before == expected);
  }
}

TEST_CASE("central loop forms against the row oracle") {
  for (std::size_t n = 3; n <= 8; ++n) {
    oracle::Rows r = oracle::rows_of(central(n));
    for (std::size_t m = 1; m < n; ++m) {
      r = oracle::top_move(r);
      CHECK(oracle::rows_of(central_loop(n, m)) == r);
    }
    CHECK(central_loop(n, n - 1) == central(n));
    for (std::size_t m = 1; m < n; ++m) {
      const auto f = oracle::flip(oracle::rows_of(central_loop(n, m)));
      CHECK(oracle::images(f) == oracle::images(oracle::rows_of(central_loop(n, n - m - 1))));
      // the (n,n) entry of P: the last letter keeps its slot
      const auto end = oracle::flip(oracle::rows_of(central_loop(n, n - m - 1)));
      const auto start = oracle::rows_of(central_loop(n, m));
      CHECK(end.top[oracle::pos(start.top, static_cast<int>(n - 1))] == static_cast<int>(n - 1));
    }
  }
}

TEST_CASE("central component reports, n = 3..8") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto r = theorem12_checks(n);
    for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name << " at n=" << n << ": " << c.detail);
    CHECK(r.component_size == (std::size_t{1} << (n - 1)) - 1);
    for (const auto& s : r.samples) {
      CHECK(s.primitive);
      CHECK(s.positive_diagonal);
      CHECK(*s.exponent <= 4 * static_cast<unsigned long>(r.genus) + 2);
      CHECK(power(path_matrix(s.path), 4 * r.genus + 2).is_positive());
    }
    CHECK(r.bound == make_rational(1, 16 * r.genus - 10));
  }
  const auto r4 = theorem12_checks(4);
  CHECK(r4.bound == make_rational(1, 22));
  std::size_t loops = 0;
  for (const auto& s : r4.samples) loops += s.family == 1 && s.path.moves().size() <= 8;
  CHECK(loops > 0);
  CHECK_KIND(theorem12_checks(2), Domain);
}

// Exhaustive: at n = 5 no flip-free closed loop of length <= 2n is primitive,
// so the first sampled family is empty at the default depth.
TEST_CASE("no short primitive closed loops at n = 5") {
  const std::size_t n = 5;
  const auto d = RauzyDiagram::explore(central(n), false);
  std::size_t loops = 0, primitive = 0;
  std::vector<Move> word;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t v) {
    if (!word.empty() && v == start) {
      ++loops;
      if (is_primitive(path_matrix(AllowedPath(d.vertex(start), word)))) ++primitive;
    }
    if (word.size() == 2 * n) return;
    for (Move m : {Move::Top, Move::Bottom}) {
      word.push_back(m);
      walk(start, d.edges()[*d.out_edge(v, m)].target);
      word.pop_back();
    }
  };
  for (std::size_t v = 0; v < d.size(); ++v) walk(v, v);
  CHECK(loops > 0);
  CHECK(primitive == 0);
}
