#include <doctest.h>

#include "helpers.hpp"
#include "rauzy/fg.hpp"
#include "rauzy/json.hpp"

using namespace rauzy;

TEST_CASE("permutations round trip") {
  for (const auto& p : {central(5), fg_start(3), parse_permutation("x y z / z x y")}) {
    const Json j = to_json(p);
    CHECK(permutation_from_json(Json::parse(j.dump())) == p);
  }
  CHECK_KIND(permutation_from_json(Json{{"top", {"a"}}}), Parse);
}

TEST_CASE("rationals and matrices round trip") {
  for (const auto& q : {make_rational(1, 3), make_rational(-7, 2), Rational(0)})
    CHECK(rational_from_json(Json::parse(to_json(q).dump())) == q);
  const IntMatrix m{{1, 2}, {3, 4}};
  CHECK(matrix_from_json(to_json(m)) == m);
  IntMatrix big(1);
  big(0, 0) = Integer("123456789012345678901234567890");
  CHECK(matrix_from_json(Json::parse(to_json(big).dump())) == big);
  CHECK_KIND(matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), Parse);
}

TEST_CASE("certificate documents validate") {
  const auto c = certify(build_gamma(3), make_rational(1, 1000000000));
  const Json j = Json::parse(to_json(c).dump());
  CHECK_NOTHROW(validate_certificate_json(j));
  CHECK(j["verdict"] == "pseudo-Anosov");
  CHECK(rational_from_json(j["lc_upper"]["value"]) == make_rational(1, 2));
  CHECK(matrix_from_json(j["matrix"]) == c.matrix);
  CHECK(permutation_from_json(j["path"]["start"]) == fg_start(3));
  Json broken = j;
  broken.erase("matrix");
  CHECK_KIND(validate_certificate_json(broken), Parse);

  const auto flat = certify(AllowedPath(central(4), {}), make_rational(1, 1000));
  const Json k = to_json(flat);
  CHECK_NOTHROW(validate_certificate_json(k));
  CHECK(k["verdict"] == "inconclusive");
  CHECK(k["lambda"].is_null());
}

TEST_CASE("malformed rationals") {
  CHECK_KIND(rational_from_json(Json{{"num", "1"}, {"den", "0"}}), Parse);
  CHECK_KIND(rational_from_json(Json{{"num", "x"}, {"den", "2"}}), Parse);
  CHECK(rational_from_json(Json{{"num", "010"}, {"den", "4"}}) == make_rational(5, 2));
}
