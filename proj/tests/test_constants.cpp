#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "metab/constants.hpp"
#include "metab/presets.hpp"

using namespace metab;

namespace {
TamenessDatum datum(const RingSpec& r, std::vector<std::string> c, std::vector<std::string> cc) {
  TamenessDatum t;
  for (const auto& s : c) t.centralizer.push_back(parse_ring(s, r));
  for (const auto& s : cc) t.co_centralizer.push_back(parse_ring(s, r));
  return t;
}
}  // namespace

TEST_CASE("Baumslag-Solitar constants") {
  Presentation p = bs(2);
  auto g = geometry_constants(*p.tameness, p.ring());
  CHECK(g.C == 1.0);
  CHECK(g.D == 1.0);
  CHECK(g.r0 == 0.5);
  CHECK(g.exact);
  CHECK_FALSE(g.R);
  CHECK(g.R_diagnostic.find("4kC - 4 = 0") != std::string::npos);
  CHECK(g.epsilon(2) == doctest::Approx(0.75));
  CHECK(tameness_check(*p.tameness, p.ring()).tame);
  CHECK(conjugation_constant(p) == 16);
  CHECK(conjugation_constant(lamplighter(2)) == 4);
  CHECK(conjugation_constant(baumslag_gamma()) == 16);
  CHECK(conjugation_constant(free_abelian()) == 16);
  CHECK(conjugation_constant(wf({1, 1, {}, {"1 + t1"}})) == 16);
  CHECK(conjugation_constant(p, 100) == 100);
}

TEST_CASE("rank one datum") {
  auto r = testutil::ring({"t"});
  auto g = geometry_constants(datum(r, {"3*t^-2"}, {"3*t^2"}), r);
  CHECK(g.C == 2.0);
  CHECK(g.D == 2.0);
  REQUIRE(g.R);
  CHECK(*g.R == doctest::Approx(2 * std::max({1.0, 2.0, 1.0})));
  for (double d : {0.01, 0.5, 3.0}) CHECK(g.epsilon(g.r0 + d) > 0);
  auto sq = geometry_constants(datum(r, {"9*t^-4"}, {"9*t^4"}), r);
  CHECK(sq.C == 2 * g.C);
  CHECK(sq.D == 2 * g.D);
  CHECK_THROWS_AS(geometry_constants(datum(r, {"3"}, {}), r), TamenessViolation);
  CHECK_FALSE(tameness_check(datum(r, {"t - 1"}, {}), r).tame);
  CHECK_FALSE(tameness_check(TamenessDatum{}, r).tame);
}

TEST_CASE("rank two sampling") {
  auto r = testutil::ring({"x", "y"});
  auto t = datum(r, {"x", "y", "x^-1", "y^-1"}, {});
  auto g = geometry_constants(t, r);
  CHECK_FALSE(g.exact);
  CHECK(g.C <= std::sqrt(0.5) + 1e-12);
  CHECK(g.C > 0.6);
  CHECK(g.D == 1.0);
  auto v = tameness_check(t, r);
  CHECK(v.tame);
  CHECK_FALSE(v.exact);
  CHECK_FALSE(tameness_check(datum(r, {"x", "y"}, {}), r).tame);
}
