#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "metab/presets.hpp"
#include "metab/word_problem.hpp"

using namespace metab;

namespace {

Presentation bs2_file() {
  return parse_presentation(R"({"module_generators":["a"],"free_generators":["t"],"relators":["a^t * a^-2"]})");
}

}  // namespace

TEST_CASE("identity decisions in presets") {
  WordProblem b(bs(2));
  const Presentation& p = b.presentation();
  CHECK(b.is_identity(parse_word("t*a*t^-1*a^-2", p)));
  CHECK_FALSE(b.is_identity(parse_word("a", p)));
  CHECK_FALSE(b.is_identity(parse_word("t", p)));
  CHECK(b.is_identity(parse_word("1", p)));
  CHECK(b.is_identity(parse_word("[a, a^t]", p)));
  CHECK_THROWS_AS(b.area_certificate(parse_word("a", p)), NotIdentity);

  WordProblem l(lamplighter(2));
  const Presentation& q = l.presentation();
  CHECK(l.is_identity(parse_word("a^2", q)));
  CHECK(l.is_identity(parse_word("a^t*a^t", q)));
  CHECK_FALSE(l.is_identity(parse_word("a^t", q)));
  CHECK(l.is_identity(parse_word("[a^(t^3), a^-t]", q)));
}

TEST_CASE("bs witness certificate sizes") {
  WordProblem b(bs(2));
  for (long n = 1; n <= 10; ++n) {
    auto w = witness_word("bs", b.presentation(), n);
    REQUIRE(w);
    AreaCertificate c = b.area_certificate(*w);
    CHECK(c.membership_size() == (Int(1) << n) - 1);
    CHECK(c.witnessed_relative() <= c.witnessed_absolute());
  }
}

TEST_CASE("oracle examples") {
  testutil::Ambient A{testutil::ring({"t"}), {"a"}};
  OracleBudget big{3, 4, 6};
  CHECK(brute_force_min_certificate(A("(t^2-4)*a"), {A("(t-2)*a")}, A.r, big) == Int(3));
  CHECK(brute_force_min_certificate(A("(t-2)*a"), {A("(t-2)*a")}, A.r, big) == Int(1));
  CHECK_FALSE(brute_force_min_certificate(A("a"), {A("2*a")}, A.r, big).has_value());
  CHECK(brute_force_min_certificate(A("0"), {A("2*a")}, A.r, big) == Int(0));
}

TEST_CASE("module dehn on bs file") {
  WordProblem b(bs2_file());
  auto rows = module_dehn_upper(b, 5, true, 0, 1);
  REQUIRE(rows.size() == 5);
  for (int i = 0; i < 4; ++i) CHECK(rows[i].count == 0);
  CHECK(rows[4].count == 2);
  CHECK(rows[4].max_size == 1);
  testutil::Ambient A{b.embedding().ring(), {"a"}};
  CHECK(module_norm(A("(t-2)*a")) == 5);
  CHECK(b.embedding().certificate(A("(t^2-4)*a")).size == 3);
}

TEST_CASE("exhaustive lamplighter agrees with oracle") {
  WordProblem l(lamplighter(2));
  auto rows = module_dehn_upper(l, 4, true, 0, 1);
  for (const auto& r : rows) {
    if (r.count == 0) continue;
    auto o = brute_force_min_certificate(r.argmax, l.generators(), l.presentation().ring(), {2, 3, 4});
    REQUIRE(o);
    CHECK(*o == r.max_size);
  }
}

TEST_CASE("wf rejects pure t elements") {
  WfSpec s;
  s.r = 1;
  s.k = 1;
  s.polys = {"1 + t1"};
  WordProblem w(wf(s));
  const Presentation& p = w.presentation();
  CHECK_FALSE(w.is_identity(parse_word("t1", p)));
  CHECK_FALSE(w.is_identity(parse_word("u1*t1^-2", p)));
  CHECK(w.is_identity(parse_word("[a1^u1, a1]", p)));
  auto ww = witness_word("wf", p, 3);
  REQUIRE(ww);
  CHECK(w.is_identity(*ww));
}

TEST_CASE("relative never exceeds absolute") {
  WordProblem g(baumslag_gamma());
  const Presentation& p = g.presentation();
  for (const char* s : {"[a, a^t]", "a^s*a^-1*(a^-1)^t", "[a^(s*t), a^(t^-1)]"}) {
    AreaCertificate c = g.area_certificate(parse_word(s, p));
    CHECK(c.witnessed_relative() <= c.witnessed_absolute());
    CHECK(Bound(c.witnessed_absolute()) <= c.pipeline_bound);
  }
}

TEST_CASE("profile fits") {
  WordProblem fa(free_abelian(2));
  Profile pr = dehn_profile(fa, "free_abelian", 6, 10, 7);
  REQUIRE(pr.rows.size() == 6);
  std::vector<double> x, y;
  for (const auto& r : pr.rows) {
    REQUIRE(r.witness_cert_size);
    x.push_back(static_cast<double>(r.n));
    y.push_back(r.witness_cert_size->get_d());
  }
  CHECK(loglog_slope(x, y) <= 2.05);
  CHECK(loglinear_slope({1, 2, 3}, {2, 4, 8}) == doctest::Approx(std::log(2.0)));
}
