#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "metab/order.hpp"

using namespace metab;
using testutil::mono;

TEST_CASE("integer well-order") {
  CHECK(compare_integers(0, 5) < 0);
  CHECK(compare_integers(2, -1) < 0);
  CHECK(compare_integers(-1, -2) < 0);
  CHECK(compare_integers(3, 3) == 0);
  CHECK(compare_integers(7, 0) > 0);
}

TEST_CASE("monomial order") {
  CHECK(compare_monomials(mono({3, 5, 0}, 1), mono({3, 0, 6}, 1)) < 0);
  CHECK(compare_monomials(mono({2, 1}, 1), mono({3, 0}, 0)) < 0);
  CHECK(compare_monomials(mono({0}, 0), mono({0}, 0)) == 0);
  CHECK_THROWS_AS(compare_monomials(mono({1}), mono({1, 2})), DimensionError);
}

TEST_CASE("term order") {
  Term a{2, mono({5, 0, 2}, 2)}, b{4, mono({5, 0, 2}, 2)};
  CHECK(compare_terms(a, b) < 0);
  Term c{7, mono({2, 1, 0}, 1)}, d{5, mono({3, 0, 0}, 0)};
  CHECK(compare_terms(c, d) < 0);
}

TEST_CASE("orders are total and transitive on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(-2, 3), c(-4, 4), b(0, 1);
  auto rt = [&] { return Term{c(rng), mono({e(rng), e(rng)}, b(rng))}; };
  for (int i = 0; i < 10000; ++i) {
    Term x = rt(), y = rt(), z = rt();
    auto xy = compare_terms(x, y), yx = compare_terms(y, x);
    CHECK((xy < 0) == (yx > 0));
    if (xy == 0) CHECK((x.coef == y.coef && x.mono == y.mono));
    if (xy < 0 && compare_terms(y, z) < 0) CHECK(compare_terms(x, z) < 0);
    Int p = c(rng), q = c(rng), r = c(rng);
    if (compare_integers(p, q) < 0 && compare_integers(q, r) < 0) CHECK(compare_integers(p, r) < 0);
  }
}

TEST_CASE("monomial order is multiplicative") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(0, 4);
  for (int i = 0; i < 2000; ++i) {
    Monomial u = mono({e(rng), e(rng), e(rng)}, 0), v = mono({e(rng), e(rng), e(rng)}, 0);
    Monomial w = mono({e(rng), e(rng), e(rng)});
    CHECK(compare_monomials(u, v) == compare_monomials(mono_mul(u, w), mono_mul(v, w)));
  }
}
