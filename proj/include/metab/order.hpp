#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace metab {

using Int = mpz_class;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// 0 < 1 < 2 < ... < -1 < -2 < ...
std::strong_ordering compare_integers(const Int& a, const Int& b);

// basis == -1 marks a ring monomial
struct Monomial {
  std::vector<Int> exps;
  int basis = -1;

  Monomial() = default;
  explicit Monomial(std::size_t nvars, int b = -1) : exps(nvars, 0), basis(b) {}
  Monomial(std::vector<Int> e, int b) : exps(std::move(e)), basis(b) {}

  Int degree() const;
  bool is_one() const;
  bool operator==(const Monomial&) const = default;
};

std::strong_ordering compare_monomials(const Monomial& u, const Monomial& v);

Monomial mono_mul(const Monomial& u, const Monomial& v);
Monomial mono_inverse(const Monomial& u);
// ring part of u divides v, same basis, both with non-negative exponents
bool mono_divides(const Monomial& u, const Monomial& v);
Monomial mono_quotient(const Monomial& v, const Monomial& u);
Monomial mono_lcm(const Monomial& u, const Monomial& v);

struct Term {
  Int coef;
  Monomial mono;
};

std::strong_ordering compare_terms(const Term& s, const Term& t);

}  // namespace metab
