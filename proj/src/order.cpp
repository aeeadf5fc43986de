#include "metab/order.hpp"

#include <algorithm>

namespace metab {

namespace {

std::strong_ordering cmp(const Int& a, const Int& b) {
  int c = ::cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// degree as a machine integer when every exponent is small
bool small_degree(const Monomial& m, long& d) {
  d = 0;
  for (const auto& e : m.exps) {
    if (!mpz_fits_sint_p(e.get_mpz_t())) return false;
    d += std::labs(mpz_get_si(e.get_mpz_t()));
  }
  return true;
}

}  // namespace

std::strong_ordering compare_integers(const Int& a, const Int& b) {
  int sa = sgn(a), sb = sgn(b);
  if (sa == 0 || sb == 0) return cmp(Int(sa != 0), Int(sb != 0));
  if (sa > 0 && sb > 0) return cmp(a, b);
  if (sa < 0 && sb < 0) return cmp(b, a);
  return sa > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Int Monomial::degree() const {
  long s;
  if (small_degree(*this, s)) return Int(s);
  Int d = 0;
  for (const auto& e : exps) d += abs(e);
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](const Int& e) { return e == 0; });
}

std::strong_ordering compare_monomials(const Monomial& u, const Monomial& v) {
  if (u.exps.size() != v.exps.size())
    throw DimensionError("monomials over different variable sets");
  long du, dv;
  if (small_degree(u, du) && small_degree(v, dv)) {
    if (du != dv) return du <=> dv;
  } else if (auto c = cmp(u.degree(), v.degree()); c != 0) {
    return c;
  }
  for (std::size_t i = 0; i < u.exps.size(); ++i)
    if (auto c = cmp(u.exps[i], v.exps[i]); c != 0) return c;
  // e_1 > e_2 > ...
  if (u.basis == v.basis) return std::strong_ordering::equal;
  return u.basis < v.basis ? std::strong_ordering::greater : std::strong_ordering::less;
}

Monomial mono_mul(const Monomial& u, const Monomial& v) {
  if (u.exps.size() != v.exps.size())
    throw DimensionError("monomials over different variable sets");
  Monomial r = u;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += v.exps[i];
  if (r.basis < 0) r.basis = v.basis;
  return r;
}

Monomial mono_inverse(const Monomial& u) {
  Monomial r = u;
  for (auto& e : r.exps) e = -e;
  return r;
}

bool mono_divides(const Monomial& u, const Monomial& v) {
  if (u.basis >= 0 && u.basis != v.basis) return false;
  for (std::size_t i = 0; i < u.exps.size(); ++i)
    if (u.exps[i] > v.exps[i]) return false;
  return true;
}

Monomial mono_quotient(const Monomial& v, const Monomial& u) {
  Monomial r(v.exps.size());
  for (std::size_t i = 0; i < v.exps.size(); ++i) r.exps[i] = v.exps[i] - u.exps[i];
  return r;
}

Monomial mono_lcm(const Monomial& u, const Monomial& v) {
  Monomial r = u;
  for (std::size_t i = 0; i < r.exps.size(); ++i)
    if (v.exps[i] > r.exps[i]) r.exps[i] = v.exps[i];
  return r;
}

std::strong_ordering compare_terms(const Term& s, const Term& t) {
  if (auto c = compare_monomials(s.mono, t.mono); c != 0) return c;
  return compare_integers(s.coef, t.coef);
}

}  // namespace metab
