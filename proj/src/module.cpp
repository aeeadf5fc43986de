#include "metab/module.hpp"

#include <algorithm>

namespace metab {

namespace {

bool mono_greater(const Monomial& a, const Monomial& b) {
  return compare_monomials(a, b) == std::strong_ordering::greater;
}

}  // namespace

ModuleElement ModuleElement::from_terms(std::size_t nvars, std::size_t nbasis, std::vector<Term> terms) {
  ModuleElement r(nvars, nbasis);
  for (const auto& t : terms) {
    if (t.mono.exps.size() != nvars) throw DimensionError("term has wrong number of variables");
    if (t.mono.basis < 0 || static_cast<std::size_t>(t.mono.basis) >= nbasis)
      throw AmbientMismatch("basis index out of range");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return mono_greater(a.mono, b.mono); });
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coef += t.coef;
      if (r.terms_.back().coef == 0) r.terms_.pop_back();
    } else if (t.coef != 0) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

ModuleElement ModuleElement::monomial(std::size_t nvars, std::size_t nbasis, const Int& c, Monomial m) {
  if (m.basis < 0) m.basis = 0;
  return from_terms(nvars, nbasis, {Term{c, std::move(m)}});
}

ModuleElement ModuleElement::constant(std::size_t nvars, const Int& c) {
  return monomial(nvars, 1, c, Monomial(nvars, 0));
}

const Term& ModuleElement::leading_term() const {
  if (terms_.empty()) throw EmptyElement("leading data of the zero element");
  return terms_.front();
}

Int ModuleElement::length() const {
  Int s = 0;
  for (const auto& t : terms_) s += abs(t.coef);
  return s;
}

Int ModuleElement::degree() const {
  Int d = 0;
  for (const auto& t : terms_) {
    Int e = t.mono.degree();
    if (e > d) d = e;
  }
  return d;
}

Int ModuleElement::coef_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return 0;
}

ModuleElement ModuleElement::component(int b) const {
  ModuleElement r(nvars_, 1);
  for (const auto& t : terms_)
    if (t.mono.basis == b) r.terms_.push_back({t.coef, Monomial(t.mono.exps, 0)});
  return r;
}

void ModuleElement::check_same(const ModuleElement& o) const {
  if (nvars_ != o.nvars_ || nbasis_ != o.nbasis_) throw AmbientMismatch("elements live in different modules");
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
  check_same(o);
  ModuleElement r(nvars_, nbasis_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    if (i == terms_.size()) {
      r.terms_.push_back(o.terms_[j++]);
      continue;
    }
    auto c = compare_monomials(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Int s = terms_[i].coef + o.terms_[j].coef;
      if (s != 0) r.terms_.push_back({s, terms_[i].mono});
      ++i, ++j;
    }
  }
  return r;
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const { return *this + (-o); }

bool ModuleElement::operator==(const ModuleElement& o) const {
  if (nvars_ != o.nvars_ || nbasis_ != o.nbasis_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coef != o.terms_[i].coef || !(terms_[i].mono == o.terms_[i].mono)) return false;
  return true;
}

ModuleElement ModuleElement::scale_translate(const Int& c, const Monomial& u) const {
  if (u.exps.size() != nvars_) throw DimensionError("translation monomial has wrong number of variables");
  ModuleElement r(nvars_, nbasis_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  bool laurent = false;
  for (const auto& t : terms_) {
    r.terms_.push_back({t.coef * c, mono_mul(t.mono, u)});
    for (const auto& e : t.mono.exps) laurent |= sgn(e) < 0;
  }
  for (const auto& e : u.exps) laurent |= sgn(e) < 0;
  // degree is only additive on non-negative exponents
  if (laurent) return from_terms(nvars_, nbasis_, std::move(r.terms_));
  return r;
}

ModuleElement ModuleElement::times(const ModuleElement& ring) const {
  if (ring.nbasis_ != 1 || ring.nvars_ != nvars_) throw AmbientMismatch("multiplier is not a ring element of this ambient");
  std::vector<Term> ts;
  ts.reserve(terms_.size() * ring.terms_.size());
  for (const auto& r : ring.terms_) {
    Monomial u(r.mono.exps, -1);
    for (const auto& t : terms_) ts.push_back({t.coef * r.coef, mono_mul(t.mono, u)});
  }
  return from_terms(nvars_, nbasis_, std::move(ts));
}

std::strong_ordering compare_elements(const ModuleElement& g, const ModuleElement& h) {
  const auto& a = g.terms();
  const auto& b = h.terms();
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = compare_terms(a[i], b[i]); c != 0) return c;
  if (a.size() == b.size()) return std::strong_ordering::equal;
  return a.size() < b.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

ModuleElement add(const ModuleElement& g, const ModuleElement& h) { return g + h; }

ModuleElement scale_translate(const Int& c, const Monomial& u, const ModuleElement& g) {
  return g.scale_translate(c, u);
}

Measures measures(const ModuleElement& g) { return {g.length(), g.degree(), g.support_size()}; }

}  // namespace metab
