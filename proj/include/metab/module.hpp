#pragma once

#include <string>
#include <vector>

#include "metab/order.hpp"

namespace metab {

struct AmbientMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyElement : std::domain_error {
  using std::domain_error::domain_error;
};

// Reduced element of (Z[x_1..x_k])^m or its Laurent analogue.
// Terms are kept strictly descending; ring elements use nbasis == 1.
class ModuleElement {
 public:
  ModuleElement() = default;
  ModuleElement(std::size_t nvars, std::size_t nbasis) : nvars_(nvars), nbasis_(nbasis) {}

  static ModuleElement from_terms(std::size_t nvars, std::size_t nbasis, std::vector<Term> terms);
  static ModuleElement monomial(std::size_t nvars, std::size_t nbasis, const Int& c, Monomial m);
  static ModuleElement constant(std::size_t nvars, const Int& c);  // ring element

  std::size_t nvars() const { return nvars_; }
  std::size_t nbasis() const { return nbasis_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Int& leading_coef() const { return leading_term().coef; }

  Int length() const;   // sum of |coefficients|
  Int degree() const;   // max monomial degree, 0 for zero
  std::size_t support_size() const { return terms_.size(); }

  Int coef_of(const Monomial& m) const;
  // coefficient polynomial of basis element b, as a ring element
  ModuleElement component(int b) const;

  ModuleElement operator+(const ModuleElement& o) const;
  ModuleElement operator-(const ModuleElement& o) const;
  ModuleElement operator-() const;
  ModuleElement& operator+=(const ModuleElement& o) { return *this = *this + o; }
  ModuleElement& operator-=(const ModuleElement& o) { return *this = *this - o; }
  bool operator==(const ModuleElement& o) const;

  ModuleElement scale_translate(const Int& c, const Monomial& u) const;
  // ring element times this
  ModuleElement times(const ModuleElement& ring) const;
  // apply f to every monomial, then re-reduce
  template <class F>
  ModuleElement map_monomials(std::size_t nvars, F f) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({t.coef, f(t.mono)});
    return from_terms(nvars, nbasis_, std::move(ts));
  }

 private:
  void check_same(const ModuleElement& o) const;
  std::size_t nvars_ = 0, nbasis_ = 1;
  std::vector<Term> terms_;
};

std::strong_ordering compare_elements(const ModuleElement& g, const ModuleElement& h);

ModuleElement add(const ModuleElement& g, const ModuleElement& h);
ModuleElement scale_translate(const Int& c, const Monomial& u, const ModuleElement& g);

struct Measures {
  Int length, degree;
  std::size_t support_size;
};
Measures measures(const ModuleElement& g);

}  // namespace metab
