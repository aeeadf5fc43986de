#pragma once

#include <vector>

#include "metab/groebner.hpp"
#include "metab/text.hpp"

namespace metab {

// Polynomial model of Z[t^+-, u]: variables are the ring's variables
// followed by one inverse variable s_t per free variable t.
struct EmbeddedGenerators {
  RingSpec poly_ring;
  std::vector<ModuleElement> generators;  // shifted user generators, then the extra relations
  std::vector<Monomial> shifts;           // t^c with generators[j] = t^c * F[j]
  std::size_t nuser = 0;
};

EmbeddedGenerators laurent_embed(const std::vector<ModuleElement>& F, const RingSpec& ring, std::size_t nbasis);

class LaurentEmbedding {
 public:
  LaurentEmbedding() = default;
  LaurentEmbedding(const std::vector<ModuleElement>& F, const RingSpec& ring, std::size_t nbasis,
                   long budget = default_budget);

  const RingSpec& ring() const { return ring_; }
  std::size_t nbasis() const { return nbasis_; }
  const EmbeddedGenerators& embedded() const { return emb_; }
  const GroebnerBasis& basis() const { return gb_; }
  const std::vector<ModuleElement>& user_generators() const { return user_; }

  ModuleElement to_poly(const ModuleElement& g) const;
  ModuleElement to_laurent(const ModuleElement& h) const;

  ModuleElement normal_form(const ModuleElement& g, long budget = default_budget) const;
  bool member(const ModuleElement& g, long budget = default_budget) const;

  struct Certificate {
    std::vector<ModuleElement> coefficients;  // over user generators, Laurent ring elements
    ModuleElement residue;                    // Laurent image of the polynomial normal form
    DivisionCertificate division;             // in the polynomial model
    Int size = 0;
  };
  Certificate certificate(const ModuleElement& g, long budget = default_budget) const;

 private:
  RingSpec ring_;
  std::size_t nbasis_ = 1;
  std::vector<ModuleElement> user_;
  EmbeddedGenerators emb_;
  mutable GroebnerBasis gb_;  // representations are filled in on the first certificate
  std::vector<std::size_t> free_;  // indices of free variables
};

}  // namespace metab
