#pragma once

#include <optional>
#include <vector>

#include "metab/bound.hpp"
#include "metab/module.hpp"

namespace metab {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr long default_budget = 1000000;

struct ReductionStep {
  ModuleElement h;
  std::size_t index;  // generator used
  Int q;
  Monomial shift;     // ring monomial M / LM(f)
};

// reduces the largest reducible term of g
std::optional<ReductionStep> reduce_step(const ModuleElement& g, const std::vector<ModuleElement>& F);

struct GroebnerBasis {
  std::size_t nvars = 0, nbasis = 1;
  std::vector<ModuleElement> generators;
  std::vector<ModuleElement> origin;
  // reps[i][j]: ring coefficient of origin[j] in generators[i]; empty if not tracked
  std::vector<std::vector<ModuleElement>> reps;
};

GroebnerBasis buchberger_strong(const std::vector<ModuleElement>& F, std::size_t nvars, std::size_t nbasis,
                                bool track_reps = false, long budget = default_budget);

ModuleElement normal_form(const ModuleElement& g, const GroebnerBasis& G, long budget = default_budget);
ModuleElement normal_form(const ModuleElement& g, const std::vector<ModuleElement>& F, long budget = default_budget);

struct DivisionCertificate {
  std::vector<ModuleElement> coefficients;  // aligned with the basis generators
  ModuleElement residue;
  Int steps = 0;
  Int size = 0;
  Bound bound;
};

DivisionCertificate divide_with_certificate(const ModuleElement& g, const GroebnerBasis& G,
                                            long budget = default_budget);

// p * sum_{j<r} (1+C)^j with r = m * G_k(n)
Bound division_bound(const Int& p, const Int& C, std::size_t m, std::size_t k, const Int& n);

Int growth_function(long k, long n);

}  // namespace metab
