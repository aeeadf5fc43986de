#pragma once

#include <utility>
#include <vector>

#include "metab/bound.hpp"
#include "metab/presentation.hpp"

namespace metab {

struct CollectionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CostLedger {
  Int r1 = 0;                // commutator introductions and eliminations
  Int r2_count = 0;          // commutations of module conjugates
  Int r2_abs = 0;            // their absolute price
  Int r2_rel = 0;            // their relative price
  Int module_relations = 0;  // relator applications
  Int power_relations = 0;   // torsion relations u^d
  Int free_steps = 0;

  Int absolute_total() const { return r1 + r2_abs + module_relations + power_relations; }
  Int relative_total() const { return r1 + r2_rel + module_relations + power_relations; }
  CostLedger& operator+=(const CostLedger& o);
};

// price of commuting a^x past b^y with |z| = deg(x - y)
Int absolute_price(const Int& z, const Int& K);
Int relative_price(const Int& z);

// (a_gen^coef)^v
struct Conjugate {
  int gen;
  Int coef;
  GroupWord v;
};

GroupWord conjugate_word(const Conjugate& c, const Presentation& p);
// as above, with commutator-table letters spelled out as [t_i, t_j]
GroupWord expanded_word(const Conjugate& c, const Presentation& p);

Monomial t_monomial(const GroupWord& v, const Presentation& p);
GroupWord t_word(const Monomial& u, const Presentation& p);

struct SplitWord {
  std::vector<Conjugate> conjugates;
  GroupWord tail;
};
SplitWord split_conjugates(const GroupWord& w, const Presentation& p);

std::vector<Conjugate> commutator_collect(const GroupWord& tail, const Presentation& p, CostLedger& ledger);

struct PushResult {
  std::vector<Int> ordered;
  std::vector<Conjugate> emissions;
};
// prefix * t_s^sigma = ordered * (product of emissions)
PushResult push_letter(const std::vector<Int>& prefix, int s, int sigma, const Presentation& p, CostLedger& ledger);

struct NormalizedConjugate {
  int gen;
  Int coef;
  Monomial mono;
};
NormalizedConjugate conjugate_normalize(const Conjugate& c, const Presentation& p, const Int& K, CostLedger& ledger);

struct OrderedForm {
  ModuleElement vector;
  Int source_length;
};
std::pair<OrderedForm, CostLedger> ordered_form(const GroupWord& w, const Presentation& p, const Int& K = 1);

// a_1^{l_1} ... a_m^{l_m} with every monomial spelled as an ordered t-word
GroupWord ordered_word(const ModuleElement& g, const Presentation& p);

// identities among the commutator letters that hold in every group of this shape
std::vector<ModuleElement> structural_relations(const Presentation& p);
// module images of the relators, followed by the structural relations
std::vector<ModuleElement> relator_module(const Presentation& p);

// measured recursion for the relative area of [a, b^u]
CostLedger relative_commutation(const Int& u_length);

struct CostBounds {
  Bound abelian, conjugate, organizer, module_a, module_b, module_c;
};
CostBounds cost_bounds(const Int& n, const Int& c, const Int& K, const Int& Q, const Int& P, const Int& m,
                       const Int& k, const Int& deg_t);

}  // namespace metab
