#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metab/collection.hpp"
#include "metab/laurent.hpp"

namespace metab {

struct NotIdentity : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AreaCertificate {
  bool identity = false;
  Int n = 0;
  bool in_normal_closure = false;
  OrderedForm ordered;
  CostLedger ledger;  // rewriting w to its ordered form
  LaurentEmbedding::Certificate membership;
  Int C = 0;
  Bound pipeline_bound;  // n^2 + (n^2+n)(2K)^n + (n^2+n)^2 K^(2n)
  Bound assembly_bound;
  Bound relative_bound;

  Int membership_size() const { return membership.size; }
  Int witnessed_absolute() const { return ledger.absolute_total() + membership.size; }
  Int witnessed_relative() const { return ledger.relative_total() + membership.size; }
};

class WordProblem {
 public:
  explicit WordProblem(Presentation p, const Int& K1 = 1, long budget = default_budget);

  const Presentation& presentation() const { return p_; }
  const std::vector<ModuleElement>& generators() const { return gens_; }  // nonzero relator vectors
  const LaurentEmbedding& embedding() const { return emb_; }
  const Int& K() const { return K_; }
  const Int& C() const { return C_; }

  AreaCertificate certify(const GroupWord& w) const;
  bool is_identity(const GroupWord& w) const { return certify(w).identity; }
  AreaCertificate area_certificate(const GroupWord& w) const;
  AreaCertificate relative_area_certificate(const GroupWord& w) const { return area_certificate(w); }

 private:
  Presentation p_;
  std::vector<ModuleElement> gens_;
  LaurentEmbedding emb_;
  Int K_, C_;
  long budget_;
};

Bound pipeline_bound(const Int& n, const Int& K);
Bound assembly_bound(const Int& n, const Int& C, std::size_t k);
Bound relative_bound(const Int& n, const Bound& membership);

// length of the word a_1^{mu_1} ... a_m^{mu_m} with ordered conjugators
Int module_norm(const ModuleElement& f);

struct OracleBudget {
  long max_degree = 2;
  long max_coef = 3;
  long max_size = 4;
};
std::optional<Int> brute_force_min_certificate(const ModuleElement& g, const std::vector<ModuleElement>& gens,
                                               const RingSpec& ring, const OracleBudget& budget);

struct ModuleDehnRow {
  Int norm;
  long count = 0;
  Int max_size = 0;
  ModuleElement argmax;
};
std::vector<ModuleDehnRow> module_dehn_upper(const WordProblem& wp, long n, bool exhaustive, long samples,
                                             std::uint64_t seed);

std::optional<GroupWord> witness_word(const std::string& family, const Presentation& p, long n);

struct ProfileRow {
  long n = 0;
  Int max_witnessed = 0;
  Int max_cert_size = 0;
  Bound bound;
  std::optional<Int> witness_length, witness_cost, witness_cert_size;
  std::optional<Int> band_lower;
};
struct Profile {
  std::string family;
  std::uint64_t seed = 0;
  std::vector<ProfileRow> rows;
};
Profile dehn_profile(const WordProblem& wp, const std::string& family, long n_max, long samples, std::uint64_t seed);

double loglinear_slope(const std::vector<double>& x, const std::vector<double>& y);
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace metab
