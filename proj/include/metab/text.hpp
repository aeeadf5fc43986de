#pragma once

#include <string>
#include <vector>

#include "metab/module.hpp"

namespace metab {

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at offset " + std::to_string(pos)), offset(pos) {}
  std::size_t offset;
};

// Variables of ZT: free variables are Laurent, torsion variables carry
// their order and exponents are kept in [0, order).
struct RingSpec {
  std::vector<std::string> vars;
  std::vector<long> orders;  // 0 for infinite order

  std::size_t nvars() const { return vars.size(); }
  std::size_t nfree() const;
  bool is_torsion(std::size_t i) const { return orders[i] > 0; }
  Monomial normalize(Monomial m) const;
  ModuleElement normalize(const ModuleElement& g) const;
  int index_of(const std::string& name) const;
};

std::string render_ring(const ModuleElement& lambda, const RingSpec& ring);
std::string render_element(const ModuleElement& g, const RingSpec& ring,
                           const std::vector<std::string>& basis_names);

ModuleElement parse_ring(const std::string& text, const RingSpec& ring);
ModuleElement parse_element(const std::string& text, const RingSpec& ring,
                            const std::vector<std::string>& basis_names);

}  // namespace metab
