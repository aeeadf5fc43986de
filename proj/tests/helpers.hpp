#pragma once

#include <string>
#include <vector>

#include "metab/text.hpp"

namespace testutil {

inline metab::RingSpec ring(std::vector<std::string> vars, std::vector<long> orders = {}) {
  orders.resize(vars.size(), 0);
  return {std::move(vars), std::move(orders)};
}

inline metab::Monomial mono(std::vector<long> e, int basis = -1) {
  std::vector<metab::Int> v(e.begin(), e.end());
  return metab::Monomial(v, basis);
}

struct Ambient {
  metab::RingSpec r;
  std::vector<std::string> basis;
  metab::ModuleElement operator()(const std::string& s) const { return metab::parse_element(s, r, basis); }
  std::string str(const metab::ModuleElement& g) const { return metab::render_element(g, r, basis); }
};

}  // namespace testutil
