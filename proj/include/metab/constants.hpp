#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metab/presentation.hpp"

namespace metab {

struct TamenessViolation : std::domain_error {
  TamenessViolation(const std::string& what, std::vector<double> dir)
      : std::domain_error(what), direction(std::move(dir)) {}
  std::vector<double> direction;
};

struct GeometryReport {
  double C = 0, D = 0, r0 = 0;
  std::optional<double> R;  // empty when 4kC - 4 <= 0
  std::string R_diagnostic;
  int k = 0;
  bool exact = true;
  long grid = 0;  // number of sampled directions when not exact
  double epsilon(double r) const { return C - D * D / (2 * r); }
};

// supports of all elements of the datum, restricted to the free coordinates
std::vector<std::vector<std::vector<double>>> support_family(const TamenessDatum& lambda, const RingSpec& ring);

GeometryReport geometry_constants(const TamenessDatum& lambda, const RingSpec& ring);

struct TamenessVerdict {
  bool tame = false;
  bool exact = true;
  long grid = 0;
  std::vector<double> witness;  // a direction with no positive element, when not tame
};
TamenessVerdict tameness_check(const TamenessDatum& lambda, const RingSpec& ring);

// K = max(K1, K2^(2k)) with K2 = max |lambda| + 2
Int conjugation_constant(const Presentation& p, const Int& K1 = 1);

std::string format_real(double x);

}  // namespace metab
