#pragma once

#include <string>
#include <vector>

#include "metab/presentation.hpp"

namespace metab {

Presentation bs(long n);
Presentation lamplighter(long m);
Presentation zwrz();
Presentation baumslag_gamma();
Presentation free_abelian(long k = 2);

struct WfSpec {
  int r = 1;
  int k = 1;
  std::vector<long> torsion_orders;  // orders of t_{k+1}..t_l
  std::vector<std::string> polys;    // f_i in the variable t_i, e.g. "1 + t1"
};
Presentation wf(const WfSpec& spec);

struct NormGrowth {
  std::vector<Int> norms;  // |f^n| for n = 1..N
  double alpha = 0;
};
NormGrowth norm_growth(const ModuleElement& f, int N);

}  // namespace metab
