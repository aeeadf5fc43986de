#include "metab/presets.hpp"

#include <cmath>

#include "metab/collection.hpp"

namespace metab {

namespace {

Presentation finish(Presentation p, const std::vector<std::string>& relators) {
  validate_presentation(p);
  for (const auto& r : relators) p.relators.push_back(parse_word(r, p));
  validate_presentation(p);
  return p;
}

}  // namespace

Presentation bs(long n) {
  if (n <= 1) throw std::invalid_argument("bs needs n >= 2");
  Presentation p;
  p.module_gens = {"a"};
  p.free_gens = {"t"};
  RingSpec ring = p.ring();
  std::string ns = std::to_string(n);
  p.tameness = TamenessDatum{{parse_ring(ns + "*t", ring)}, {parse_ring(ns + "*t^-1", ring)}};
  return finish(p, {"t*a*t^-1*a^-" + ns});
}

Presentation lamplighter(long m) {
  if (m < 2) throw std::invalid_argument("lamplighter needs m >= 2");
  Presentation p;
  p.module_gens = {"a"};
  p.free_gens = {"t"};
  return finish(p, {"a^" + std::to_string(m), "[a, a^t]"});
}

Presentation zwrz() {
  Presentation p;
  p.module_gens = {"a"};
  p.free_gens = {"t"};
  return finish(p, {"[a, a^t]"});
}

Presentation baumslag_gamma() {
  Presentation p;
  p.module_gens = {"a", "b"};
  p.free_gens = {"s", "t"};
  p.commutator_table[{0, 1}] = {1, 1};
  return finish(p, {"b", "[a, a^t]", "a^s*a^-1*(a^-1)^t"});
}

Presentation free_abelian(long k) {
  if (k < 1) throw std::invalid_argument("free_abelian needs k >= 1");
  Presentation p;
  std::vector<std::string> rel;
  for (long i = 1; i <= k; ++i) p.free_gens.push_back("t" + std::to_string(i));
  if (k == 1) p.module_gens.push_back("b");
  for (long i = 0; i < k; ++i)
    for (long j = i + 1; j < k; ++j) {
      std::string name = k == 2 ? "b" : "b" + std::to_string(i + 1) + std::to_string(j + 1);
      p.commutator_table[{static_cast<int>(i), static_cast<int>(j)}] = {static_cast<int>(p.module_gens.size()), 1};
      p.module_gens.push_back(name);
      rel.push_back(name);
    }
  if (k == 1) rel.push_back("b");
  return finish(p, rel);
}

Presentation wf(const WfSpec& spec) {
  if (spec.r < 1 || spec.k < 1) throw std::invalid_argument("wf needs r, k >= 1");
  if (static_cast<int>(spec.polys.size()) != spec.k) throw std::invalid_argument("wf needs one polynomial per t_i");
  Presentation p;
  std::vector<std::string> rel;
  for (int i = 1; i <= spec.r; ++i) p.module_gens.push_back("a" + std::to_string(i));
  for (int i = 1; i <= spec.k; ++i) p.free_gens.push_back("t" + std::to_string(i));
  for (int i = 1; i <= spec.k; ++i) p.free_gens.push_back("u" + std::to_string(i));
  for (std::size_t i = 0; i < spec.torsion_orders.size(); ++i)
    p.torsion_gens.push_back({"t" + std::to_string(spec.k + 1 + static_cast<int>(i)), spec.torsion_orders[i]});
  for (std::size_t i = 0; i < p.nt(); ++i)
    for (std::size_t j = i + 1; j < p.nt(); ++j) {
      std::string name = "c_" + p.t_name(i) + "_" + p.t_name(j);
      p.commutator_table[{static_cast<int>(i), static_cast<int>(j)}] = {static_cast<int>(p.module_gens.size()), 1};
      p.module_gens.push_back(name);
      rel.push_back(name);
    }
  validate_presentation(p);
  RingSpec ring = p.ring();

  std::vector<long> degs;
  std::vector<ModuleElement> fs;
  for (int i = 0; i < spec.k; ++i) {
    ModuleElement f = parse_ring(spec.polys[i], ring);
    for (const auto& t : f.terms())
      for (std::size_t v = 0; v < ring.nvars(); ++v)
        if ((v != static_cast<std::size_t>(i) && t.mono.exps[v] != 0) || sgn(t.mono.exps[v]) < 0)
          throw std::invalid_argument("f_" + std::to_string(i + 1) + " must be a polynomial in t" + std::to_string(i + 1));
    Monomial one(ring.nvars(), 0);
    if (f.is_zero() || f.leading_coef() != 1 || f.coef_of(one) != 1 || f.degree() < 1)
      throw std::invalid_argument("f_" + std::to_string(i + 1) + " must be monic with constant term 1");
    degs.push_back(f.degree().get_si());
    fs.push_back(f);
  }

  for (int i = 1; i <= spec.r; ++i)
    for (int j = i + 1; j <= spec.r; ++j) rel.push_back("[a" + std::to_string(i) + ", a" + std::to_string(j) + "]");

  std::vector<GroupWord> box{GroupWord()};
  std::vector<std::pair<std::string, long>> ranges;
  for (int i = 0; i < spec.k; ++i) ranges.push_back({p.free_gens[i], degs[i] + 1});
  for (const auto& [n, d] : p.torsion_gens) ranges.push_back({n, d});
  for (const auto& [n, len] : ranges) {
    std::vector<GroupWord> next;
    for (const auto& w : box)
      for (long e = 0; e < len; ++e) next.push_back(w * letter(n, e));
    box = std::move(next);
  }
  std::vector<GroupWord> conj;
  for (int i = 0; i < spec.r; ++i)
    for (const auto& u : box) conj.push_back(conjugate(letter(p.module_gens[i]), u));

  Presentation out = finish(p, rel);
  for (std::size_t x = 0; x < conj.size(); ++x)
    for (std::size_t y = x + 1; y < conj.size(); ++y) out.relators.push_back(commutator(conj[x], conj[y]));

  for (int i = 0; i < spec.r; ++i)
    for (int j = 0; j < spec.k; ++j) {
      GroupWord a = letter(p.module_gens[i]);
      GroupWord w = conjugate(a, letter(p.free_gens[spec.k + j]));
      for (auto it = fs[j].terms().rbegin(); it != fs[j].terms().rend(); ++it)
        w = w * conjugate(letter(p.module_gens[i], Int(-it->coef)), t_word(it->mono, p));
      out.relators.push_back(w);
    }
  validate_presentation(out);
  return out;
}

NormGrowth norm_growth(const ModuleElement& f, int N) {
  if (f.nbasis() != 1 || f.nvars() != 1) throw std::invalid_argument("norm_growth needs a one-variable ring element");
  Monomial one(1, 0);
  for (const auto& t : f.terms())
    if (sgn(t.mono.exps[0]) < 0) throw std::invalid_argument("norm_growth needs a polynomial");
  if (f.is_zero() || f.leading_coef() != 1 || f.coef_of(one) != 1 || f.degree() < 1)
    throw std::invalid_argument("norm_growth needs f monic with constant term 1");
  if (N < 1) throw std::invalid_argument("norm_growth needs N >= 1");
  NormGrowth g;
  ModuleElement p = f;
  for (int n = 1; n <= N; ++n) {
    g.norms.push_back(p.length());
    p = p.times(f);
  }
  if (N == 1) {
    g.alpha = g.norms[0].get_d();
    return g;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int n = 1; n <= N; ++n) {
    double y = Bound::log2_of(g.norms[n - 1]) * std::log(2.0);
    sx += n, sy += y, sxx += double(n) * n, sxy += n * y;
  }
  double slope = (N * sxy - sx * sy) / (N * sxx - sx * sx);
  g.alpha = std::exp(slope);
  return g;
}

}  // namespace metab
