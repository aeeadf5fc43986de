#include "metab/groebner.hpp"

#include <algorithm>

namespace metab {

namespace {

bool lc_reduces(const Int& lc, const Int& c) { return compare_integers(lc, c) <= 0; }

struct Tracked {
  ModuleElement v;
  std::vector<ModuleElement> rep;
};

ModuleElement ring_monomial(std::size_t nvars, const Int& c, const Monomial& u) {
  return ModuleElement::monomial(nvars, 1, c, Monomial(u.exps, 0));
}

void spend(long& budget) {
  if (--budget < 0) throw BudgetExceeded("reduction step budget exhausted");
}

void make_positive(Tracked& x) {
  if (sgn(x.v.leading_coef()) < 0) {
    x.v = -x.v;
    for (auto& r : x.rep) r = -r;
  }
}

// g - q*u*f on a tracked pair
void subtract(Tracked& x, const Tracked& f, const Int& q, const Monomial& u) {
  x.v -= f.v.scale_translate(q, u);
  if (!f.rep.empty()) {
    ModuleElement m = ring_monomial(x.v.nvars(), q, u);
    for (std::size_t j = 0; j < x.rep.size(); ++j) x.rep[j] -= f.rep[j].times(m);
  }
}

void reduce_tracked(Tracked& x, const std::vector<Tracked>& G, const std::vector<ModuleElement>& gens,
                    long& budget) {
  while (!x.v.is_zero()) {
    auto st = reduce_step(x.v, gens);
    if (!st) return;
    spend(budget);
    subtract(x, G[st->index], st->q, st->shift);
  }
}

// reduces only while the leading term is reducible
Tracked combine(const Tracked& a, const Int& ca, const Monomial& ua, const Tracked& b, const Int& cb,
                const Monomial& ub) {
  Tracked r{a.v.scale_translate(ca, ua) + b.v.scale_translate(cb, ub), {}};
  if (!a.rep.empty()) {
    std::size_t n = a.v.nvars();
    ModuleElement ma = ring_monomial(n, ca, ua), mb = ring_monomial(n, cb, ub);
    for (std::size_t j = 0; j < a.rep.size(); ++j) r.rep.push_back(a.rep[j].times(ma) + b.rep[j].times(mb));
  }
  return r;
}

bool lt_divides(const ModuleElement& f, const ModuleElement& g) {
  return mono_divides(f.leading_monomial(), g.leading_monomial()) &&
         mpz_divisible_p(g.leading_coef().get_mpz_t(), f.leading_coef().get_mpz_t());
}

}  // namespace

std::optional<ReductionStep> reduce_step(const ModuleElement& g, const std::vector<ModuleElement>& F) {
  for (const auto& t : g.terms()) {
    std::size_t best = F.size();
    for (std::size_t i = 0; i < F.size(); ++i) {
      const auto& f = F[i];
      if (f.is_zero() || !mono_divides(f.leading_monomial(), t.mono) || !lc_reduces(f.leading_coef(), t.coef))
        continue;
      if (best == F.size() || compare_integers(f.leading_coef(), F[best].leading_coef()) < 0) best = i;
    }
    if (best == F.size()) continue;
    const auto& f = F[best];
    Int a = abs(f.leading_coef());
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), t.coef.get_mpz_t(), a.get_mpz_t());
    Int q = (t.coef - r) / f.leading_coef();
    Monomial u = mono_quotient(t.mono, f.leading_monomial());
    return ReductionStep{g - f.scale_translate(q, u), best, q, u};
  }
  return std::nullopt;
}

ModuleElement normal_form(const ModuleElement& g, const std::vector<ModuleElement>& F, long budget) {
  ModuleElement h = g;
  while (auto st = reduce_step(h, F)) {
    spend(budget);
    h = std::move(st->h);
  }
  return h;
}

ModuleElement normal_form(const ModuleElement& g, const GroebnerBasis& G, long budget) {
  return normal_form(g, G.generators, budget);
}

GroebnerBasis buchberger_strong(const std::vector<ModuleElement>& F, std::size_t nvars, std::size_t nbasis,
                                bool track_reps, long budget) {
  for (const auto& f : F)
    if (f.nvars() != nvars || f.nbasis() != nbasis) throw AmbientMismatch("generator outside the ambient module");
  std::vector<Tracked> G;
  std::vector<ModuleElement> gens;
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    Int lc;
    bool s_redundant = false;
  };
  std::vector<Pair> pairs;
  std::vector<bool> active;
  auto pair_of = [&](std::size_t i, std::size_t j, const ModuleElement& gj) {
    Pair p{i, j, mono_lcm(gens[i].leading_monomial(), gj.leading_monomial()), 0};
    mpz_lcm(p.lc.get_mpz_t(), gens[i].leading_coef().get_mpz_t(), gj.leading_coef().get_mpz_t());
    return p;
  };
  auto same = [](const Pair& a, const Pair& b) { return a.lc == b.lc && a.lcm == b.lcm; };

  auto add = [&](Tracked x) {
    reduce_tracked(x, G, gens, budget);
    if (x.v.is_zero()) return;
    make_positive(x);
    std::size_t n = G.size();
    const Monomial& lm = x.v.leading_monomial();
    const Int& lc = x.v.leading_coef();
    // chain criterion, applied to the S-polynomial half of a pair only
    for (auto& p : pairs) {
      if (!mono_divides(lm, p.lcm) || !mpz_divisible_p(p.lc.get_mpz_t(), lc.get_mpz_t())) continue;
      if (!same(pair_of(p.i, n, x.v), p) && !same(pair_of(p.j, n, x.v), p)) p.s_redundant = true;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (active[i] && gens[i].leading_monomial().basis == lm.basis) pairs.push_back(pair_of(i, n, x.v));
    for (std::size_t i = 0; i < n; ++i)
      if (active[i] && lt_divides(x.v, gens[i])) active[i] = false;
    gens.push_back(x.v);
    G.push_back(std::move(x));
    active.push_back(true);
  };

  for (std::size_t j = 0; j < F.size(); ++j) {
    Tracked x{F[j], {}};
    if (track_reps) {
      x.rep.assign(F.size(), ModuleElement(nvars, 1));
      x.rep[j] = ModuleElement::constant(nvars, 1);
    }
    add(std::move(x));
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return compare_monomials(a.lcm, b.lcm) < 0;
    });
    Pair p = *it;
    pairs.erase(it);
    Tracked gi = G[p.i], gj = G[p.j];
    const Int &a = gi.v.leading_coef(), &b = gj.v.leading_coef();
    Monomial ui = mono_quotient(p.lcm, gi.v.leading_monomial());
    Monomial uj = mono_quotient(p.lcm, gj.v.leading_monomial());
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    bool ab = mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()), ba = mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t());
    if (!ab && !ba) {
      Int d, x, y;
      mpz_gcdext(d.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      add(combine(gi, x, ui, gj, y, uj));
    }
    if (!p.s_redundant) add(combine(gi, Int(l / a), ui, gj, Int(-(l / b)), uj));
  }

  std::vector<bool> keep(G.size(), true);
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < G.size() && keep[i]; ++j) {
      if (i == j || !keep[j] || !lt_divides(gens[j], gens[i])) continue;
      bool same = gens[i].leading_monomial() == gens[j].leading_monomial() &&
                  gens[i].leading_coef() == gens[j].leading_coef();
      if (!same || j < i) keep[i] = false;
    }
  std::vector<Tracked> H;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (keep[i]) H.push_back(std::move(G[i]));
  std::sort(H.begin(), H.end(),
            [](const Tracked& x, const Tracked& y) { return compare_elements(x.v, y.v) < 0; });

  std::vector<ModuleElement> hs;
  for (const auto& h : H) hs.push_back(h.v);
  for (std::size_t i = 0; i < H.size(); ++i) {
    const Term lt = H[i].v.leading_term();
    Tracked tail = H[i];
    tail.v -= ModuleElement::monomial(nvars, nbasis, lt.coef, lt.mono);
    std::vector<Tracked> others;
    std::vector<ModuleElement> ogens;
    for (std::size_t j = 0; j < H.size(); ++j)
      if (j != i) others.push_back(H[j]), ogens.push_back(hs[j]);
    reduce_tracked(tail, others, ogens, budget);
    H[i].v = tail.v + ModuleElement::monomial(nvars, nbasis, lt.coef, lt.mono);
    H[i].rep = std::move(tail.rep);
    hs[i] = H[i].v;
  }

  GroebnerBasis out;
  out.nvars = nvars;
  out.nbasis = nbasis;
  out.origin = F;
  for (auto& h : H) {
    out.generators.push_back(std::move(h.v));
    if (track_reps) out.reps.push_back(std::move(h.rep));
  }
  return out;
}

DivisionCertificate divide_with_certificate(const ModuleElement& g, const GroebnerBasis& G, long budget) {
  DivisionCertificate c;
  c.coefficients.assign(G.generators.size(), ModuleElement(G.nvars, 1));
  ModuleElement h = g;
  while (auto st = reduce_step(h, G.generators)) {
    spend(budget);
    c.coefficients[st->index] += ring_monomial(G.nvars, st->q, st->shift);
    ++c.steps;
    h = std::move(st->h);
  }
  c.residue = std::move(h);
  for (const auto& a : c.coefficients) c.size += a.length();
  Int C = 0;
  for (const auto& f : G.generators) C = std::max(C, f.length());
  c.bound = division_bound(g.length(), C, G.nbasis, G.nvars, g.degree());
  return c;
}

Bound division_bound(const Int& p, const Int& C, std::size_t m, std::size_t k, const Int& n) {
  if (p == 0) return Bound(Int(0));
  Int r;
  if (n.fits_ulong_p()) {
    mpz_bin_uiui(r.get_mpz_t(), n.get_ui() + k, k);
  } else {
    Int top = n + static_cast<unsigned long>(k);
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
  }
  r *= static_cast<unsigned long>(m);
  if (C == 0) return Bound(Int(p * r));
  double bits = r.get_d() * Bound::log2_of(Int(C + 1));
  if (bits < Bound::max_exact_bits) {
    Int s;
    mpz_pow_ui(s.get_mpz_t(), Int(C + 1).get_mpz_t(), r.get_ui());
    return Bound(Int(p * ((s - 1) / C)));
  }
  return Bound::from_log2(Bound::log2_of(p) + bits - Bound::log2_of(C));
}

Int growth_function(long k, long n) {
  if (k < 0 || n < 0) throw std::invalid_argument("growth function needs non-negative arguments");
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n + k), static_cast<unsigned long>(k));
  return r;
}

}  // namespace metab
