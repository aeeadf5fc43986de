#include "metab/laurent.hpp"

namespace metab {

namespace {

std::vector<std::size_t> free_indices(const RingSpec& ring) {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    if (!ring.is_torsion(i)) r.push_back(i);
  return r;
}

Monomial poly_monomial(const Monomial& m, const RingSpec& ring, const std::vector<std::size_t>& fr) {
  Monomial r(ring.nvars() + fr.size(), m.basis);
  for (std::size_t i = 0; i < ring.nvars(); ++i) r.exps[i] = m.exps[i];
  for (std::size_t j = 0; j < fr.size(); ++j) {
    const Int& e = m.exps[fr[j]];
    if (sgn(e) < 0) {
      r.exps[fr[j]] = 0;
      r.exps[ring.nvars() + j] = -e;
    }
  }
  return r;
}

}  // namespace

EmbeddedGenerators laurent_embed(const std::vector<ModuleElement>& F, const RingSpec& ring, std::size_t nbasis) {
  for (long o : ring.orders)
    if (o < 0) throw std::invalid_argument("torsion order must be positive");
  auto fr = free_indices(ring);
  std::size_t n = ring.nvars(), pn = n + fr.size();
  EmbeddedGenerators out;
  out.poly_ring.vars = ring.vars;
  out.poly_ring.orders.assign(pn, 0);
  for (std::size_t i : fr) out.poly_ring.vars.push_back("s_" + ring.vars[i]);
  for (const auto& f0 : F) {
    if (f0.nvars() != n || f0.nbasis() != nbasis) throw AmbientMismatch("generator outside the ambient module");
    ModuleElement f = ring.normalize(f0);
    Monomial c(n);
    for (const auto& t : f.terms())
      for (std::size_t i : fr)
        if (-t.mono.exps[i] > c.exps[i]) c.exps[i] = -t.mono.exps[i];
    out.shifts.push_back(c);
    ModuleElement g = f.scale_translate(1, c);
    out.generators.push_back(g.map_monomials(pn, [&](const Monomial& m) { return poly_monomial(m, ring, fr); }));
  }
  out.nuser = F.size();
  for (std::size_t j = 0; j < fr.size(); ++j)
    for (std::size_t b = 0; b < nbasis; ++b) {
      Monomial ts(pn, static_cast<int>(b)), one(pn, static_cast<int>(b));
      ts.exps[fr[j]] = 1;
      ts.exps[n + j] = 1;
      out.generators.push_back(ModuleElement::from_terms(pn, nbasis, {{1, ts}, {-1, one}}));
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (!ring.is_torsion(i)) continue;
    for (std::size_t b = 0; b < nbasis; ++b) {
      Monomial ud(pn, static_cast<int>(b)), one(pn, static_cast<int>(b));
      ud.exps[i] = ring.orders[i];
      out.generators.push_back(ModuleElement::from_terms(pn, nbasis, {{1, ud}, {-1, one}}));
    }
  }
  return out;
}

LaurentEmbedding::LaurentEmbedding(const std::vector<ModuleElement>& F, const RingSpec& ring, std::size_t nbasis,
                                   long budget)
    : ring_(ring), nbasis_(nbasis), user_(F), free_(free_indices(ring)) {
  emb_ = laurent_embed(F, ring, nbasis);
  gb_ = buchberger_strong(emb_.generators, emb_.poly_ring.nvars(), nbasis, false, budget);
}

ModuleElement LaurentEmbedding::to_poly(const ModuleElement& g) const {
  ModuleElement h = ring_.normalize(g);
  std::size_t pn = emb_.poly_ring.nvars();
  return h.map_monomials(pn, [&](const Monomial& m) { return poly_monomial(m, ring_, free_); });
}

ModuleElement LaurentEmbedding::to_laurent(const ModuleElement& h) const {
  std::size_t n = ring_.nvars();
  ModuleElement r = h.map_monomials(n, [&](const Monomial& m) {
    Monomial out(n, m.basis);
    for (std::size_t i = 0; i < n; ++i) out.exps[i] = m.exps[i];
    for (std::size_t j = 0; j < free_.size(); ++j) out.exps[free_[j]] -= m.exps[n + j];
    return out;
  });
  return ring_.normalize(r);
}

ModuleElement LaurentEmbedding::normal_form(const ModuleElement& g, long budget) const {
  return metab::normal_form(to_poly(g), gb_, budget);
}

bool LaurentEmbedding::member(const ModuleElement& g, long budget) const {
  return normal_form(g, budget).is_zero();
}

LaurentEmbedding::Certificate LaurentEmbedding::certificate(const ModuleElement& g, long budget) const {
  if (gb_.reps.empty() && !gb_.generators.empty()) {
    GroebnerBasis t = buchberger_strong(emb_.generators, emb_.poly_ring.nvars(), nbasis_, true, budget);
    gb_.reps = std::move(t.reps);
  }
  Certificate c;
  c.division = divide_with_certificate(to_poly(g), gb_, budget);
  c.residue = to_laurent(c.division.residue);
  std::size_t n = ring_.nvars();
  c.coefficients.assign(user_.size(), ModuleElement(n, 1));
  for (std::size_t i = 0; i < gb_.generators.size(); ++i) {
    const auto& a = c.division.coefficients[i];
    if (a.is_zero()) continue;
    ModuleElement la = to_laurent(a);
    for (std::size_t j = 0; j < user_.size(); ++j) {
      const auto& rep = gb_.reps[i][j];
      if (rep.is_zero()) continue;
      c.coefficients[j] += la.times(to_laurent(rep));
    }
  }
  for (std::size_t j = 0; j < user_.size(); ++j) {
    c.coefficients[j] = ring_.normalize(c.coefficients[j].scale_translate(1, emb_.shifts[j]));
    c.size += c.coefficients[j].length();
  }
  return c;
}

}  // namespace metab
