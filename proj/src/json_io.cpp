#include "metab/json_io.hpp"

namespace metab {

std::vector<std::string> basis_names(const Presentation& p) {
  if (p.module_gens.empty()) return {"e"};
  return p.module_gens;
}

json groebner_json(const LaurentEmbedding& e, const std::vector<std::string>& basis) {
  json j;
  j["variables"] = e.embedded().poly_ring.vars;
  json gens = json::array();
  for (const auto& g : e.basis().generators) gens.push_back(render_element(g, e.embedded().poly_ring, basis));
  j["generators"] = gens;
  json lau = json::array();
  for (const auto& g : e.basis().generators) {
    ModuleElement l = e.to_laurent(g);
    if (!l.is_zero()) lau.push_back(render_element(l, e.ring(), basis));
  }
  j["laurent_generators"] = lau;
  return j;
}

json division_json(const DivisionCertificate& d, const RingSpec& ring, const std::vector<std::string>& basis) {
  json j;
  json c = json::array();
  for (const auto& a : d.coefficients) c.push_back(render_ring(a, ring));
  j["coefficients"] = c;
  j["residue"] = render_element(d.residue, ring, basis);
  j["steps"] = d.steps.get_str();
  j["size"] = d.size.get_str();
  j["bound"] = d.bound.str();
  return j;
}

json membership_json(const LaurentEmbedding::Certificate& c, const RingSpec& ring,
                     const std::vector<std::string>& basis) {
  json j;
  json a = json::array();
  for (const auto& x : c.coefficients) a.push_back(render_ring(x, ring));
  j["alphas"] = a;
  j["residue"] = render_element(c.residue, ring, basis);
  j["size"] = c.size.get_str();
  j["bound"] = c.division.bound.str();
  j["steps"] = c.division.steps.get_str();
  return j;
}

json ledger_json(const CostLedger& l) {
  json j;
  j["r1"] = l.r1.get_str();
  j["r2_count"] = l.r2_count.get_str();
  j["r2_absolute"] = l.r2_abs.get_str();
  j["r2_relative"] = l.r2_rel.get_str();
  j["module_relations"] = l.module_relations.get_str();
  j["power_relations"] = l.power_relations.get_str();
  j["free_steps"] = l.free_steps.get_str();
  j["absolute_total"] = l.absolute_total().get_str();
  j["relative_total"] = l.relative_total().get_str();
  return j;
}

json certificate_json(const AreaCertificate& c, const Presentation& p, bool relative) {
  json j;
  j["identity"] = c.identity;
  j["length"] = c.n.get_str();
  j["in_normal_closure"] = c.in_normal_closure;
  if (c.in_normal_closure) {
    j["ordered_form"] = render_element(c.ordered.vector, p.ring(), basis_names(p));
    j["ledger"] = ledger_json(c.ledger);
    j["membership"] = membership_json(c.membership, p.ring(), basis_names(p));
  }
  if (relative) {
    j["witnessed_relative"] = c.witnessed_relative().get_str();
    j["relative_bound"] = c.relative_bound.str();
  } else {
    j["witnessed_absolute"] = c.witnessed_absolute().get_str();
    j["C"] = c.C.get_str();
    j["pipeline_bound"] = c.pipeline_bound.str();
    j["assembly_bound"] = c.assembly_bound.str();
    j["relative_bound"] = c.relative_bound.str();
  }
  return j;
}

json geometry_json(const GeometryReport& g, const TamenessVerdict& t) {
  json j;
  j["C"] = format_real(g.C);
  j["D"] = format_real(g.D);
  j["r0"] = format_real(g.r0);
  j["R"] = g.R ? format_real(*g.R) : "undefined";
  if (!g.R) j["R_diagnostic"] = g.R_diagnostic;
  j["k"] = g.k;
  j["method"] = g.exact ? "exact" : "grid";
  if (!g.exact) j["grid"] = g.grid;
  j["tame"] = t.tame;
  return j;
}

}  // namespace metab
