#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "metab/json_io.hpp"
#include "metab/presets.hpp"

using namespace metab;

namespace {

struct Options {
  std::string presentation, word, element, family, format = "csv", budget = "2,3,4", poly, preset_name;
  std::vector<std::string> elements, polys;
  std::vector<long> torsion;
  long n = 0, samples = 0, steps = default_budget, param = 2;
  int r = 1, k = 1;
  std::uint64_t seed = 1;
  std::string K1 = "1";
};

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Presentation load(const Options& o) {
  if (o.presentation.empty()) throw InputError("missing -p/--presentation");
  std::ifstream in(o.presentation);
  if (!in) throw InputError("cannot read " + o.presentation);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void need(const std::string& v, const char* flag) {
  if (v.empty()) throw InputError(std::string("missing ") + flag);
}

OracleBudget parse_budget(const std::string& s) {
  OracleBudget b;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> b.max_degree >> c1 >> b.max_coef >> c2 >> b.max_size) || c1 != ',' || c2 != ',' || !in.eof() ||
      b.max_degree < 0 || b.max_coef < 1 || b.max_size < 0)
    throw InputError("--budget expects D,C,S");
  return b;
}

WordProblem problem(const Options& o) { return WordProblem(load(o), Int(o.K1), o.steps); }

int groebner(const Options& o) {
  Presentation p = load(o);
  std::vector<ModuleElement> F;
  if (o.elements.empty()) {
    for (auto& v : relator_module(p))
      if (!v.is_zero()) F.push_back(v);
  } else {
    for (const auto& e : o.elements) F.push_back(parse_element(e, p.ring(), basis_names(p)));
  }
  LaurentEmbedding e(F, p.ring(), basis_names(p).size(), o.steps);
  emit(groebner_json(e, basis_names(p)));
  return 0;
}

int nf(const Options& o, bool membership) {
  need(o.element, "-e/--element");
  WordProblem wp = problem(o);
  const Presentation& p = wp.presentation();
  ModuleElement g = parse_element(o.element, p.ring(), basis_names(p));
  json j;
  j["element"] = render_element(g, p.ring(), basis_names(p));
  if (!membership) {
    j["normal_form"] = render_element(wp.embedding().normal_form(g, o.steps), p.ring(), basis_names(p));
  } else {
    auto c = wp.embedding().certificate(g, o.steps);
    j["member"] = c.residue.is_zero();
    j["certificate"] = membership_json(c, p.ring(), basis_names(p));
  }
  emit(j);
  return 0;
}

int solve(const Options& o, int mode) {
  need(o.word, "-w/--word");
  WordProblem wp = problem(o);
  GroupWord w = parse_word(o.word, wp.presentation());
  if (mode == 0) {
    AreaCertificate c = wp.certify(w);
    json j;
    j["identity"] = c.identity;
    j["word"] = print_word(w);
    j["in_normal_closure"] = c.in_normal_closure;
    if (c.in_normal_closure)
      j["ordered_form"] = render_element(c.ordered.vector, wp.presentation().ring(), basis_names(wp.presentation()));
    emit(j);
    return 0;
  }
  emit(certificate_json(wp.area_certificate(w), wp.presentation(), mode == 2));
  return 0;
}

int module_dehn(const Options& o) {
  if (o.n < 1) throw InputError("-n must be at least 1");
  WordProblem wp = problem(o);
  auto rows = module_dehn_upper(wp, o.n, o.samples == 0, o.samples, o.seed);
  const Presentation& p = wp.presentation();
  if (o.format == "json") {
    json j;
    j["seed"] = o.seed;
    j["sampler"] = o.samples == 0 ? "exhaustive" : "random";
    json a = json::array();
    for (const auto& r : rows)
      a.push_back({{"norm", r.norm.get_str()},
                   {"count", r.count},
                   {"max_size", r.max_size.get_str()},
                   {"argmax", r.count ? render_element(r.argmax, p.ring(), basis_names(p)) : ""}});
    j["rows"] = a;
    emit(j);
    return 0;
  }
  std::cout << "# seed " << o.seed << " sampler " << (o.samples == 0 ? "exhaustive" : "random") << "\n";
  std::cout << "norm,count,max_size,argmax\n";
  for (const auto& r : rows)
    std::cout << r.norm << "," << r.count << "," << r.max_size << ",\""
              << (r.count ? render_element(r.argmax, p.ring(), basis_names(p)) : "") << "\"\n";
  return 0;
}

std::string opt(const std::optional<Int>& v) { return v ? v->get_str() : ""; }

int profile(const Options& o) {
  if (o.n < 2) throw InputError("-n must be at least 2");
  WordProblem wp = problem(o);
  Profile pr = dehn_profile(wp, o.family, o.n, o.samples, o.seed);
  std::cout << "# family " << (pr.family.empty() ? "none" : pr.family) << " seed " << pr.seed << "\n";
  std::cout << "n,max_witnessed,max_cert_size,bound,witness_length,witness_cost,witness_cert_size,band_lower\n";
  for (const auto& r : pr.rows)
    std::cout << r.n << "," << r.max_witnessed << "," << r.max_cert_size << "," << r.bound.str() << ","
              << opt(r.witness_length) << "," << opt(r.witness_cost) << "," << opt(r.witness_cert_size) << ","
              << opt(r.band_lower) << "\n";
  return 0;
}

int constants(const Options& o) {
  Presentation p = load(o);
  if (!p.tameness) throw InputError("presentation has no lambda datum");
  GeometryReport g = geometry_constants(*p.tameness, p.ring());
  json j = geometry_json(g, tameness_check(*p.tameness, p.ring()));
  j["K"] = conjugation_constant(p, Int(o.K1)).get_str();
  emit(j);
  return 0;
}

int norm_growth_cmd(const Options& o) {
  need(o.poly, "-f");
  if (o.n < 1) throw InputError("-n must be at least 1");
  std::set<std::string> names;
  for (std::size_t i = 0; i < o.poly.size();) {
    if (std::isalpha(static_cast<unsigned char>(o.poly[i])) || o.poly[i] == '_') {
      std::size_t j = i;
      while (j < o.poly.size() && (std::isalnum(static_cast<unsigned char>(o.poly[j])) || o.poly[j] == '_')) ++j;
      names.insert(o.poly.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  if (names.size() > 1) throw InputError("-f must use a single variable");
  RingSpec r{{names.empty() ? std::string("t") : *names.begin()}, {0}};
  NormGrowth g = norm_growth(parse_ring(o.poly, r), static_cast<int>(o.n));
  if (o.format == "json") {
    json j;
    json a = json::array();
    for (const auto& v : g.norms) a.push_back(v.get_str());
    j["norms"] = a;
    j["alpha"] = format_real(g.alpha);
    emit(j);
    return 0;
  }
  std::cout << "n,norm\n";
  for (std::size_t i = 0; i < g.norms.size(); ++i) std::cout << i + 1 << "," << g.norms[i] << "\n";
  std::cout << "# alpha " << format_real(g.alpha) << "\n";
  return 0;
}

int preset(const Options& o) {
  const std::string& s = o.preset_name;
  Presentation p;
  if (s == "bs") {
    p = bs(o.param);
  } else if (s == "lamplighter") {
    p = lamplighter(o.param);
  } else if (s == "zwrz") {
    p = zwrz();
  } else if (s == "baumslag_gamma") {
    p = baumslag_gamma();
  } else if (s == "free_abelian") {
    p = free_abelian(o.param);
  } else if (s == "wf") {
    WfSpec w;
    w.r = o.r;
    w.k = o.k;
    w.torsion_orders = o.torsion;
    w.polys = o.polys;
    p = wf(w);
  } else {
    throw InputError("unknown preset '" + s + "'");
  }
  std::cout << presentation_to_json(p) << "\n";
  return 0;
}

int oracle(const Options& o) {
  need(o.element, "-e/--element");
  WordProblem wp = problem(o);
  const Presentation& p = wp.presentation();
  ModuleElement g = parse_element(o.element, p.ring(), basis_names(p));
  OracleBudget b = parse_budget(o.budget);
  auto r = brute_force_min_certificate(g, wp.generators(), p.ring(), b);
  json j;
  j["element"] = render_element(g, p.ring(), basis_names(p));
  j["budget"] = {b.max_degree, b.max_coef, b.max_size};
  j["min_size"] = r ? json(r->get_str()) : json("none");
  j["gb_member"] = wp.embedding().member(g, o.steps);
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metab: word problems in metabelian groups"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("-p,--presentation", o.presentation, "presentation JSON file");
    c->add_option("--steps", o.steps, "reduction step budget");
    c->add_option("--K1", o.K1, "lower bound for the conjugation constant");
  };
  auto* g = app.add_subcommand("groebner", "Groebner basis of the relator module or of -e elements");
  common(g);
  g->add_option("-e,--element", o.elements, "submodule generator (repeatable)");
  auto* n = app.add_subcommand("nf", "normal form modulo the relator module");
  auto* m = app.add_subcommand("member", "membership with certificate");
  auto* orc = app.add_subcommand("oracle", "brute force minimal certificate");
  for (auto* c : {n, m, orc}) {
    common(c);
    c->add_option("-e,--element", o.element, "module element");
  }
  orc->add_option("--budget", o.budget, "max degree, coefficient, size as D,C,S");
  auto* sv = app.add_subcommand("solve", "decide whether a word is the identity");
  auto* ar = app.add_subcommand("area", "area certificate");
  auto* ra = app.add_subcommand("rel-area", "relative area certificate");
  for (auto* c : {sv, ar, ra}) {
    common(c);
    c->add_option("-w,--word", o.word, "group word");
  }
  auto* md = app.add_subcommand("module-dehn", "module Dehn function estimate");
  auto* pf = app.add_subcommand("profile", "Dehn profile with witness columns");
  for (auto* c : {md, pf}) {
    common(c);
    c->add_option("-n", o.n, "size")->required();
    c->add_option("--samples", o.samples, "random samples (0 means exhaustive for module-dehn)");
    c->add_option("--seed", o.seed, "random seed");
  }
  md->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  pf->add_option("--family", o.family, "witness family: bs, wf, free_abelian");
  auto* cs = app.add_subcommand("constants", "geometric constants of the lambda datum");
  common(cs);
  auto* ng = app.add_subcommand("norm-growth", "l1 norms of powers of f");
  ng->add_option("-f", o.poly, "one-variable polynomial")->required();
  ng->add_option("-n", o.n, "largest power")->required();
  ng->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* ps = app.add_subcommand("preset", "emit a preset presentation");
  ps->add_option("name", o.preset_name, "bs, lamplighter, zwrz, baumslag_gamma, free_abelian, wf")->required();
  ps->add_option("-n", o.param, "parameter for bs, lamplighter, free_abelian");
  ps->add_option("--r", o.r, "wf module rank");
  ps->add_option("--k", o.k, "wf free rank");
  ps->add_option("--torsion", o.torsion, "wf torsion orders");
  ps->add_option("--poly", o.polys, "wf polynomials f_i");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (*g) return groebner(o);
    if (*n) return nf(o, false);
    if (*m) return nf(o, true);
    if (*orc) return oracle(o);
    if (*sv) return solve(o, 0);
    if (*ar) return solve(o, 1);
    if (*ra) return solve(o, 2);
    if (*md) return module_dehn(o);
    if (*pf) return profile(o);
    if (*cs) return constants(o);
    if (*ng) return norm_growth_cmd(o);
    if (*ps) return preset(o);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
