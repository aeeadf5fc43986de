#include "metab/word_problem.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "metab/constants.hpp"

namespace metab {

WordProblem::WordProblem(Presentation p, const Int& K1, long budget) : p_(std::move(p)), budget_(budget) {
  for (auto& v : relator_module(p_))
    if (!v.is_zero()) gens_.push_back(std::move(v));
  std::size_t nb = std::max<std::size_t>(p_.m(), 1);
  emb_ = LaurentEmbedding(gens_, p_.ring(), nb, budget);
  K_ = conjugation_constant(p_, K1);
  Int P = 0, Q = 0;
  for (const auto& g : emb_.basis().generators) {
    ModuleElement l = emb_.to_laurent(g);
    P = std::max(P, l.length());
    Q = std::max(Q, l.degree());
  }
  Int m(static_cast<unsigned long>(nb));
  C_ = std::max(Int(4 * m * m * P * P * Q * K_), Int(K_ + 1));
}

AreaCertificate WordProblem::certify(const GroupWord& w) const {
  AreaCertificate c;
  c.n = w.length();
  c.C = C_;
  c.pipeline_bound = pipeline_bound(c.n, K_);
  c.assembly_bound = assembly_bound(c.n, C_, p_.k());
  bool closed = true;
  for (const auto& e : exponent_sums(w, p_)) closed &= e == 0;
  c.in_normal_closure = closed;
  if (!closed) {
    c.relative_bound = relative_bound(c.n, Bound(Int(0)));
    return c;
  }
  auto [of, ledger] = ordered_form(w, p_, K_);
  c.ordered = std::move(of);
  c.ledger = ledger;
  c.membership = emb_.certificate(c.ordered.vector, budget_);
  c.identity = c.membership.residue.is_zero();
  c.relative_bound = relative_bound(c.n, c.membership.division.bound);
  return c;
}

AreaCertificate WordProblem::area_certificate(const GroupWord& w) const {
  AreaCertificate c = certify(w);
  if (!c.identity) throw NotIdentity("word " + print_word(w) + " is not the identity");
  return c;
}

Bound pipeline_bound(const Int& n, const Int& K) {
  Int nn = n * n + n;
  Bound b = Bound(Int(n * n)) + Bound(nn) * Bound(Int(2 * K)).pow(n) + Bound(Int(nn * nn)) * Bound(K).pow(Int(2 * n));
  return b;
}

Bound assembly_bound(const Int& n, const Int& C, std::size_t k) {
  Int e;
  mpz_pow_ui(e.get_mpz_t(), n.get_mpz_t(), 2 * k);
  Int nn = n + n * n;
  return Bound(C).pow(e) + Bound(Int(nn * nn)) * Bound(C).pow(Int(2 * n)) + Bound(nn) * Bound(Int(2 * C)).pow(n) +
         Bound(Int(n * n));
}

Bound relative_bound(const Int& n, const Bound& membership) {
  Int nn = n + n * n;
  Int comm = std::max(Int(1), Int(8 * n - 3));
  return Bound(Int(n * n + nn * (4 * n * n + 2 * n) + nn * nn * comm)) + membership;
}

Int module_norm(const ModuleElement& f) {
  Int s = 0;
  for (const auto& t : f.terms()) s += abs(t.coef) * (2 * t.mono.degree() + 1);
  return s;
}

namespace {

std::string key_of(const ModuleElement& r) {
  std::string k;
  for (const auto& t : r.terms()) {
    k += t.coef.get_str() + ":" + std::to_string(t.mono.basis);
    for (const auto& e : t.mono.exps) k += "," + e.get_str();
    k += ";";
  }
  return k;
}

class Oracle {
 public:
  Oracle(const std::vector<ModuleElement>& gens, const RingSpec& ring, const OracleBudget& b)
      : gens_(gens), ring_(ring), b_(b) {
    for (const auto& g : gens_) gmax_ = std::max(gmax_, g.length());
    memo_ok_ = b_.max_coef >= b_.max_size;
  }

  std::optional<Int> run(const ModuleElement& g) {
    for (long s = 0; s <= b_.max_size; ++s) {
      failed_.clear();
      if (dfs(g, s)) return Int(s);
    }
    return std::nullopt;
  }

 private:
  bool dfs(const ModuleElement& r, long left) {
    if (r.is_zero()) return true;
    if (left == 0 || r.length() > gmax_ * left) return false;
    std::string key;
    if (memo_ok_) {
      key = key_of(r) + "#" + std::to_string(left);
      if (failed_.count(key)) return false;
    }
    const Term& lt = r.leading_term();
    std::set<std::pair<std::size_t, std::string>> seen;
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (const auto& t : gens_[i].terms()) {
        if (t.mono.basis != lt.mono.basis) continue;
        Monomial u = ring_.normalize(mono_quotient(lt.mono, t.mono));
        if (u.degree() > b_.max_degree) continue;
        std::string uk = std::to_string(i);
        for (const auto& e : u.exps) uk += "," + e.get_str();
        if (!seen.insert({i, uk}).second) continue;
        for (int sign : {1, -1}) {
          Int& c = coef_[uk];
          if (abs(c + sign) > b_.max_coef) continue;
          c += sign;
          ModuleElement next = ring_.normalize(r - gens_[i].scale_translate(sign, u));
          bool ok = dfs(next, left - 1);
          coef_[uk] -= sign;
          if (ok) return true;
        }
      }
    if (memo_ok_) failed_.insert(key);
    return false;
  }

  const std::vector<ModuleElement>& gens_;
  const RingSpec& ring_;
  OracleBudget b_;
  Int gmax_ = 0;
  bool memo_ok_;
  std::set<std::string> failed_;
  std::map<std::string, Int> coef_;
};

std::vector<Monomial> small_monomials(const RingSpec& ring, long max_deg, int basis) {
  std::vector<Monomial> out;
  Monomial cur(ring.nvars(), basis);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == ring.nvars()) {
      out.push_back(cur);
      return;
    }
    long lo = ring.is_torsion(i) ? 0 : -left;
    long hi = ring.is_torsion(i) ? std::min(left, ring.orders[i] - 1) : left;
    for (long e = lo; e <= hi; ++e) {
      cur.exps[i] = e;
      rec(i + 1, left - std::abs(e));
    }
    cur.exps[i] = 0;
  };
  rec(0, max_deg);
  return out;
}

}  // namespace

std::optional<Int> brute_force_min_certificate(const ModuleElement& g, const std::vector<ModuleElement>& gens,
                                               const RingSpec& ring, const OracleBudget& budget) {
  std::vector<ModuleElement> nz;
  for (const auto& f : gens)
    if (!f.is_zero()) nz.push_back(ring.normalize(f));
  return Oracle(nz, ring, budget).run(ring.normalize(g));
}

std::vector<ModuleDehnRow> module_dehn_upper(const WordProblem& wp, long n, bool exhaustive, long samples,
                                             std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("module Dehn estimate needs n >= 1");
  const RingSpec ring = wp.presentation().ring();
  std::size_t nb = wp.embedding().nbasis(), nv = ring.nvars();
  std::vector<ModuleDehnRow> rows(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) rows[i].norm = i + 1;
  auto record = [&](const ModuleElement& f) {
    Int norm = module_norm(f);
    if (f.is_zero() || norm > n || !wp.embedding().member(f)) return;
    Int size = wp.embedding().certificate(f).size;
    auto& row = rows[norm.get_si() - 1];
    ++row.count;
    if (size > row.max_size || row.argmax.nvars() == 0) row.max_size = size, row.argmax = f;
  };
  std::vector<Monomial> monos;
  for (std::size_t b = 0; b < nb; ++b)
    for (auto& m : small_monomials(ring, (n - 1) / 2, static_cast<int>(b))) monos.push_back(m);
  if (exhaustive) {
    std::vector<Term> cur;
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
      if (i == monos.size()) {
        record(ModuleElement::from_terms(nv, nb, cur));
        return;
      }
      rec(i + 1, left);
      Int w = 2 * monos[i].degree() + 1;
      for (Int c = 1; c * w <= left; ++c)
        for (int sign : {1, -1}) {
          cur.push_back({Int(sign * c), monos[i]});
          rec(i + 1, left - c * w);
          cur.pop_back();
        }
    };
    rec(0, n);
    return rows;
  }
  std::mt19937_64 rng(seed);
  const auto& gens = wp.generators();
  if (gens.empty()) return rows;
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> natoms(1, 3), coef(-2, 2);
  std::vector<Monomial> shifts = small_monomials(ring, std::max<long>(0, (n - 1) / 2), -1);
  std::uniform_int_distribution<std::size_t> ps(0, shifts.size() - 1);
  for (long s = 0; s < samples; ++s) {
    ModuleElement f(nv, nb);
    for (int a = natoms(rng); a > 0; --a) f += gens[pick(rng)].scale_translate(coef(rng), shifts[ps(rng)]);
    record(ring.normalize(f));
  }
  return rows;
}

std::optional<GroupWord> witness_word(const std::string& family, const Presentation& p, long n) {
  Int N(static_cast<long>(n));
  if (family == "bs") {
    if (p.relators.empty() || p.t_index("t") < 0 || p.module_index("a") < 0) return std::nullopt;
    ModuleElement v = ordered_form(p.relators[0], p).first.vector;
    Int k = -v.coef_of(Monomial(p.nt(), 0));
    Int kn;
    mpz_pow_ui(kn.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(n));
    return letter("t", N) * letter("a") * letter("t", Int(-N)) * letter("a", Int(-kn));
  }
  if (family == "wf") {
    if (p.module_index("a1") < 0 || p.t_index("u1") < 0) return std::nullopt;
    return commutator(conjugate(letter("a1"), letter("u1", N)), letter("a1"));
  }
  if (family == "free_abelian") {
    if (p.t_index("t1") < 0 || p.t_index("t2") < 0) return std::nullopt;
    return commutator(letter("t1", N), letter("t2", N));
  }
  return std::nullopt;
}

namespace {

GroupWord random_closed_word(std::mt19937_64& rng, const Presentation& p, long len) {
  std::uniform_int_distribution<int> kind(0, 1), s(0, 1);
  std::uniform_int_distribution<std::size_t> mg(0, std::max<std::size_t>(p.m(), 1) - 1), tg(0, std::max<std::size_t>(p.nt(), 1) - 1);
  GroupWord w;
  for (long i = 0; i < len; ++i) {
    bool mod = p.nt() == 0 || (p.m() > 0 && kind(rng) == 0);
    if (mod && p.m() == 0) break;
    w = w * letter(mod ? p.module_gens[mg(rng)] : p.t_name(tg(rng)), s(rng) ? 1 : -1);
  }
  auto sums = exponent_sums(w, p);
  for (std::size_t i = 0; i < p.nt(); ++i) {
    Int e = sums[i];
    if (long d = p.t_order(i); d > 0 && e > d / 2) e -= d;
    w = w * letter(p.t_name(i), Int(-e));
  }
  return w;
}

std::optional<Int> wf_band_lower(const WordProblem& wp, long n) {
  const Presentation& p = wp.presentation();
  int a = p.module_index("a1"), u = p.t_index("u1");
  if (a < 0 || u < 0) return std::nullopt;
  Monomial um(p.nt(), 0);
  um.exps[u] = 1;
  for (const auto& g : wp.generators()) {
    ModuleElement c = g.component(a);
    if (c.coef_of(um) != 1) continue;
    ModuleElement f = ModuleElement::monomial(p.nt(), 1, 1, um) - c;
    ModuleElement pw = ModuleElement::constant(p.nt(), 1);
    for (long i = 0; i < n; ++i) pw = p.ring().normalize(pw.times(f));
    return pw.length();
  }
  return std::nullopt;
}

}  // namespace

Profile dehn_profile(const WordProblem& wp, const std::string& family, long n_max, long samples, std::uint64_t seed) {
  if (n_max < 2) throw std::invalid_argument("profile needs n_max >= 2");
  const Presentation& p = wp.presentation();
  Profile prof{family, seed, {}};
  std::mt19937_64 rng(seed);
  std::vector<GroupWord> pool;
  std::vector<GroupWord> rels;
  for (const auto& r : p.relators) rels.push_back(r);
  for (long n = 1; n <= n_max; ++n) {
    ProfileRow row;
    row.n = n;
    row.bound = assembly_bound(Int(n), wp.C(), p.k());
    for (long s = 0; s < samples; ++s) {
      GroupWord w;
      if (s % 2 == 0 && !rels.empty()) {
        std::uniform_int_distribution<std::size_t> pr(0, rels.size() - 1);
        for (int tries = 0; tries < 4; ++tries) {
          GroupWord r = rels[pr(rng)];
          if (std::uniform_int_distribution<int>(0, 1)(rng)) r = inverse(r);
          GroupWord u = random_closed_word(rng, p, 0);
          std::uniform_int_distribution<std::size_t> tg(0, std::max<std::size_t>(p.nt(), 1) - 1);
          long ul = std::uniform_int_distribution<long>(0, std::max<long>(0, n / 4))(rng);
          for (long i = 0; i < ul && p.nt() > 0; ++i) u = u * letter(p.t_name(tg(rng)), std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1);
          GroupWord next = w * conjugate(r, u);
          if (next.length() > n) break;
          w = next;
        }
      } else {
        long half = std::max<long>(1, n / 4);
        GroupWord x = random_closed_word(rng, p, std::uniform_int_distribution<long>(1, half)(rng));
        GroupWord y = random_closed_word(rng, p, std::uniform_int_distribution<long>(1, half)(rng));
        w = commutator(x, y);
      }
      if (w.empty() || w.length() > n) continue;
      AreaCertificate c = wp.certify(w);
      if (!c.identity) continue;
      row.max_witnessed = std::max(row.max_witnessed, c.witnessed_absolute());
      row.max_cert_size = std::max(row.max_cert_size, c.membership_size());
    }
    if (auto ww = witness_word(family, p, n)) {
      AreaCertificate c = wp.certify(*ww);
      row.witness_length = ww->length();
      row.witness_cost = c.witnessed_absolute();
      row.witness_cert_size = c.membership_size();
    }
    if (family == "wf") row.band_lower = wf_band_lower(wp, n);
    prof.rows.push_back(std::move(row));
  }
  return prof;
}

namespace {

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) sx += x[i], sy += y[i], sxx += x[i] * x[i], sxy += x[i] * y[i];
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

double loglinear_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] > 0) xs.push_back(x[i]), ys.push_back(std::log(y[i]));
  return slope(xs, ys);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] > 0 && x[i] > 0) xs.push_back(std::log(x[i])), ys.push_back(std::log(y[i]));
  return slope(xs, ys);
}

}  // namespace metab
