#include "metab/collection.hpp"

#include <algorithm>

namespace metab {

CostLedger& CostLedger::operator+=(const CostLedger& o) {
  r1 += o.r1;
  r2_count += o.r2_count;
  r2_abs += o.r2_abs;
  r2_rel += o.r2_rel;
  module_relations += o.module_relations;
  power_relations += o.power_relations;
  free_steps += o.free_steps;
  return *this;
}

Int absolute_price(const Int& z, const Int& K) {
  if (z == 0) return 1;
  Int r;
  mpz_pow_ui(r.get_mpz_t(), K.get_mpz_t(), z.get_ui());
  return r;
}

Int relative_price(const Int& z) { return z <= 1 ? Int(1) : Int(4 * z - 3); }

namespace {

struct UnitLetter {
  int idx;
  int sign;
};

int t_index_checked(const std::string& name, const Presentation& p) {
  int i = p.t_index(name);
  if (i < 0) throw CollectionError("conjugator contains non-t letter '" + name + "'");
  return i;
}

std::vector<UnitLetter> units(const GroupWord& w, const Presentation& p) {
  std::vector<UnitLetter> r;
  for (const auto& l : w.letters) {
    int i = t_index_checked(l.name, p);
    int s = sgn(l.exp);
    for (Int c = abs(l.exp); c > 0; --c) r.push_back({i, s});
  }
  return r;
}

GroupWord from_units(const std::vector<UnitLetter>& u, std::size_t begin, std::size_t end, const Presentation& p) {
  std::vector<Letter> ls;
  for (std::size_t q = begin; q < end; ++q) ls.push_back({p.t_name(u[q].idx), u[q].sign});
  return GroupWord(std::move(ls));
}

Int reduce_mod(const Int& e, long d) {
  if (d <= 0) return e;
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(d));
  return r;
}

Int distance(const std::vector<Int>& x, const std::vector<Int>& y, const Presentation& p) {
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += abs(reduce_mod(x[i] - y[i], p.t_order(i)));
  return s;
}

const CommutatorEntry& table_entry(int i, int j, const Presentation& p) {
  auto it = p.commutator_table.find({i, j});
  if (it == p.commutator_table.end())
    throw CollectionError("no commutator table entry for (" + p.t_name(i) + ", " + p.t_name(j) + ")");
  return it->second;
}

void charge_commutation(CostLedger& ledger, const Int& mult, const Int& z, const Int& K) {
  ledger.r2_count += mult;
  ledger.r2_abs += mult * absolute_price(z, K);
  ledger.r2_rel += mult * relative_price(z);
}

}  // namespace

GroupWord conjugate_word(const Conjugate& c, const Presentation& p) {
  return conjugate(letter(p.module_gens[c.gen], c.coef), c.v);
}

GroupWord expanded_word(const Conjugate& c, const Presentation& p) {
  for (const auto& [key, e] : p.commutator_table)
    if (e.gen == c.gen) {
      GroupWord com = commutator(letter(p.t_name(key.first)), letter(p.t_name(key.second)));
      return conjugate(power(com, Int(c.coef * e.sign)), c.v);
    }
  return conjugate_word(c, p);
}

Monomial t_monomial(const GroupWord& v, const Presentation& p) {
  Monomial m(p.nt());
  for (const auto& l : v.letters) m.exps[t_index_checked(l.name, p)] += l.exp;
  for (std::size_t i = 0; i < p.nt(); ++i) m.exps[i] = reduce_mod(m.exps[i], p.t_order(i));
  return m;
}

GroupWord t_word(const Monomial& u, const Presentation& p) {
  std::vector<Letter> ls;
  for (std::size_t i = 0; i < p.nt(); ++i) ls.push_back({p.t_name(i), u.exps[i]});
  return GroupWord(std::move(ls));
}

SplitWord split_conjugates(const GroupWord& w, const Presentation& p) {
  SplitWord r;
  for (const auto& l : w.letters) {
    int g = p.module_index(l.name);
    if (g >= 0)
      r.conjugates.push_back({g, l.exp, inverse(r.tail)});
    else
      r.tail = r.tail * GroupWord({l});
  }
  return r;
}

std::vector<Conjugate> commutator_collect(const GroupWord& tail, const Presentation& p, CostLedger& ledger) {
  for (const auto& e : exponent_sums(tail, p))
    if (e != 0) throw CollectionError("word is not in the normal closure of the module generators");
  std::vector<UnitLetter> w = units(tail, p);
  std::vector<Conjugate> out;
  auto reduce = [&] {
    std::vector<UnitLetter> r;
    for (const auto& u : w) {
      if (!r.empty() && r.back().idx == u.idx && r.back().sign == -u.sign) {
        r.pop_back();
        ledger.free_steps += 1;
      } else {
        r.push_back(u);
      }
    }
    w = std::move(r);
  };
  for (int i = 0; i < static_cast<int>(p.nt()); ++i) {
    for (;;) {
      reduce();
      std::size_t pos = 0;
      while (pos < w.size() && w[pos].idx == i) ++pos;
      std::size_t q0 = pos;
      while (q0 < w.size() && w[q0].idx != i) ++q0;
      if (q0 == w.size()) break;
      for (std::size_t q = q0; q > pos; --q) {
        UnitLetter y = w[q - 1], x = w[q];
        int eps = x.sign, del = y.sign;
        const auto& e = table_entry(i, y.idx, p);
        std::vector<Letter> c;
        if (eps < 0) c.push_back({p.t_name(i), -1});
        if (del < 0) c.push_back({p.t_name(y.idx), -1});
        GroupWord pxy = from_units(w, 0, q - 1, p) * from_units(std::vector<UnitLetter>{x, y}, 0, 2, p);
        out.push_back({e.gen, Int(-e.sign * eps * del), GroupWord(c) * inverse(pxy)});
        ledger.r1 += 1;
        std::swap(w[q - 1], w[q]);
      }
    }
    std::size_t pos = 0;
    while (pos < w.size() && w[pos].idx == i) ++pos;
    if (long d = p.t_order(i); d > 0) ledger.power_relations += Int(static_cast<unsigned long>(pos)) / d;
    w.erase(w.begin(), w.begin() + static_cast<long>(pos));
  }
  return out;
}

PushResult push_letter(const std::vector<Int>& prefix, int s, int sigma, const Presentation& p, CostLedger& ledger) {
  if (s < 0 || s >= static_cast<int>(p.nt()) || prefix.size() != p.nt())
    throw CollectionError("push_letter index out of range");
  PushResult r{prefix, {}};
  GroupWord right;  // blocks to the right of the current one
  std::vector<std::vector<Conjugate>> per_block;
  for (int k = static_cast<int>(p.nt()) - 1; k > s; --k) {
    const Int& m = prefix[k];
    if (m == 0) continue;
    const auto& e = table_entry(s, k, p);
    std::vector<Conjugate> block;
    GroupWord base = sigma < 0 ? letter(p.t_name(s), -1) : GroupWord();
    Int len = abs(m);
    for (Int l = len - 1; l >= 0; --l) {
      if (sgn(m) > 0)
        block.push_back({e.gen, Int(-e.sign * sigma), base * letter(p.t_name(k), l) * right});
      else
        block.push_back({e.gen, Int(e.sign * sigma), base * letter(p.t_name(k), Int(-1 - l)) * right});
    }
    per_block.push_back(std::move(block));
    right = letter(p.t_name(k), m) * right;
  }
  for (auto it = per_block.rbegin(); it != per_block.rend(); ++it)
    for (auto& c : *it) r.emissions.push_back(std::move(c));
  ledger.r1 += 2 * static_cast<long>(r.emissions.size());
  r.ordered[s] += sigma;
  if (long d = p.t_order(s); d > 0 && (r.ordered[s] == d || r.ordered[s] < 0)) {
    r.ordered[s] = reduce_mod(r.ordered[s], d);
    ledger.power_relations += 1;
  }
  return r;
}

NormalizedConjugate conjugate_normalize(const Conjugate& c, const Presentation& p, const Int& K, CostLedger& ledger) {
  std::vector<Int> prefix(p.nt(), 0);
  Int mult = abs(c.coef);
  for (const auto& u : units(c.v, p)) {
    PushResult res = push_letter(prefix, u.idx, u.sign, p, ledger);
    for (const auto& e : res.emissions)
      charge_commutation(ledger, mult * abs(e.coef), distance(t_monomial(e.v, p).exps, res.ordered, p), K);
    prefix = std::move(res.ordered);
  }
  return {c.gen, c.coef, Monomial(prefix, c.gen)};
}

std::pair<OrderedForm, CostLedger> ordered_form(const GroupWord& w, const Presentation& p, const Int& K) {
  for (const auto& e : exponent_sums(w, p))
    if (e != 0) throw CollectionError("word is not in the normal closure of the module generators");
  CostLedger ledger;
  SplitWord sw = split_conjugates(w, p);
  std::vector<Conjugate> all = std::move(sw.conjugates);
  for (auto& e : commutator_collect(sw.tail, p, ledger)) all.push_back(std::move(e));
  std::vector<NormalizedConjugate> items;
  items.reserve(all.size());
  for (const auto& c : all) items.push_back(conjugate_normalize(c, p, K, ledger));

  std::vector<NormalizedConjugate> gathered;
  for (auto& x : items) {
    auto same = [&](const NormalizedConjugate& y) { return y.gen == x.gen && y.mono == x.mono; };
    auto it = std::find_if(gathered.rbegin(), gathered.rend(), same);
    if (it == gathered.rend()) {
      gathered.push_back(std::move(x));
      continue;
    }
    std::size_t j = gathered.size() - 1 - static_cast<std::size_t>(it - gathered.rbegin());
    for (std::size_t k = j + 1; k < gathered.size(); ++k)
      charge_commutation(ledger, abs(x.coef) * abs(gathered[k].coef),
                         distance(x.mono.exps, gathered[k].mono.exps, p), K);
    gathered[j].coef += x.coef;
    if (gathered[j].coef == 0) {
      gathered.erase(gathered.begin() + static_cast<std::ptrdiff_t>(j));
      ++ledger.free_steps;
    }
  }
  items = std::move(gathered);

  auto precedes = [](const NormalizedConjugate& x, const NormalizedConjugate& y) {
    if (x.gen != y.gen) return x.gen < y.gen;
    return compare_monomials(x.mono, y.mono) > 0;
  };
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j)
      if (precedes(items[j], items[i]))
        charge_commutation(ledger, abs(items[i].coef) * abs(items[j].coef),
                           distance(items[i].mono.exps, items[j].mono.exps, p), K);

  std::vector<Term> terms;
  for (auto& it : items) terms.push_back({it.coef, std::move(it.mono)});
  std::size_t before = terms.size();
  OrderedForm of{ModuleElement::from_terms(p.nt(), std::max<std::size_t>(p.m(), 1), std::move(terms)), w.length()};
  ledger.free_steps += before - of.vector.support_size();
  return {std::move(of), ledger};
}

GroupWord ordered_word(const ModuleElement& g, const Presentation& p) {
  GroupWord r;
  for (std::size_t b = 0; b < p.m(); ++b)
    for (const auto& t : g.terms())
      if (t.mono.basis == static_cast<int>(b))
        r = r * conjugate(letter(p.module_gens[b], t.coef), t_word(t.mono, p));
  return r;
}

std::vector<ModuleElement> structural_relations(const Presentation& p) {
  std::vector<ModuleElement> r;
  auto keep = [&](const ModuleElement& v) {
    if (!v.is_zero() && std::find(r.begin(), r.end(), v) == r.end()) r.push_back(v);
  };
  std::size_t nb = std::max<std::size_t>(p.m(), 1);
  for (const auto& [key, e] : p.commutator_table) {
    GroupWord com = commutator(letter(p.t_name(key.first)), letter(p.t_name(key.second)));
    for (std::size_t k = 0; k < p.nt(); ++k) {
      if (static_cast<int>(k) == key.first || static_cast<int>(k) == key.second) continue;
      Monomial tk(p.nt(), e.gen);
      tk.exps[k] = 1;
      keep(ordered_form(conjugate(com, letter(p.t_name(k))), p).first.vector -
           ModuleElement::monomial(p.nt(), nb, e.sign, tk));
    }
  }
  for (std::size_t j = 0; j < p.nt(); ++j) {
    long d = p.t_order(j);
    if (d == 0) continue;
    for (std::size_t i = 0; i < p.nt(); ++i) {
      if (i == j) continue;
      GroupWord x = letter(p.t_name(i)), ud = letter(p.t_name(j), d);
      keep(ordered_form(commutator(x, ud), p).first.vector);
      keep(ordered_form(commutator(ud, x), p).first.vector);
    }
  }
  return r;
}

std::vector<ModuleElement> relator_module(const Presentation& p) {
  std::vector<ModuleElement> r;
  for (const auto& w : p.relators) r.push_back(ordered_form(w, p).first.vector);
  for (auto& v : structural_relations(p)) r.push_back(std::move(v));
  return r;
}

CostLedger relative_commutation(const Int& u_length) {
  CostLedger l;
  l.r2_count = 1;
  l.r2_rel = 1;
  for (Int n = 2; n <= u_length; ++n) {
    l.r2_count += 4;
    l.r2_rel += 4;
  }
  return l;
}

CostBounds cost_bounds(const Int& n, const Int& c, const Int& K, const Int& Q, const Int& P, const Int& m,
                       const Int& k, const Int& deg_t) {
  CostBounds b;
  Bound Kb(K), mP(m * P);
  b.abelian = Bound(Int(n * n));
  b.conjugate = Kb.pow(n);
  b.organizer = Bound(Int(2 * K)).pow(n);
  b.module_a = Bound(Int(m * m * P * P)) * Kb.pow(Int(2 * Q));
  b.module_b = Bound(Int(c == 0 ? Int(0) : Int(abs(c) - 1))) * b.module_a;
  b.module_c = mP * Bound(Int(2 * K)).pow(Int(k * (Q + deg_t)));
  return b;
}

}  // namespace metab
