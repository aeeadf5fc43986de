#include "metab/presentation.hpp"

#include <cctype>
#include <set>

#include <json.hpp>

namespace metab {

GroupWord::GroupWord(std::vector<Letter> ls) {
  for (auto& l : ls) {
    if (l.exp == 0) continue;
    if (!letters.empty() && letters.back().name == l.name) {
      letters.back().exp += l.exp;
      if (letters.back().exp == 0) letters.pop_back();
    } else {
      letters.push_back(std::move(l));
    }
  }
}

Int GroupWord::length() const {
  Int s = 0;
  for (const auto& l : letters) s += abs(l.exp);
  return s;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  std::vector<Letter> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return GroupWord(std::move(ls));
}

GroupWord inverse(const GroupWord& w) {
  std::vector<Letter> ls(w.letters.rbegin(), w.letters.rend());
  for (auto& l : ls) l.exp = -l.exp;
  return GroupWord(std::move(ls));
}

GroupWord power(const GroupWord& w, const Int& n) {
  if (w.letters.size() == 1) return GroupWord({{w.letters[0].name, w.letters[0].exp * n}});
  GroupWord base = sgn(n) < 0 ? inverse(w) : w, r;
  Int c = abs(n);
  if (c > 1000000) throw std::invalid_argument("word power too large");
  for (long i = 0; i < c.get_si(); ++i) r = r * base;
  return r;
}

GroupWord conjugate(const GroupWord& x, const GroupWord& y) { return inverse(y) * x * y; }

GroupWord commutator(const GroupWord& x, const GroupWord& y) { return inverse(x) * inverse(y) * x * y; }

GroupWord letter(const std::string& name, const Int& exp) { return GroupWord({{name, exp}}); }

std::string Presentation::t_name(std::size_t i) const {
  return i < free_gens.size() ? free_gens[i] : torsion_gens[i - free_gens.size()].first;
}

long Presentation::t_order(std::size_t i) const {
  return i < free_gens.size() ? 0 : torsion_gens[i - free_gens.size()].second;
}

int Presentation::t_index(const std::string& name) const {
  for (std::size_t i = 0; i < nt(); ++i)
    if (t_name(i) == name) return static_cast<int>(i);
  return -1;
}

int Presentation::module_index(const std::string& name) const {
  for (std::size_t i = 0; i < module_gens.size(); ++i)
    if (module_gens[i] == name) return static_cast<int>(i);
  return -1;
}

RingSpec Presentation::ring() const {
  RingSpec r;
  for (std::size_t i = 0; i < nt(); ++i) {
    r.vars.push_back(t_name(i));
    r.orders.push_back(t_order(i));
  }
  return r;
}

namespace {

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class WordParser {
 public:
  WordParser(const std::string& s, const Presentation& p) : s_(s), p_(p) {}

  GroupWord run() {
    skip();
    if (pos_ == s_.size()) return {};
    GroupWord w = word();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  GroupWord word() {
    GroupWord w = factor();
    while (eat('*')) w = w * factor();
    return w;
  }

  std::string name() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
    if (start == pos_) fail("expected generator name");
    std::string n = s_.substr(start, pos_ - start);
    if (p_.t_index(n) < 0 && p_.module_index(n) < 0) {
      pos_ = start;
      fail("unknown generator '" + n + "'");
    }
    return n;
  }

  GroupWord factor() {
    GroupWord a = atom();
    if (!eat('^')) return a;
    skip();
    bool neg = eat('-');
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Int n(s_.substr(start, pos_ - start));
      a = power(a, neg ? Int(-n) : n);
    } else {
      if (neg) a = inverse(a);
      if (eat('(')) {
        GroupWord y = word();
        expect(')');
        a = conjugate(a, y);
      } else {
        a = conjugate(a, letter(name()));
      }
    }
    if (peek('^')) fail("nested exponent needs parentheses");
    return a;
  }

  GroupWord atom() {
    skip();
    if (eat('[')) {
      GroupWord x = word();
      expect(',');
      GroupWord y = word();
      expect(']');
      return commutator(x, y);
    }
    if (eat('(')) {
      GroupWord x = word();
      expect(')');
      return x;
    }
    if (pos_ < s_.size() && s_[pos_] == '1' && (pos_ + 1 == s_.size() || !name_char(s_[pos_ + 1]))) {
      ++pos_;
      return {};
    }
    return letter(name());
  }

  const std::string& s_;
  const Presentation& p_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupWord parse_word(const std::string& text, const Presentation& p) { return WordParser(text, p).run(); }

std::string print_word(const GroupWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w.letters) {
    if (!s.empty()) s += "*";
    s += l.name;
    if (l.exp != 1) s += "^" + l.exp.get_str();
  }
  return s;
}

std::vector<Int> exponent_sums(const GroupWord& w, const Presentation& p) {
  std::vector<Int> r(p.nt(), 0);
  for (const auto& l : w.letters) {
    int i = p.t_index(l.name);
    if (i >= 0) r[i] += l.exp;
  }
  for (std::size_t i = 0; i < p.nt(); ++i)
    if (long d = p.t_order(i); d > 0) {
      Int x;
      mpz_fdiv_r_ui(x.get_mpz_t(), r[i].get_mpz_t(), static_cast<unsigned long>(d));
      r[i] = x;
    }
  return r;
}

void validate_presentation(const Presentation& p) {
  std::set<std::string> names;
  auto add = [&](const std::string& n) {
    if (n.empty() || !std::all_of(n.begin(), n.end(), name_char)) throw PresentationError("invalid generator name '" + n + "'");
    if (!names.insert(n).second) throw PresentationError("duplicate generator name '" + n + "'");
  };
  for (const auto& n : p.module_gens) add(n);
  for (const auto& n : p.free_gens) add(n);
  for (const auto& [n, d] : p.torsion_gens) {
    add(n);
    if (d < 2) throw PresentationError("torsion generator '" + n + "' needs order at least 2");
  }
  for (const auto& [key, e] : p.commutator_table)
    if (key.first >= key.second || key.second >= static_cast<int>(p.nt()) || e.gen < 0 ||
        e.gen >= static_cast<int>(p.m()))
      throw PresentationError("malformed commutator table entry");
  if (p.nt() >= 2)
    for (std::size_t i = 0; i < p.nt(); ++i)
      for (std::size_t j = i + 1; j < p.nt(); ++j)
        if (!p.commutator_table.count({static_cast<int>(i), static_cast<int>(j)}))
          throw PresentationError("commutator table has no entry for (" + p.t_name(i) + ", " + p.t_name(j) + ")");
  for (const auto& r : p.relators) {
    for (const auto& l : r.letters)
      if (!names.count(l.name)) throw PresentationError("relator uses unknown generator '" + l.name + "'");
    for (const auto& e : exponent_sums(r, p))
      if (e != 0) throw PresentationError("relator " + print_word(r) + " has nonzero exponent sum");
  }
}

Presentation parse_presentation(const std::string& json_text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed presentation JSON: ") + e.what(), e.byte);
  }
  Presentation p;
  try {
    p.module_gens = j.value("module_generators", std::vector<std::string>{});
    p.free_gens = j.value("free_generators", std::vector<std::string>{});
    for (const auto& t : j.value("torsion_generators", json::array()))
      p.torsion_gens.push_back({t.at("name").get<std::string>(), t.at("order").get<long>()});
    for (const auto& c : j.value("commutator_table", json::array())) {
      auto pair = c.at("pair").get<std::vector<std::string>>();
      if (pair.size() != 2) throw PresentationError("commutator table pair needs two names");
      int i = p.t_index(pair[0]), k = p.t_index(pair[1]), g = p.module_index(c.at("equals").get<std::string>());
      if (i < 0 || k < 0 || i == k || g < 0) throw PresentationError("commutator table entry names unknown generators");
      if (i < k)
        p.commutator_table[{i, k}] = {g, 1};
      else
        p.commutator_table[{k, i}] = {g, -1};
    }
    validate_presentation(p);
    for (const auto& r : j.value("relators", std::vector<std::string>{})) p.relators.push_back(parse_word(r, p));
    if (j.contains("lambda")) {
      TamenessDatum t;
      RingSpec ring = p.ring();
      for (const auto& s : j["lambda"].value("centralizer", std::vector<std::string>{}))
        t.centralizer.push_back(parse_ring(s, ring));
      for (const auto& s : j["lambda"].value("co_centralizer", std::vector<std::string>{}))
        t.co_centralizer.push_back(parse_ring(s, ring));
      p.tameness = t;
    }
  } catch (const json::exception& e) {
    throw PresentationError(std::string("malformed presentation: ") + e.what());
  }
  validate_presentation(p);
  return p;
}

std::string presentation_to_json(const Presentation& p) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["module_generators"] = p.module_gens;
  j["free_generators"] = p.free_gens;
  j["torsion_generators"] = ordered_json::array();
  for (const auto& [n, d] : p.torsion_gens) j["torsion_generators"].push_back({{"name", n}, {"order", d}});
  j["commutator_table"] = ordered_json::array();
  for (const auto& [key, e] : p.commutator_table) {
    std::vector<std::string> pair{p.t_name(key.first), p.t_name(key.second)};
    if (e.sign < 0) std::swap(pair[0], pair[1]);
    j["commutator_table"].push_back({{"pair", pair}, {"equals", p.module_gens[e.gen]}});
  }
  j["relators"] = ordered_json::array();
  for (const auto& r : p.relators) j["relators"].push_back(print_word(r));
  if (p.tameness) {
    RingSpec ring = p.ring();
    ordered_json l;
    l["centralizer"] = ordered_json::array();
    l["co_centralizer"] = ordered_json::array();
    for (const auto& x : p.tameness->centralizer) l["centralizer"].push_back(render_ring(x, ring));
    for (const auto& x : p.tameness->co_centralizer) l["co_centralizer"].push_back(render_ring(x, ring));
    j["lambda"] = l;
  }
  return j.dump(2);
}

}  // namespace metab
