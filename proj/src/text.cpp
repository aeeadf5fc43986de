#include "metab/text.hpp"

#include <cctype>
#include <sstream>

namespace metab {

std::size_t RingSpec::nfree() const {
  std::size_t n = 0;
  for (long o : orders) n += o == 0;
  return n;
}

Monomial RingSpec::normalize(Monomial m) const {
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] > 0) {
      Int r;
      mpz_fdiv_r_ui(r.get_mpz_t(), m.exps[i].get_mpz_t(), static_cast<unsigned long>(orders[i]));
      m.exps[i] = r;
    }
  return m;
}

ModuleElement RingSpec::normalize(const ModuleElement& g) const {
  bool any = false;
  for (long o : orders) any |= o > 0;
  if (!any) return g;
  return g.map_monomials(g.nvars(), [&](const Monomial& m) { return normalize(m); });
}

int RingSpec::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

std::string render_monomial(const Monomial& m, const RingSpec& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.vars[i];
    if (m.exps[i] != 1) s += "^" + m.exps[i].get_str();
  }
  return s;
}

// coefficient and monomial without the sign
std::string render_unsigned_term(const Int& c, const Monomial& m, const RingSpec& ring) {
  Int a = abs(c);
  std::string mono = render_monomial(m, ring);
  if (mono.empty()) return a.get_str();
  if (a == 1) return mono;
  return a.get_str() + "*" + mono;
}

}  // namespace

std::string render_ring(const ModuleElement& lambda, const RingSpec& ring) {
  if (lambda.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : lambda.terms()) {
    if (first)
      s += sgn(t.coef) < 0 ? "-" : "";
    else
      s += sgn(t.coef) < 0 ? " - " : " + ";
    s += render_unsigned_term(t.coef, t.mono, ring);
    first = false;
  }
  return s;
}

std::string render_element(const ModuleElement& g, const RingSpec& ring,
                           const std::vector<std::string>& basis_names) {
  if (g.is_zero()) return "0";
  std::string s;
  for (std::size_t b = 0; b < g.nbasis(); ++b) {
    ModuleElement c = g.component(static_cast<int>(b));
    if (c.is_zero()) continue;
    bool neg = false;
    std::string body;
    if (c.support_size() == 1) {
      const auto& t = c.terms().front();
      neg = sgn(t.coef) < 0;
      std::string mono = render_monomial(t.mono, ring);
      Int a = abs(t.coef);
      if (a != 1) body = a.get_str() + "*";
      if (!mono.empty()) body += mono + "*";
      body += basis_names[b];
    } else {
      body = "(" + render_ring(c, ring) + ")*" + basis_names[b];
    }
    if (s.empty())
      s = (neg ? "-" : "") + body;
    else
      s += (neg ? " - " : " + ") + body;
  }
  return s;
}

namespace {

struct Value {
  bool module = false;
  ModuleElement v;
};

class ElementParser {
 public:
  ElementParser(const std::string& text, const RingSpec& ring, const std::vector<std::string>* basis)
      : s_(text), ring_(ring), basis_(basis), nb_(basis ? basis->size() : 1) {}

  ModuleElement run() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    if (basis_ && !v.module && !v.v.is_zero()) fail("expression has no module generator");
    if (!v.module && basis_) return ModuleElement(ring_.nvars(), nb_);
    return ring_.normalize(v.v);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value ring_const(const Int& c) { return {false, ModuleElement::constant(ring_.nvars(), c)}; }

  Value combine_add(Value a, Value b, bool minus) {
    if (b.module && !a.module && a.v.is_zero()) a = {true, ModuleElement(ring_.nvars(), nb_)};
    if (a.module && !b.module && b.v.is_zero()) b = {true, ModuleElement(ring_.nvars(), nb_)};
    if (a.module != b.module) fail("cannot add a ring element to a module element");
    return {a.module, minus ? a.v - b.v : a.v + b.v};
  }

  Value mul(const Value& a, const Value& b) {
    if (a.module && b.module) fail("product of two module elements");
    if (a.module) return {true, a.v.times(b.v)};
    if (b.module) return {true, b.v.times(a.v)};
    return {false, a.v.times(b.v)};
  }

  Value expr() {
    skip();
    Value acc = ring_const(0);
    bool minus = false;
    if (eat('-'))
      minus = true;
    else
      eat('+');
    acc = combine_add(acc, term(), minus);
    for (;;) {
      if (eat('+'))
        acc = combine_add(acc, term(), false);
      else if (eat('-'))
        acc = combine_add(acc, term(), true);
      else
        return acc;
    }
  }

  Value term() {
    Value v = power();
    while (eat('*')) v = mul(v, power());
    return v;
  }

  Int integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    Int r(s_.substr(start, pos_ - start));
    return neg ? Int(-r) : r;
  }

  Value power() {
    Value base = primary();
    if (!eat('^')) return base;
    Int e = integer();
    if (base.module) fail("cannot raise a module element to a power");
    const auto& ts = base.v.terms();
    if (ts.size() == 1 && (ts[0].coef == 1 || ts[0].coef == -1)) {
      Monomial m = ts[0].mono;
      for (auto& x : m.exps) x *= e;
      Int c = ts[0].coef;
      if (c == -1 && mpz_even_p(e.get_mpz_t())) c = 1;
      return {false, ModuleElement::monomial(ring_.nvars(), 1, c, m)};
    }
    if (sgn(e) < 0) fail("negative power of a non-monomial");
    if (e > 100000) fail("exponent too large");
    Value r = ring_const(1);
    for (long i = 0; i < e.get_si(); ++i) r.v = r.v.times(base.v);
    return r;
  }

  Value primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ring_const(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int vi = ring_.index_of(name);
      if (vi >= 0) {
        Monomial m(ring_.nvars(), 0);
        m.exps[vi] = 1;
        return {false, ModuleElement::monomial(ring_.nvars(), 1, 1, m)};
      }
      if (basis_)
        for (std::size_t b = 0; b < basis_->size(); ++b)
          if ((*basis_)[b] == name)
            return {true, ModuleElement::monomial(ring_.nvars(), nb_, 1, Monomial(ring_.nvars(), static_cast<int>(b)))};
      pos_ = start;
      fail("unknown name '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  const RingSpec& ring_;
  const std::vector<std::string>* basis_;
  std::size_t nb_;
  std::size_t pos_ = 0;
};

}  // namespace

ModuleElement parse_ring(const std::string& text, const RingSpec& ring) {
  return ElementParser(text, ring, nullptr).run();
}

ModuleElement parse_element(const std::string& text, const RingSpec& ring,
                            const std::vector<std::string>& basis_names) {
  return ElementParser(text, ring, &basis_names).run();
}

}  // namespace metab
