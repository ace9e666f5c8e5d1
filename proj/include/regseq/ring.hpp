#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regseq/errors.hpp"
#include "regseq/field.hpp"
#include "regseq/monomial.hpp"
#include "regseq/order.hpp"
#include "regseq/polynomial.hpp"

namespace regseq {

// The ambient polynomial ring k[x_1..x_n] with a term order and a degree
// safety cap. Immutable; all polynomial arithmetic goes through it so that
// Polynomial invariants (sorted, no zeros) hold everywhere.
template <class F>
class PolyRing {
 public:
  using Elem = typename F::Elem;
  using Poly = Polynomial<F>;

  PolyRing(std::vector<std::string> vars, F field,
           TermOrder order = TermOrder::grevlex(), unsigned degree_cap = 60)
      : vars_(std::move(vars)),
        field_(std::move(field)),
        order_(std::move(order)),
        degree_cap_(degree_cap) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j])
          throw PrecondError("duplicate ring variable '" + vars_[i] + "'");
  }

  unsigned arity() const { return static_cast<unsigned>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const F& field() const { return field_; }
  const TermOrder& order() const { return order_; }
  unsigned degree_cap() const { return degree_cap_; }

  std::optional<unsigned> var_index(const std::string& name) const {
    for (unsigned i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  PolyRing with_order(TermOrder o) const {
    return PolyRing(vars_, field_, std::move(o), degree_cap_);
  }
  PolyRing with_degree_cap(unsigned cap) const {
    return PolyRing(vars_, field_, order_, cap);
  }
  // Appends one fresh variable (used by saturation / flat extension).
  PolyRing extended(const std::string& name, TermOrder o) const {
    auto vs = vars_;
    vs.push_back(name);
    return PolyRing(std::move(vs), field_, std::move(o), degree_cap_);
  }
  std::string fresh_var_name(const std::string& base = "t") const {
    if (!var_index(base)) return base;
    for (unsigned k = 0;; ++k) {
      std::string cand = base + std::to_string(k);
      if (!var_index(cand)) return cand;
    }
  }

  bool operator==(const PolyRing& o) const {
    return vars_ == o.vars_ && field_ == o.field_ && order_ == o.order_;
  }
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

  // ---- construction -------------------------------------------------------

  Poly zero() const { return Poly(); }
  Poly constant(Elem c) const {
    if (field_.is_zero(c)) return Poly();
    return Poly::from_sorted({Term<F>{Monomial(arity()), std::move(c)}});
  }
  Poly one() const { return constant(field_.one()); }
  Poly variable(unsigned i) const {
    if (i >= arity()) throw ArityError("variable index out of range");
    Monomial m(arity());
    m[i] = 1;
    return Poly::from_sorted({Term<F>{std::move(m), field_.one()}});
  }
  Poly term(Monomial m, Elem c) const {
    if (m.arity() != arity()) throw ArityError("monomial arity mismatch");
    if (field_.is_zero(c)) return Poly();
    return Poly::from_sorted({Term<F>{std::move(m), std::move(c)}});
  }

  // Canonicalizes an arbitrary term list: sorts descending, merges duplicate
  // monomials, drops zeros.
  Poly from_terms(std::vector<Term<F>> ts) const {
    std::sort(ts.begin(), ts.end(), [&](const Term<F>& a, const Term<F>& b) {
      return order_.compare(a.mono, b.mono) > 0;
    });
    std::vector<Term<F>> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = field_.add(out.back().coeff, t.coeff);
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out,
                  [&](const Term<F>& t) { return field_.is_zero(t.coeff); });
    return Poly::from_sorted(std::move(out));
  }

  // ---- arithmetic ---------------------------------------------------------

  int compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b);
  }

  Poly add(const Poly& a, const Poly& b) const {
    std::vector<Term<F>> out;
    out.reserve(a.size() + b.size());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea && ib != eb) {
      int c = order_.compare(ia->mono, ib->mono);
      if (c > 0) {
        out.push_back(*ia++);
      } else if (c < 0) {
        out.push_back(*ib++);
      } else {
        Elem s = field_.add(ia->coeff, ib->coeff);
        if (!field_.is_zero(s)) out.push_back(Term<F>{ia->mono, std::move(s)});
        ++ia;
        ++ib;
      }
    }
    out.insert(out.end(), ia, ea);
    out.insert(out.end(), ib, eb);
    return Poly::from_sorted(std::move(out));
  }

  Poly neg(const Poly& a) const {
    std::vector<Term<F>> out = a.terms();
    for (auto& t : out) t.coeff = field_.neg(t.coeff);
    return Poly::from_sorted(std::move(out));
  }

  Poly sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

  Poly scale(const Poly& a, const Elem& c) const {
    if (field_.is_zero(c)) return Poly();
    std::vector<Term<F>> out = a.terms();
    for (auto& t : out) t.coeff = field_.mul(t.coeff, c);
    return Poly::from_sorted(std::move(out));
  }

  // a * (m, c): multiplying by a fixed monomial preserves the term order.
  Poly mul_term(const Poly& a, const Monomial& m, const Elem& c) const {
    if (field_.is_zero(c)) return Poly();
    std::vector<Term<F>> out;
    out.reserve(a.size());
    for (const auto& t : a.terms())
      out.push_back(Term<F>{mono_mul(t.mono, m), field_.mul(t.coeff, c)});
    return Poly::from_sorted(std::move(out));
  }

  Poly mul(const Poly& a, const Poly& b) const {
    auto desc = [this](const Monomial& x, const Monomial& y) {
      return order_.compare(x, y) > 0;
    };
    std::map<Monomial, Elem, decltype(desc)> acc(desc);
    for (const auto& ta : a.terms())
      for (const auto& tb : b.terms()) {
        Monomial m = mono_mul(ta.mono, tb.mono);
        Elem c = field_.mul(ta.coeff, tb.coeff);
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(std::move(m), std::move(c));
        else
          it->second = field_.add(it->second, c);
      }
    std::vector<Term<F>> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!field_.is_zero(c)) out.push_back(Term<F>{m, c});
    return Poly::from_sorted(std::move(out));
  }

  Poly pow(const Poly& a, unsigned k) const {
    Poly r = one();
    for (unsigned i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  Poly monic(const Poly& a) const {
    if (a.is_zero()) return a;
    return scale(a, field_.inv(a.lead_coeff()));
  }

  bool is_homogeneous(const Poly& a) const {
    if (a.is_zero()) return true;
    unsigned d = a.terms().front().mono.deg();
    for (const auto& t : a.terms())
      if (t.mono.deg() != d) return false;
    return true;
  }

  // ---- text io ------------------------------------------------------------

  // Syntax: `3*x^2*y - 1/2*z + 5`. `*` is explicit, `^` is the exponent,
  // parentheses and rational constants are accepted; any term order on input.
  Poly parse(const std::string& text) const {
    Lexer lx(text);
    Poly p = parse_expr(lx);
    if (lx.peek().kind != TokKind::end)
      throw ParseError(1, lx.peek().col, "unexpected '" + lx.peek().text + "'");
    return p;
  }

  std::string to_string(const Poly& p) const {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
      std::string cs = field_.str(t.coeff);
      bool negative = !cs.empty() && cs[0] == '-';
      std::string mag = negative ? cs.substr(1) : cs;
      if (first) {
        if (negative) out += "-";
        first = false;
      } else {
        out += negative ? " - " : " + ";
      }
      if (t.mono.is_one()) {
        out += mag;
      } else {
        if (mag != "1") {
          out += mag;
          out += "*";
        }
        out += mono_string(t.mono);
      }
    }
    return out;
  }

  std::string mono_string(const Monomial& m) const {
    std::string out;
    for (unsigned i = 0; i < arity(); ++i) {
      if (m[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += vars_[i];
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  enum class TokKind { number, ident, plus, minus, star, caret, slash,
                       lparen, rparen, end };
  struct Tok {
    TokKind kind;
    std::string text;
    int col;
  };
  class Lexer {
   public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Tok& peek() const { return tok_; }
    Tok take() {
      Tok t = tok_;
      advance();
      return t;
    }

   private:
    void advance() {
      while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      int col = static_cast<int>(pos_) + 1;
      if (pos_ >= s_.size()) {
        tok_ = {TokKind::end, "", col};
        return;
      }
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
          ++pos_;
        tok_ = {TokKind::number, s_.substr(b, pos_ - b), col};
        return;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t b = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
          ++pos_;
        tok_ = {TokKind::ident, s_.substr(b, pos_ - b), col};
        return;
      }
      ++pos_;
      switch (c) {
        case '+': tok_ = {TokKind::plus, "+", col}; return;
        case '-': tok_ = {TokKind::minus, "-", col}; return;
        case '*': tok_ = {TokKind::star, "*", col}; return;
        case '^': tok_ = {TokKind::caret, "^", col}; return;
        case '/': tok_ = {TokKind::slash, "/", col}; return;
        case '(': tok_ = {TokKind::lparen, "(", col}; return;
        case ')': tok_ = {TokKind::rparen, ")", col}; return;
        default:
          throw ParseError(1, col, std::string("unexpected character '") + c + "'");
      }
    }
    const std::string& s_;
    std::size_t pos_ = 0;
    Tok tok_{TokKind::end, "", 1};
  };

  Poly parse_expr(Lexer& lx) const {
    bool neg_head = false;
    if (lx.peek().kind == TokKind::minus) {
      lx.take();
      neg_head = true;
    } else if (lx.peek().kind == TokKind::plus) {
      lx.take();
    }
    Poly acc = parse_term(lx);
    if (neg_head) acc = neg(acc);
    while (lx.peek().kind == TokKind::plus || lx.peek().kind == TokKind::minus) {
      bool minus = lx.take().kind == TokKind::minus;
      Poly t = parse_term(lx);
      acc = minus ? sub(acc, t) : add(acc, t);
    }
    return acc;
  }

  Poly parse_term(Lexer& lx) const {
    Poly acc = parse_factor(lx);
    while (lx.peek().kind == TokKind::star) {
      lx.take();
      acc = mul(acc, parse_factor(lx));
    }
    return acc;
  }

  Poly parse_factor(Lexer& lx) const {
    Poly base = parse_primary(lx);
    if (lx.peek().kind == TokKind::caret) {
      int col = lx.take().col;
      if (lx.peek().kind != TokKind::number)
        throw ParseError(1, col, "exponent must be a natural number");
      Tok e = lx.take();
      if (e.text.size() > 4)
        throw ParseError(1, e.col, "exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  Poly parse_primary(Lexer& lx) const {
    const Tok& t = lx.peek();
    switch (t.kind) {
      case TokKind::number: {
        Tok num = lx.take();
        Elem c = field_.from_digits(num.text);
        if (lx.peek().kind == TokKind::slash) {
          int col = lx.take().col;
          if (lx.peek().kind != TokKind::number)
            throw ParseError(1, col, "expected denominator after '/'");
          Tok den = lx.take();
          Elem d = field_.from_digits(den.text);
          if (field_.is_zero(d))
            throw ParseError(1, den.col, "zero denominator");
          c = field_.div(c, d);
        }
        return constant(std::move(c));
      }
      case TokKind::ident: {
        Tok id = lx.take();
        auto idx = var_index(id.text);
        if (!idx)
          throw ParseError(1, id.col, "unknown variable " + id.text);
        return variable(*idx);
      }
      case TokKind::lparen: {
        lx.take();
        Poly inner = parse_expr(lx);
        if (lx.peek().kind != TokKind::rparen)
          throw ParseError(1, lx.peek().col, "expected ')'");
        lx.take();
        return inner;
      }
      case TokKind::minus: {
        // allow e.g. (-x + y) and 2*-3 is rejected naturally by grammar
        Tok m = lx.take();
        Poly inner = parse_primary(lx);
        return neg(inner);
      }
      default:
        throw ParseError(1, t.col, "expected a term");
    }
  }

  std::vector<std::string> vars_;
  F field_;
  TermOrder order_;
  unsigned degree_cap_;
};

// Exponent-vector transport between rings that share a variable prefix.
template <class F>
Polynomial<F> pad_poly(const PolyRing<F>& to, const Polynomial<F>& p) {
  std::vector<Term<F>> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<unsigned> e = t.mono.exponents();
    if (e.size() > to.arity()) throw ArityError("pad_poly shrinks arity");
    e.resize(to.arity(), 0u);
    ts.push_back(Term<F>{Monomial(std::move(e)), t.coeff});
  }
  return to.from_terms(std::move(ts));
}

// Drops trailing variables; every term must be free of them.
template <class F>
Polynomial<F> restrict_poly(const PolyRing<F>& to, const Polynomial<F>& p) {
  std::vector<Term<F>> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<unsigned> e = t.mono.exponents();
    for (std::size_t i = to.arity(); i < e.size(); ++i)
      if (e[i] != 0)
        throw PrecondError("restrict_poly: term involves a dropped variable");
    e.resize(to.arity());
    ts.push_back(Term<F>{Monomial(std::move(e)), t.coeff});
  }
  return to.from_terms(std::move(ts));
}

}  // namespace regseq
