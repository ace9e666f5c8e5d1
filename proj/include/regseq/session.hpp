#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regseq/errors.hpp"

namespace regseq::session {

// A polynomial (or integer) expression captured verbatim, with the source
// position of its first character so later parse errors can point home.
struct RawExpr {
  std::string text;
  int line = 1;
  int col = 1;
};

struct FieldSpec {
  bool rationals = false;
  unsigned long modulus = 0;  // when !rationals
};

struct ModuleDef {
  bool graded = false;
  bool is_free = false;
  unsigned free_rank = 0;
  // Cokernel presentation: rows index ambient components, columns index
  // relation generators.
  std::vector<std::vector<RawExpr>> matrix;
  std::optional<std::vector<long>> shifts;
};

struct ListDef {
  std::vector<RawExpr> entries;
};

enum class DefKind { module, sequence, ideal, prime };

inline const char* kind_name(DefKind k) {
  switch (k) {
    case DefKind::module: return "module";
    case DefKind::sequence: return "sequence";
    case DefKind::ideal: return "ideal";
    case DefKind::prime: return "prime";
  }
  return "?";
}

struct Definition {
  DefKind kind;
  ModuleDef module;  // kind == module
  ListDef list;      // other kinds
};

struct SessionData {
  std::optional<FieldSpec> field;
  std::vector<std::string> vars;
  std::string order_name = "grevlex";  // "lex" | "grevlex" | "block"
  unsigned block_split = 0;
  std::optional<unsigned> degree_cap;
  std::vector<std::pair<std::string, Definition>> defs;

  const Definition* find(const std::string& name) const {
    for (const auto& [nm, def] : defs)
      if (nm == name) return &def;
    return nullptr;
  }
};

// Re-anchors an error thrown while parsing a captured expression to its
// position in the session source.
inline ParseError remap(const RawExpr& e, const ParseError& inner) {
  int line = e.line, col = e.col;
  long steps = inner.col() > 0 ? inner.col() - 1 : 0;
  for (long k = 0; k < steps && k < static_cast<long>(e.text.size()); ++k) {
    if (e.text[static_cast<std::size_t>(k)] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return ParseError(line, col, inner.message());
}

namespace detail {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(&s) {}

  bool eof() const { return i_ >= s_->size(); }
  char peek() const { return eof() ? '\0' : (*s_)[i_]; }
  int line() const { return line_; }
  int col() const { return col_; }

  char get() {
    char c = (*s_)[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col_, msg);
  }

 private:
  const std::string* s_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class SessionParser {
 public:
  explicit SessionParser(const std::string& text) : c_(text) {}

  SessionData parse() {
    for (;;) {
      c_.skip_ws();
      if (c_.eof()) break;
      std::string kw = ident("statement keyword");
      if (kw == "ring") {
        parse_ring();
      } else if (kw == "graded") {
        expect_kw("module");
        parse_module(true);
      } else if (kw == "module") {
        parse_module(false);
      } else if (kw == "seq") {
        parse_list(DefKind::sequence);
      } else if (kw == "ideal") {
        parse_list(DefKind::ideal);
      } else if (kw == "prime") {
        parse_list(DefKind::prime);
      } else if (kw == "option") {
        parse_option();
      } else {
        c_.fail("unknown statement '" + kw + "'");
      }
    }
    return std::move(data_);
  }

 private:
  std::string ident(const std::string& what) {
    c_.skip_ws();
    if (!std::isalpha(static_cast<unsigned char>(c_.peek())) &&
        c_.peek() != '_')
      c_.fail("expected " + what);
    std::string out;
    while (!c_.eof()) {
      char ch = c_.peek();
      if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')
        out.push_back(c_.get());
      else
        break;
    }
    return out;
  }

  unsigned long number(const std::string& what) {
    c_.skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(c_.peek())))
      c_.fail("expected " + what);
    std::string digits;
    while (!c_.eof() &&
           std::isdigit(static_cast<unsigned char>(c_.peek())))
      digits.push_back(c_.get());
    if (digits.size() > 9) c_.fail(what + " is too large");
    return std::stoul(digits);
  }

  long signed_number(const std::string& what) {
    c_.skip_ws();
    bool negative = false;
    if (c_.peek() == '-') {
      c_.get();
      negative = true;
    }
    long v = static_cast<long>(number(what));
    return negative ? -v : v;
  }

  void expect(char ch) {
    c_.skip_ws();
    if (c_.peek() != ch)
      c_.fail(std::string("expected '") + ch + "'");
    c_.get();
  }

  void expect_kw(const std::string& kw) {
    std::string got = ident("'" + kw + "'");
    if (got != kw) c_.fail("expected '" + kw + "', found '" + got + "'");
  }

  bool peek_is(char ch) {
    c_.skip_ws();
    return c_.peek() == ch;
  }

  // Peeks an identifier without consuming unless it equals kw.
  bool accept_kw(const std::string& kw) {
    c_.skip_ws();
    if (!std::isalpha(static_cast<unsigned char>(c_.peek())) &&
        c_.peek() != '_')
      return false;
    Cursor save = c_;
    std::string got = ident("identifier");
    if (got == kw) return true;
    c_ = save;
    return false;
  }

  RawExpr capture_expr() {
    c_.skip_ws();
    RawExpr e;
    e.line = c_.line();
    e.col = c_.col();
    int depth = 0;
    for (;;) {
      if (c_.eof()) c_.fail("unterminated list");
      char ch = c_.peek();
      if (ch == '#')
        c_.fail("comment inside an expression");
      if (ch == '(') {
        ++depth;
      } else if (ch == ')') {
        if (depth == 0) c_.fail("unbalanced ')'");
        --depth;
      } else if (depth == 0 && (ch == ',' || ch == ']')) {
        break;
      } else if (ch == ';') {
        c_.fail("unexpected ';' inside a list");
      } else if (ch == '[') {
        c_.fail("unexpected '[' inside an expression");
      }
      e.text.push_back(c_.get());
    }
    while (!e.text.empty() &&
           std::isspace(static_cast<unsigned char>(e.text.back())))
      e.text.pop_back();
    if (e.text.empty()) c_.fail("expected an expression");
    return e;
  }

  std::vector<RawExpr> expr_list(bool allow_empty) {
    expect('[');
    std::vector<RawExpr> out;
    c_.skip_ws();
    if (c_.peek() == ']') {
      if (!allow_empty) c_.fail("expected an expression");
      c_.get();
      return out;
    }
    for (;;) {
      out.push_back(capture_expr());
      c_.skip_ws();
      if (c_.peek() == ',') {
        c_.get();
        continue;
      }
      expect(']');
      break;
    }
    return out;
  }

  void require_ring() {
    if (data_.vars.empty())
      c_.fail("the ring must be declared before definitions");
  }

  void check_fresh(const std::string& name) {
    if (data_.find(name) != nullptr)
      c_.fail("duplicate name '" + name + "'");
  }

  void parse_ring() {
    if (!data_.vars.empty()) c_.fail("duplicate ring statement");
    std::string fieldname = ident("field name");
    FieldSpec fs;
    if (fieldname == "Q" || fieldname == "QQ") {
      fs.rationals = true;
    } else if (fieldname == "GF") {
      expect('(');
      fs.modulus = number("field modulus");
      expect(')');
    } else {
      c_.fail("unknown field '" + fieldname + "' (use Q or GF(p))");
    }
    data_.field = fs;
    expect('[');
    for (;;) {
      std::string v = ident("variable name");
      for (const auto& existing : data_.vars)
        if (existing == v) c_.fail("duplicate variable '" + v + "'");
      data_.vars.push_back(v);
      c_.skip_ws();
      if (c_.peek() == ',') {
        c_.get();
        continue;
      }
      expect(']');
      break;
    }
    if (accept_kw("order")) {
      std::string ord = ident("order name");
      if (ord == "lex" || ord == "grevlex") {
        data_.order_name = ord;
      } else if (ord == "block") {
        data_.order_name = "block";
        unsigned long split = number("block split");
        if (split > data_.vars.size())
          c_.fail("block split exceeds the variable count");
        data_.block_split = static_cast<unsigned>(split);
      } else {
        c_.fail("unknown order '" + ord + "'");
      }
    }
    expect(';');
  }

  void parse_module(bool graded) {
    require_ring();
    std::string name = ident("module name");
    check_fresh(name);
    expect('=');
    ModuleDef def;
    def.graded = graded;
    std::string form = ident("'free' or 'coker'");
    if (form == "free") {
      def.is_free = true;
      def.free_rank = static_cast<unsigned>(number("free rank"));
      if (def.free_rank > 64) c_.fail("free rank is too large");
    } else if (form == "coker") {
      expect('[');
      std::size_t width = 0;
      for (;;) {
        c_.skip_ws();
        int row_line = c_.line(), row_col = c_.col();
        def.matrix.push_back(expr_list(false));
        if (def.matrix.size() == 1) {
          width = def.matrix.back().size();
        } else if (def.matrix.back().size() != width) {
          throw ParseError(row_line, row_col,
                           "ragged matrix: rows must have equal length");
        }
        c_.skip_ws();
        if (c_.peek() == ',') {
          c_.get();
          continue;
        }
        expect(']');
        break;
      }
    } else {
      c_.fail("expected 'free' or 'coker', found '" + form + "'");
    }
    if (accept_kw("shifts")) {
      def.graded = true;
      expect('[');
      std::vector<long> sh;
      c_.skip_ws();
      if (c_.peek() != ']') {
        for (;;) {
          sh.push_back(signed_number("shift"));
          c_.skip_ws();
          if (c_.peek() == ',') {
            c_.get();
            continue;
          }
          break;
        }
      }
      expect(']');
      std::size_t rank = def.is_free ? def.free_rank : def.matrix.size();
      if (sh.size() != rank)
        c_.fail("shift count does not match the module rank");
      def.shifts = std::move(sh);
    }
    expect(';');
    Definition d;
    d.kind = DefKind::module;
    d.module = std::move(def);
    data_.defs.emplace_back(std::move(name), std::move(d));
  }

  void parse_list(DefKind kind) {
    require_ring();
    std::string name = ident("name");
    check_fresh(name);
    expect('=');
    Definition d;
    d.kind = kind;
    d.list.entries = expr_list(kind != DefKind::sequence);
    expect(';');
    data_.defs.emplace_back(std::move(name), std::move(d));
  }

  void parse_option() {
    std::string opt = ident("option name");
    if (opt == "degree_cap") {
      unsigned long v = number("degree cap");
      if (v == 0) c_.fail("degree cap must be positive");
      data_.degree_cap = static_cast<unsigned>(v);
    } else {
      c_.fail("unknown option '" + opt + "'");
    }
    expect(';');
  }

  Cursor c_;
  SessionData data_;
};

}  // namespace detail

inline SessionData parse_session(const std::string& text) {
  return detail::SessionParser(text).parse();
}

}  // namespace regseq::session
