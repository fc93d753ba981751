#pragma once

// Recursive-descent parser for operator expressions:
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := primary ('^' nat)*
//   primary:= scalar | symbol | 'a' | 'ad' | block | '(' expr ')'
//   block  := ('N'|'A'|'W') '[' expr ']' | 'S' '[' param ';' expr ']'
//   scalar := nat ['/' nat]
//   param  := ['-'] scalar | symbol
//
// Juxtaposition multiplies; left-to-right product order is operator order.
// "a" followed by U+2020 (dagger) is accepted for "ad".

#include "boson/errors.hpp"
#include "boson/operators.hpp"
#include "boson/rational.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace boson {

struct Ast {
  enum class Kind { Sum, Product, Power, LetterRef, OrderedBlock, ScalarLit, SymbolRef };

  Kind kind = Kind::ScalarLit;
  std::vector<Ast> children;   // Sum/Product: operands; Power/OrderedBlock: one child
  unsigned exponent = 0;       // Power
  Letter letter = Letter::Annihilation;
  Rational scalar = 0;
  std::string symbol;
  OrderingParam ordering;      // OrderedBlock

  static Ast sum(std::vector<Ast> c) { return with_children(Kind::Sum, std::move(c)); }
  static Ast product(std::vector<Ast> c) { return with_children(Kind::Product, std::move(c)); }
  static Ast power(Ast base, unsigned e) {
    Ast n = with_children(Kind::Power, {std::move(base)});
    n.exponent = e;
    return n;
  }
  static Ast letter_ref(Letter l) {
    Ast n;
    n.kind = Kind::LetterRef;
    n.letter = l;
    return n;
  }
  static Ast block(Ast inner, OrderingParam p) {
    Ast n = with_children(Kind::OrderedBlock, {std::move(inner)});
    n.ordering = std::move(p);
    return n;
  }
  static Ast scalar_lit(Rational r) {
    Ast n;
    n.kind = Kind::ScalarLit;
    n.scalar = std::move(r);
    return n;
  }
  static Ast symbol_ref(std::string name) {
    Ast n;
    n.kind = Kind::SymbolRef;
    n.symbol = std::move(name);
    return n;
  }

  /// Debug dump, e.g. "Product[LetterRef(ad), LetterRef(a)]".
  std::string to_string() const {
    auto list = [&](const char* head) {
      std::string out = std::string(head) + "[";
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += ", ";
        out += children[i].to_string();
      }
      return out + "]";
    };
    switch (kind) {
      case Kind::Sum: return list("Sum");
      case Kind::Product: return list("Product");
      case Kind::Power:
        return "Power(" + children[0].to_string() + ", " + std::to_string(exponent) + ")";
      case Kind::LetterRef:
        return std::string("LetterRef(") + (letter == Letter::Creation ? "ad" : "a") + ")";
      case Kind::OrderedBlock:
        return "OrderedBlock(" + children[0].to_string() + ", " + ordering.to_string() + ")";
      case Kind::ScalarLit: return "ScalarLit(" + boson::to_string(scalar) + ")";
      case Kind::SymbolRef: return "SymbolRef(" + symbol + ")";
    }
    return {};
  }

  friend bool operator==(const Ast& a, const Ast& b) {
    return a.kind == b.kind && a.children == b.children && a.exponent == b.exponent &&
           a.letter == b.letter && a.scalar == b.scalar && a.symbol == b.symbol &&
           a.ordering == b.ordering;
  }

 private:
  static Ast with_children(Kind k, std::vector<Ast> c) {
    Ast n;
    n.kind = k;
    n.children = std::move(c);
    return n;
  }
};

struct ParseLimits {
  std::size_t max_depth = 200;
  unsigned max_exponent = 4096;
  std::size_t max_digits = 200;
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, ParseLimits limits) : text_(text), limits_(limits) {}

  Ast parse_all() {
    Ast e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "factor", "end of input"});
    return e;
  }

 private:
  enum class Tok { End, Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, LBracket,
                   RBracket, Semicolon, Slash, Dagger, Other };

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  bool at_dagger(std::size_t p) const { return text_.substr(p, 3) == "\xE2\x80\xA0"; }

  Tok peek() {
    skip_space();
    if (pos_ >= text_.size()) return Tok::End;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Tok::Number;
    if (ident_start(c)) return Tok::Ident;
    switch (c) {
      case '+': return Tok::Plus;
      case '-': return Tok::Minus;
      case '*': return Tok::Star;
      case '^': return Tok::Caret;
      case '(': return Tok::LParen;
      case ')': return Tok::RParen;
      case '[': return Tok::LBracket;
      case ']': return Tok::RBracket;
      case ';': return Tok::Semicolon;
      case '/': return Tok::Slash;
      default: break;
    }
    if (at_dagger(pos_)) return Tok::Dagger;
    return Tok::Other;
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail = {}) {
    skip_space();
    throw SyntaxError(pos_, std::move(expected), detail);
  }

  void expect(char c, const char* name) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail({name});
    ++pos_;
  }

  std::string_view read_ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Integer read_nat() {
    skip_space();
    const std::size_t start = pos_;
    Integer v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (pos_ - start >= limits_.max_digits) fail({}, "numeral too long");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail({"natural number"});
    return v;
  }

  Rational read_scalar() {
    const Integer num = read_nat();
    if (peek() == Tok::Slash) {
      ++pos_;
      const std::size_t at = (skip_space(), pos_);
      const Integer den = read_nat();
      if (den == 0) throw SyntaxError(at, {"nonzero denominator"}, "division by zero");
      return Rational(num, den);
    }
    return Rational(num);
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > p.limits_.max_depth) p.fail({}, "nesting too deep");
    }
    ~DepthGuard() { --p.depth_; }
  };

  bool starts_factor() {
    switch (peek()) {
      case Tok::Number:
      case Tok::Ident:
      case Tok::LParen: return true;
      default: return false;
    }
  }

  Ast parse_expr() {
    DepthGuard guard(*this);
    std::vector<Ast> terms;
    bool negate = false;
    if (peek() == Tok::Minus) {
      ++pos_;
      negate = true;
    }
    terms.push_back(signed_term(negate));
    for (;;) {
      const Tok t = peek();
      if (t != Tok::Plus && t != Tok::Minus) break;
      ++pos_;
      terms.push_back(signed_term(t == Tok::Minus));
    }
    return terms.size() == 1 ? std::move(terms.front()) : Ast::sum(std::move(terms));
  }

  // Subtraction is represented as multiplication by the scalar -1.
  Ast signed_term(bool negate) {
    Ast t = parse_term();
    if (!negate) return t;
    std::vector<Ast> factors{Ast::scalar_lit(-1)};
    if (t.kind == Ast::Kind::Product) {
      for (auto& c : t.children) factors.push_back(std::move(c));
    } else {
      factors.push_back(std::move(t));
    }
    return Ast::product(std::move(factors));
  }

  Ast parse_term() {
    std::vector<Ast> factors;
    if (!starts_factor()) fail({"number", "symbol", "'a'", "'ad'", "block", "'('"});
    factors.push_back(parse_factor());
    for (;;) {
      if (peek() == Tok::Star) {
        ++pos_;
        if (!starts_factor()) fail({"number", "symbol", "'a'", "'ad'", "block", "'('"});
        factors.push_back(parse_factor());
      } else if (starts_factor()) {
        factors.push_back(parse_factor());
      } else {
        break;
      }
    }
    return factors.size() == 1 ? std::move(factors.front()) : Ast::product(std::move(factors));
  }

  Ast parse_factor() {
    Ast base = parse_primary();
    while (peek() == Tok::Caret) {
      ++pos_;
      const std::size_t at = (skip_space(), pos_);
      const Integer e = read_nat();
      if (e > limits_.max_exponent)
        throw SyntaxError(at, {"exponent <= " + std::to_string(limits_.max_exponent)},
                          "exponent too large");
      base = Ast::power(std::move(base), static_cast<unsigned>(e));
    }
    return base;
  }

  Ast parse_primary() {
    DepthGuard guard(*this);
    switch (peek()) {
      case Tok::Number: return Ast::scalar_lit(read_scalar());
      case Tok::LParen: {
        ++pos_;
        Ast inner = parse_expr();
        expect(')', "')'");
        return inner;
      }
      case Tok::Ident: break;
      default: fail({"number", "symbol", "'a'", "'ad'", "block", "'('"});
    }
    const std::size_t start = pos_;
    const std::string_view id = read_ident();
    if (id == "a") {
      if (at_dagger(pos_)) {
        pos_ += 3;
        return Ast::letter_ref(Letter::Creation);
      }
      return Ast::letter_ref(Letter::Annihilation);
    }
    if (id == "ad") return Ast::letter_ref(Letter::Creation);
    skip_space();
    const bool bracket = pos_ < text_.size() && text_[pos_] == '[';
    if (bracket && (id == "N" || id == "A" || id == "W" || id == "S")) {
      ++pos_;
      OrderingParam p = OrderingParam::normal();
      if (id == "A") p = OrderingParam::anti_normal();
      if (id == "W") p = OrderingParam::weyl();
      if (id == "S") {
        p = parse_param();
        expect(';', "';'");
      }
      Ast inner = parse_expr();
      expect(']', "']'");
      return Ast::block(std::move(inner), std::move(p));
    }
    if (bracket) throw SyntaxError(start, {"'N['", "'A['", "'W['", "'S['"}, "unknown block");
    return Ast::symbol_ref(std::string(id));
  }

  OrderingParam parse_param() {
    const Tok t = peek();
    const std::size_t at = pos_;
    if (t == Tok::Ident) {
      const std::string_view id = read_ident();
      if (id == "a" || id == "ad") throw SyntaxError(at, {"ordering symbol"}, "reserved name");
      return OrderingParam::symbolic(std::string(id));
    }
    bool negative = false;
    if (t == Tok::Minus) {
      ++pos_;
      negative = true;
    } else if (t != Tok::Number) {
      fail({"rational in [-1, 1]", "symbol"});
    }
    Rational r = read_scalar();
    if (negative) r = -r;
    if (r < -1 || r > 1) throw SyntaxError(at, {"rational in [-1, 1]"}, "ordering out of range");
    return OrderingParam::concrete(r);
  }

  std::string_view text_;
  ParseLimits limits_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace detail

/// Throws SyntaxError (byte offset plus expected tokens) on any malformed input.
inline Ast parse(std::string_view input, ParseLimits limits = {}) {
  return detail::Parser(input, limits).parse_all();
}

}  // namespace boson
