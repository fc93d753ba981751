#pragma once

#include "boson/errors.hpp"
#include "boson/multipoly.hpp"
#include "boson/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace boson {

enum class Letter : unsigned char { Creation, Annihilation };

/// Finite product of ladder operators, left to right. Empty is the identity.
struct Word {
  std::vector<Letter> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }

  std::size_t creations() const {
    std::size_t c = 0;
    for (Letter l : letters) c += l == Letter::Creation;
    return c;
  }
  std::size_t annihilations() const { return size() - creations(); }

  Word& operator*=(const Word& o) {
    letters.insert(letters.end(), o.letters.begin(), o.letters.end());
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  Word pow(unsigned k) const {
    Word r;
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  bool operator==(const Word&) const = default;

  /// Whitespace-separated "a" / "ad" tokens, e.g. "a a ad".
  static Word parse(std::string_view text) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] == ' ') {
        ++i;
        continue;
      }
      std::size_t j = text.find(' ', i);
      if (j == std::string_view::npos) j = text.size();
      auto tok = text.substr(i, j - i);
      if (tok == "a") {
        w.letters.push_back(Letter::Annihilation);
      } else if (tok == "ad") {
        w.letters.push_back(Letter::Creation);
      } else {
        throw std::invalid_argument("bad letter '" + std::string(tok) + "'");
      }
      i = j;
    }
    return w;
  }

  std::string to_string() const {
    std::string out;
    for (Letter l : letters) {
      if (!out.empty()) out += ' ';
      out += l == Letter::Creation ? "ad" : "a";
    }
    return out.empty() ? "1" : out;
  }
};

/// Cahill-Glauber ordering parameter: a rational in [-1, 1] (+1 normal,
/// 0 Weyl, -1 anti-normal) or a named symbol.
class OrderingParam {
 public:
  OrderingParam() : value_(Rational(1)) {}

  static OrderingParam normal() { return OrderingParam(Rational(1)); }
  static OrderingParam anti_normal() { return OrderingParam(Rational(-1)); }
  static OrderingParam weyl() { return OrderingParam(Rational(0)); }

  static OrderingParam concrete(const Rational& s) {
    if (s < -1 || s > 1)
      throw InvalidOrdering("ordering parameter " + boson::to_string(s) +
                            " outside [-1, 1]");
    return OrderingParam(s);
  }
  static OrderingParam symbolic(const std::string& name) {
    OrderingParam p;
    p.value_ = Symbol(name);
    return p;
  }

  bool is_concrete() const noexcept { return std::holds_alternative<Rational>(value_); }
  bool is_symbolic() const noexcept { return !is_concrete(); }
  const Rational& value() const { return std::get<Rational>(value_); }
  const Symbol& symbol() const { return std::get<Symbol>(value_); }

  bool is_normal() const { return is_concrete() && value() == 1; }
  bool is_anti_normal() const { return is_concrete() && value() == -1; }

  MultiPoly as_poly() const {
    return is_concrete() ? MultiPoly(value()) : MultiPoly::variable(symbol().name());
  }

  /// Replaces a bound symbol by its value.
  OrderingParam specialized(const Bindings& bindings) const {
    if (is_concrete()) return *this;
    auto it = bindings.find(symbol().name());
    return it == bindings.end() ? *this : concrete(it->second);
  }

  std::string to_string() const {
    return is_concrete() ? boson::to_string(value()) : symbol().name();
  }

  friend bool operator==(const OrderingParam& a, const OrderingParam& b) {
    return a.value_ == b.value_;
  }
  /// Concrete values sort before symbols.
  friend bool operator<(const OrderingParam& a, const OrderingParam& b) {
    if (a.is_concrete() != b.is_concrete()) return a.is_concrete();
    if (a.is_concrete()) return a.value() < b.value();
    return a.symbol() < b.symbol();
  }

 private:
  explicit OrderingParam(const Rational& s) : value_(s) {}
  std::variant<Rational, Symbol> value_;
};

/// {a^dag^m a^n}: only the counts matter inside an ordering symbol.
struct OrderedMonomial {
  unsigned dag = 0;
  unsigned ann = 0;

  int excess() const noexcept { return static_cast<int>(dag) - static_cast<int>(ann); }
  unsigned degree() const noexcept { return dag + ann; }
  auto operator<=>(const OrderedMonomial&) const = default;
};

/// Display order: higher total degree first, then more creations first.
struct MonomialDisplayOrder {
  bool operator()(const OrderedMonomial& a, const OrderedMonomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.dag > b.dag;
  }
};

/// Finite sum of ordered monomials sharing one ordering tag.
class OrderedPolynomial {
 public:
  using TermMap = std::map<OrderedMonomial, MultiPoly, MonomialDisplayOrder>;

  explicit OrderedPolynomial(OrderingParam ordering = OrderingParam::normal())
      : ordering_(std::move(ordering)) {}

  static OrderedPolynomial scalar(const MultiPoly& c, OrderingParam ordering) {
    OrderedPolynomial p(std::move(ordering));
    p.add_term({0, 0}, c);
    return p;
  }
  static OrderedPolynomial monomial(OrderedMonomial m, OrderingParam ordering,
                                    const MultiPoly& c = MultiPoly(1)) {
    OrderedPolynomial p(std::move(ordering));
    p.add_term(m, c);
    return p;
  }

  const OrderingParam& ordering() const noexcept { return ordering_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  MultiPoly coefficient(unsigned m, unsigned n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? MultiPoly() : it->second;
  }

  void add_term(OrderedMonomial m, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  OrderedPolynomial& operator+=(const OrderedPolynomial& o) {
    check_ordering(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  OrderedPolynomial& operator-=(const OrderedPolynomial& o) {
    check_ordering(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend OrderedPolynomial operator+(OrderedPolynomial a, const OrderedPolynomial& b) {
    return a += b;
  }
  friend OrderedPolynomial operator-(OrderedPolynomial a, const OrderedPolynomial& b) {
    return a -= b;
  }
  friend OrderedPolynomial operator*(const MultiPoly& c, const OrderedPolynomial& p) {
    OrderedPolynomial r(p.ordering_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : p.terms_) r.add_term(m, c * x);
    return r;
  }

  friend bool operator==(const OrderedPolynomial& a, const OrderedPolynomial& b) {
    return a.ordering_ == b.ordering_ && a.terms_ == b.terms_;
  }

  /// Substitutes bound symbols in coefficients and in a symbolic ordering tag.
  OrderedPolynomial specialized(const Bindings& bindings) const {
    OrderedPolynomial r(ordering_.specialized(bindings));
    for (const auto& [m, c] : terms_) r.add_term(m, c.specialize(bindings));
    return r;
  }

 private:
  void check_ordering(const OrderedPolynomial& o) const {
    if (!(o.ordering_ == ordering_))
      throw InvalidOrdering("cannot combine polynomials ordered as " +
                            ordering_.to_string() + " and " + o.ordering_.to_string());
  }

  OrderingParam ordering_;
  TermMap terms_;
};

}  // namespace boson
