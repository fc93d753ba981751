#pragma once

#include "boson/errors.hpp"
#include "boson/rational.hpp"

#include <compare>
#include <concepts>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace boson {

/// Name of an ordering symbol such as s, t or s2. Compared by name.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string name) : name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }
  auto operator<=>(const Symbol&) const = default;

 private:
  std::string name_;
};

using Bindings = std::map<std::string, Rational>;

/// Product of symbol powers; stored sparsely, never with a zero exponent.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::string& symbol, unsigned power = 1) {
    if (power > 0) powers_[symbol] = power;
  }

  const std::map<std::string, unsigned>& powers() const noexcept { return powers_; }
  bool is_one() const noexcept { return powers_.empty(); }

  unsigned degree() const noexcept {
    unsigned d = 0;
    for (const auto& [_, p] : powers_) d += p;
    return d;
  }

  unsigned power_of(const std::string& symbol) const {
    auto it = powers_.find(symbol);
    return it == powers_.end() ? 0 : it->second;
  }

  Monomial without(const std::string& symbol) const {
    Monomial m = *this;
    m.powers_.erase(symbol);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [s, p] : b.powers_) r.powers_[s] += p;
    return r;
  }

  bool operator==(const Monomial&) const = default;

  /// "s^2*t"; the empty monomial renders as "1".
  std::string to_string() const {
    if (powers_.empty()) return "1";
    std::string out;
    for (const auto& [s, p] : powers_) {
      if (!out.empty()) out += "*";
      out += s;
      if (p > 1) out += "^" + std::to_string(p);
    }
    return out;
  }

 private:
  std::map<std::string, unsigned> powers_;
};

/// Graded lexicographic order: higher total degree first, then the monomial
/// with the larger power of the alphabetically first differing symbol.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    auto ia = a.powers().begin(), ib = b.powers().begin();
    const auto ea = a.powers().end(), eb = b.powers().end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (ia->second != ib->second) return ia->second > ib->second;
    }
    return false;  // equal degree and equal prefix means equal
  }
};

/// Multivariate polynomial with exact rational coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLex>;

  MultiPoly() = default;
  MultiPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  template <std::integral I>
  MultiPoly(I c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(const std::string& name) {
    MultiPoly p;
    p.terms_.emplace(Monomial(name), Rational(1));
    return p;
  }

  static MultiPoly term(const Monomial& m, const Rational& c) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  unsigned degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
  }

  unsigned degree_in(const std::string& symbol) const {
    unsigned d = 0;
    for (const auto& [m, _] : terms_) d = std::max(d, m.power_of(symbol));
    return d;
  }

  std::set<std::string> symbols() const {
    std::set<std::string> out;
    for (const auto& [m, _] : terms_)
      for (const auto& [s, __] : m.powers()) out.insert(s);
    return out;
  }

  /// Coefficient of symbol^k, as a polynomial in the remaining symbols.
  MultiPoly coefficient_of_power(const std::string& symbol, unsigned k) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_)
      if (m.power_of(symbol) == k) r.add(m.without(symbol), c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add(ma * mb, ca * cb);
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly r(1), base = *this;
    while (k) {
      if (k & 1u) r *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return r;
  }

  /// Exact value; every symbol must be bound.
  Rational eval(const Bindings& bindings) const {
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (const auto& [s, p] : m.powers()) {
        auto it = bindings.find(s);
        if (it == bindings.end()) throw MissingBinding(s);
        for (unsigned i = 0; i < p; ++i) v *= it->second;
      }
      sum += v;
    }
    return sum;
  }

  /// Substitutes the bound symbols and leaves the others symbolic.
  MultiPoly specialize(const Bindings& bindings) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial rest;
      Rational v = c;
      for (const auto& [s, p] : m.powers()) {
        auto it = bindings.find(s);
        if (it == bindings.end()) {
          rest = rest * Monomial(s, p);
        } else {
          for (unsigned i = 0; i < p; ++i) v *= it->second;
        }
      }
      r.add(rest, v);
    }
    return r;
  }

  /// Canonical text, e.g. "(1/2)*t + (-1/2)". A constant renders as a bare
  /// rational; inside sums, negative or fractional coefficients are
  /// parenthesized and unit coefficients are dropped.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    if (is_constant()) return boson::to_string(terms_.begin()->second);
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      const bool plain = c > 0 && is_integer(c);
      const std::string cs = plain ? boson::to_string(c) : "(" + boson::to_string(c) + ")";
      if (m.is_one()) {
        out += cs;
      } else if (c == 1) {
        out += m.to_string();
      } else {
        out += cs + "*" + m.to_string();
      }
    }
    return out;
  }

 private:
  void add(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline bool is_zero(const Rational& r) { return r == 0; }

}  // namespace boson
