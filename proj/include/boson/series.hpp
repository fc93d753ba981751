#pragma once

#include "boson/errors.hpp"
#include "boson/multipoly.hpp"
#include "boson/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace boson {

/// Default truncation order for series in the expansion parameter.
inline constexpr unsigned kDefaultSeriesOrder = 12;

/// Power series in one formal variable, truncated after the term of degree
/// order() (inclusive). Coefficients are exact (Rational or MultiPoly).
template <class Coeff>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order = kDefaultSeriesOrder)
      : coeffs_(order + 1, Coeff(0)) {}

  /// Pads with zeros or drops coefficients beyond `order`.
  TruncatedSeries(std::vector<Coeff> coeffs, unsigned order)
      : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Coeff(0));
  }

  static TruncatedSeries constant(const Coeff& c, unsigned order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  static TruncatedSeries one(unsigned order) { return constant(Coeff(1), order); }

  /// The expansion variable itself.
  static TruncatedSeries variable(unsigned order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = Coeff(1);
    return s;
  }

  /// exp(c * x) for a scalar rate c.
  static TruncatedSeries exp_linear(const Rational& rate, unsigned order) {
    TruncatedSeries s(order);
    Rational term = 1;
    for (unsigned n = 0; n <= order; ++n) {
      s.coeffs_[n] = Coeff(term);
      term = term * rate / Rational(n + 1);
    }
    return s;
  }

  unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Coeff& operator[](unsigned n) const { return coeffs_.at(n); }
  const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!boson::is_zero(c)) return false;
    return true;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  /// Cauchy product cut at the common order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_order(b);
    const unsigned n = a.order();
    TruncatedSeries r(n);
    for (unsigned i = 0; i <= n; ++i) {
      if (boson::is_zero(a.coeffs_[i])) continue;
      for (unsigned j = 0; i + j <= n; ++j) {
        if (boson::is_zero(b.coeffs_[j])) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  friend TruncatedSeries operator*(const Coeff& c, TruncatedSeries s) {
    for (auto& x : s.coeffs_) x = c * x;
    return s;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Term-wise derivative; the result has order() - 1.
  TruncatedSeries derivative() const {
    if (order() == 0) return TruncatedSeries(0);
    TruncatedSeries r(order() - 1);
    for (unsigned n = 1; n <= order(); ++n) r.coeffs_[n - 1] = Coeff(Rational(n)) * coeffs_[n];
    return r;
  }

  /// Substitutes x -> -x.
  TruncatedSeries reflected() const {
    TruncatedSeries r = *this;
    for (unsigned n = 1; n <= order(); n += 2) r.coeffs_[n] = -r.coeffs_[n];
    return r;
  }

  TruncatedSeries truncated(unsigned new_order) const {
    return TruncatedSeries(coeffs_, new_order);
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using Out = std::decay_t<decltype(f(coeffs_[0]))>;
    std::vector<Out> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return TruncatedSeries<Out>(std::move(out), order());
  }

  /// "1 + (-1)*lambda + (1/2)*lambda^2 + O(lambda^3)"; coefficients that are
  /// not plain integers are parenthesized.
  std::string to_string(const std::string& var = "lambda") const {
    std::string out;
    for (unsigned n = 0; n <= order(); ++n) {
      const Coeff& c = coeffs_[n];
      if (boson::is_zero(c)) continue;
      if (!out.empty()) out += " + ";
      const std::string cs = coeff_text(c);
      const bool plain = is_plain(c);
      const std::string pw = n == 1 ? var : var + "^" + std::to_string(n);
      if (n == 0) {
        out += plain ? cs : "(" + cs + ")";
      } else if (cs == "1") {
        out += pw;
      } else {
        out += (plain ? cs : "(" + cs + ")") + "*" + pw;
      }
    }
    if (out.empty()) out = "0";
    out += " + O(" + var + "^" + std::to_string(order() + 1) + ")";
    return out;
  }

 private:
  static std::string coeff_text(const Rational& c) { return boson::to_string(c); }
  static std::string coeff_text(const MultiPoly& c) { return c.to_string(); }
  static bool is_plain(const Rational& c) { return c > 0 && is_integer(c); }
  static bool is_plain(const MultiPoly& c) {
    return c.is_constant() && is_plain(c.constant_term());
  }

  void check_order(const TruncatedSeries& o) const {
    if (o.order() != order()) throw OrderMismatch(order(), o.order());
  }

  std::vector<Coeff> coeffs_;
};

using FormalSeries = TruncatedSeries<MultiPoly>;
using RationalSeries = TruncatedSeries<Rational>;

/// exp(a) for a series with zero constant term, via n E_n = sum_k k a_k E_{n-k}
/// (the coefficient form of E' = a' E).
template <class Coeff>
TruncatedSeries<Coeff> exp(const TruncatedSeries<Coeff>& a) {
  if (!is_zero(a[0])) throw NonzeroConstantTerm();
  const unsigned order = a.order();
  std::vector<Coeff> e(order + 1, Coeff(0));
  e[0] = Coeff(1);
  for (unsigned n = 1; n <= order; ++n) {
    Coeff acc(0);
    for (unsigned k = 1; k <= n; ++k) {
      if (is_zero(a[k]) || is_zero(e[n - k])) continue;
      acc += Coeff(Rational(k)) * a[k] * e[n - k];
    }
    e[n] = Coeff(Rational(1, n)) * acc;
  }
  return TruncatedSeries<Coeff>(std::move(e), order);
}

template <class Coeff>
TruncatedSeries<Coeff> pow(const TruncatedSeries<Coeff>& a, unsigned k) {
  auto r = TruncatedSeries<Coeff>::one(a.order());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

}  // namespace boson
