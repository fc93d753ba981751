#pragma once

// Closed forms for powers and the exponential of the number operator a^dag a
// in normal and anti-normal ordering.

#include "boson/combinatorics.hpp"
#include "boson/errors.hpp"
#include "boson/operators.hpp"
#include "boson/series.hpp"

#include <map>
#include <string>

namespace boson {

/// sum_{m,n} c_{m,n}(lambda) {a^dag^m a^n}, exact through lambda^order.
class OperatorSeries {
 public:
  using TermMap = std::map<OrderedMonomial, FormalSeries, MonomialDisplayOrder>;

  OperatorSeries(unsigned order, OrderingParam ordering)
      : order_(order), ordering_(std::move(ordering)) {}

  unsigned order() const noexcept { return order_; }
  const OrderingParam& ordering() const noexcept { return ordering_; }
  const TermMap& terms() const noexcept { return terms_; }

  void add_term(OrderedMonomial m, const FormalSeries& s) {
    if (s.order() != order_) throw OrderMismatch(order_, s.order());
    if (s.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, s);
    if (!inserted) {
      it->second += s;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FormalSeries series(unsigned m, unsigned n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? FormalSeries(order_) : it->second;
  }

  /// The operator multiplying lambda^power.
  OrderedPolynomial coefficient(unsigned power) const {
    OrderedPolynomial p(ordering_);
    for (const auto& [m, s] : terms_) p.add_term(m, s[power]);
    return p;
  }

 private:
  unsigned order_;
  OrderingParam ordering_;
  TermMap terms_;
};

/// (a^dag a)^n = sum_k S(n, k) a^dag^k a^k.
inline OrderedPolynomial number_power_normal(unsigned n) {
  OrderedPolynomial p(OrderingParam::normal());
  const auto row = detail::stirling_row(n);
  for (unsigned k = 0; k <= n; ++k) p.add_term({k, k}, MultiPoly(Rational(row[k])));
  return p;
}

/// (a^dag a)^n = sum_{k=1}^{n+1} (-1)^(n+1-k) S(n+1, k) a^(k-1) a^dag^(k-1).
inline OrderedPolynomial number_power_antinormal(unsigned n) {
  OrderedPolynomial p(OrderingParam::anti_normal());
  const auto row = detail::stirling_row(n + 1);
  for (unsigned k = 1; k <= n + 1; ++k)
    p.add_term({k - 1, k - 1}, MultiPoly(sign_power(n + 1 - k) * Rational(row[k])));
  return p;
}

/// e^{lambda a^dag a} = :exp((e^lambda - 1) a^dag a):, term (k, k) carrying
/// (e^lambda - 1)^k / k!.
inline OperatorSeries exp_number_normal(unsigned order = kDefaultSeriesOrder) {
  OperatorSeries out(order, OrderingParam::normal());
  const FormalSeries shifted = FormalSeries::exp_linear(1, order) - FormalSeries::one(order);
  FormalSeries power = FormalSeries::one(order);
  // (e^lambda - 1)^k starts at lambda^k, so k <= order suffices.
  for (unsigned k = 0; k <= order; ++k) {
    out.add_term({k, k}, MultiPoly(Rational(1) / Rational(factorial(k))) * power);
    power = power * shifted;
  }
  return out;
}

namespace detail {

// Divides a polynomial in `x` by x; a nonzero x-free part cannot cancel.
inline MultiPoly divide_by_symbol(const MultiPoly& p, const std::string& x) {
  if (!p.coefficient_of_power(x, 0).is_zero()) throw ConstantTermObstruction();
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    const unsigned k = m.power_of(x);
    out += MultiPoly::term(m.without(x) * Monomial(x, k - 1), c);
  }
  return out;
}

inline constexpr const char* kNumberSymbol = "x";

}  // namespace detail

/// e^{lambda a^dag a} = e^{-lambda} vdots exp(a^dag a (1 - e^{-lambda})) vdots.
///
/// Built the operational way: with x standing for a^dag a inside the
/// anti-normal symbol, take G(-lambda, -x) - 1, differentiate in lambda and
/// divide by x. Term (k, k) then carries e^{-lambda} (1 - e^{-lambda})^k / k!.
inline OperatorSeries exp_number_antinormal(unsigned order = kDefaultSeriesOrder) {
  const std::string x = detail::kNumberSymbol;
  // One extra order because the derivative drops one.
  FormalSeries g = bell_generating_series(-MultiPoly::variable(x), order + 1).reflected();
  g -= FormalSeries::one(order + 1);
  const FormalSeries dg = g.derivative();

  OperatorSeries out(order, OrderingParam::anti_normal());
  std::map<unsigned, std::vector<MultiPoly>> by_power;
  for (unsigned n = 0; n <= order; ++n) {
    const MultiPoly c = detail::divide_by_symbol(dg[n], x);
    for (unsigned k = 0; k <= c.degree_in(x); ++k) {
      auto& coeffs = by_power[k];
      coeffs.resize(order + 1);
      coeffs[n] = c.coefficient_of_power(x, k);
    }
  }
  for (auto& [k, coeffs] : by_power) out.add_term({k, k}, FormalSeries(std::move(coeffs), order));
  return out;
}

/// (a^dag a)^n = (-1)^(n+1) vdots (a^dag a)^{-1} B(n+1, -a^dag a) vdots with the
/// formal inverse cancelled against the Bell polynomial.
inline OrderedPolynomial antinormal_bell_form(unsigned n) {
  const std::string x = detail::kNumberSymbol;
  const MultiPoly bell = bell_poly(n + 1).substitute(-MultiPoly::variable(x));
  const MultiPoly reduced = detail::divide_by_symbol(MultiPoly(sign_power(n + 1)) * bell, x);
  OrderedPolynomial p(OrderingParam::anti_normal());
  for (unsigned k = 0; k <= reduced.degree_in(x); ++k)
    p.add_term({k, k}, reduced.coefficient_of_power(x, k));
  return p;
}

}  // namespace boson
