#pragma once

// Numerical realization of operators on the truncated Fock space
// span{|0>, ..., |D-1>}. An operator of total degree L maps |j> into
// span{|j-L>, ..., |j+L>}, so the leading (D - L) x (D - L) block of a
// product of truncated matrices is free of truncation error.

#include "boson/errors.hpp"
#include "boson/got.hpp"
#include "boson/operators.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>
#include <string>

namespace boson {

inline constexpr std::size_t kDefaultFockDim = 32;
inline constexpr double kDefaultTolerance = 1e-9;

using FockMatrix = Eigen::MatrixXd;

inline FockMatrix annihilation_matrix(std::size_t dim) {
  FockMatrix a = FockMatrix::Zero(dim, dim);
  for (std::size_t i = 1; i < dim; ++i) a(i - 1, i) = std::sqrt(static_cast<double>(i));
  return a;
}

inline FockMatrix creation_matrix(std::size_t dim) { return annihilation_matrix(dim).transpose(); }

namespace detail {

inline Rational to_rational(const MultiPoly& c) {
  if (!c.is_constant()) throw UnboundSymbol(*c.symbols().begin());
  return c.constant_term();
}

// Column j of an operator on the truncated space. Every path of ladder
// letters from |j> to |k> has amplitude r * sqrt(k!/j!) with r rational, so
// only r is tracked. Components leaving {0, ..., D-1} are dropped exactly as
// a product of truncated matrices drops them.
using Column = std::map<std::size_t, Rational>;

inline void accumulate(Column& out, std::size_t k, const Rational& r) {
  if (r == 0) return;
  auto [it, inserted] = out.try_emplace(k, r);
  if (!inserted) {
    it->second += r;
    if (it->second == 0) out.erase(it);
  }
}

inline Column apply_letter(const Column& in, Letter l, std::size_t dim) {
  Column out;
  for (const auto& [k, r] : in) {
    if (l == Letter::Annihilation) {
      if (k > 0) accumulate(out, k - 1, r * Rational(static_cast<long long>(k)));
    } else if (k + 1 < dim) {
      accumulate(out, k + 1, r);
    }
  }
  return out;
}

/// c * a^dag^m a^n applied to a column.
inline void apply_normal(Column& out, const Column& in, OrderedMonomial mono, const Rational& c,
                         std::size_t dim) {
  for (const auto& [k, r] : in) {
    if (k < mono.ann) continue;
    const std::size_t target = k - mono.ann + mono.dag;
    if (target >= dim) continue;
    accumulate(out, target, c * r * Rational(falling_factorial(static_cast<unsigned>(k), mono.ann)));
  }
}

/// Normal-ordered terms with concrete coefficients.
using NormalTerms = std::vector<std::pair<OrderedMonomial, Rational>>;

inline NormalTerms normal_terms(const OrderedPolynomial& p) {
  if (p.ordering().is_symbolic()) throw UnboundSymbol(p.ordering().symbol().name());
  NormalTerms out;
  const OrderedPolynomial normal = convert_ordering(p, OrderingParam::normal());
  for (const auto& [mono, c] : normal.terms()) out.emplace_back(mono, to_rational(c));
  return out;
}

inline Column apply_terms(const Column& in, const NormalTerms& terms, std::size_t dim) {
  Column out;
  for (const auto& [mono, c] : terms) apply_normal(out, in, mono, c, dim);
  return out;
}

/// Rounds r * sqrt(k!/j!) to the nearest double once, from 50 digits.
inline double entry(const Rational& r, std::size_t k, std::size_t j) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  Float ratio = 1;
  for (std::size_t i = std::min(j, k) + 1; i <= std::max(j, k); ++i) ratio *= static_cast<double>(i);
  Float root = boost::multiprecision::sqrt(ratio);
  if (k < j) root = 1 / root;
  return static_cast<double>(Float(numerator_of(r)) / Float(denominator_of(r)) * root);
}

template <class Apply>
FockMatrix build(std::size_t dim, Apply&& apply) {
  FockMatrix m = FockMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const Column col = apply(Column{{j, Rational(1)}});
    for (const auto& [k, r] : col)
      m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = entry(r, k, j);
  }
  return m;
}

}  // namespace detail

// The realizations below equal the products of truncated ladder matrices,
// with each entry computed exactly and rounded once.

inline FockMatrix realize(const Word& w, std::size_t dim) {
  return detail::build(dim, [&](detail::Column col) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) col = detail::apply_letter(col, *it, dim);
    return col;
  });
}

/// Any concrete ordering; the polynomial is taken to normal order first.
inline FockMatrix realize(const OrderedPolynomial& p, std::size_t dim) {
  const auto terms = detail::normal_terms(p);
  return detail::build(dim, [&](const detail::Column& col) { return detail::apply_terms(col, terms, dim); });
}

inline FockMatrix realize(const Block& b, std::size_t dim) {
  return realize(OrderedPolynomial::monomial(b.mono, b.ordering), dim);
}

inline FockMatrix realize(const OperatorExpr& expr, std::size_t dim) {
  std::vector<std::vector<detail::NormalTerms>> factors;
  std::vector<Rational> coeffs;
  for (const auto& s : expr) {
    if (s.coeff.is_zero()) continue;
    coeffs.push_back(detail::to_rational(s.coeff));
    auto& f = factors.emplace_back();
    for (const auto& b : s.blocks) f.push_back(detail::normal_terms(OrderedPolynomial::monomial(b.mono, b.ordering)));
  }
  return detail::build(dim, [&](const detail::Column& col) {
    detail::Column out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      detail::Column c = col;
      for (auto it = factors[i].rbegin(); it != factors[i].rend(); ++it) c = detail::apply_terms(c, *it, dim);
      for (const auto& [k, r] : c) detail::accumulate(out, k, coeffs[i] * r);
    }
    return out;
  });
}

/// Largest letter count over the summands.
inline std::size_t degree(const OperatorExpr& expr) {
  std::size_t d = 0;
  for (const auto& s : expr) {
    if (s.coeff.is_zero()) continue;
    std::size_t n = 0;
    for (const auto& b : s.blocks) n += b.letters();
    d = std::max(d, n);
  }
  return d;
}

struct IdentityReport {
  double max_abs_diff = 0.0;
  std::size_t degree = 0;
  std::size_t dim = 0;
  std::size_t safe_size = 0;  // rows/cols compared: 0 .. safe_size-1
  double tolerance = kDefaultTolerance;
  bool pass = false;
};

/// Compares lhs and rhs entrywise on the block unaffected by truncation.
inline IdentityReport identity_check(const OperatorExpr& lhs, const OperatorExpr& rhs,
                                     std::size_t dim = kDefaultFockDim,
                                     double tol = kDefaultTolerance) {
  IdentityReport rep;
  rep.degree = std::max(degree(lhs), degree(rhs));
  rep.dim = dim;
  rep.tolerance = tol;
  if (dim == 0 || rep.degree > dim - 1) throw DegreeTooLarge(rep.degree, dim);
  rep.safe_size = dim - rep.degree;
  const FockMatrix diff = realize(lhs, dim) - realize(rhs, dim);
  const auto s = static_cast<Eigen::Index>(rep.safe_size);
  rep.max_abs_diff = diff.topLeftCorner(s, s).cwiseAbs().maxCoeff();
  rep.pass = rep.max_abs_diff <= tol;
  return rep;
}

inline IdentityReport identity_check(const OrderedPolynomial& lhs, const OrderedPolynomial& rhs,
                                     std::size_t dim = kDefaultFockDim,
                                     double tol = kDefaultTolerance) {
  return identity_check(to_expr(lhs), to_expr(rhs), dim, tol);
}

}  // namespace boson
