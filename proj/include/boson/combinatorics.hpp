#pragma once

#include "boson/multipoly.hpp"
#include "boson/rational.hpp"
#include "boson/series.hpp"

#include <mutex>
#include <vector>

namespace boson {

/// Triangle of Stirling numbers of the second kind S(n, k), 0 <= k <= n,
/// filled by S(n+1, k) = k S(n, k) + S(n, k-1).
class StirlingTable {
 public:
  explicit StirlingTable(unsigned max_n = 0) { extend(max_n); }

  unsigned max_n() const noexcept { return static_cast<unsigned>(rows_.size() - 1); }

  void extend(unsigned max_n) {
    if (rows_.empty()) rows_.push_back({Integer(1)});
    while (rows_.size() <= max_n) {
      const auto& prev = rows_.back();
      const unsigned n = static_cast<unsigned>(prev.size());  // new row index
      std::vector<Integer> row(n + 1, Integer(0));
      for (unsigned k = 1; k <= n; ++k) {
        Integer v = prev[k - 1];
        if (k < prev.size()) v += Integer(k) * prev[k];
        row[k] = v;
      }
      rows_.push_back(std::move(row));
    }
  }

  /// Zero when k > n. n must not exceed max_n().
  const Integer& operator()(unsigned n, unsigned k) const {
    static const Integer zero = 0;
    if (k > n) return zero;
    return rows_.at(n)[k];
  }

  const std::vector<Integer>& row(unsigned n) const { return rows_.at(n); }

 private:
  std::vector<std::vector<Integer>> rows_;
};

namespace detail {
inline std::vector<Integer> stirling_row(unsigned n) {
  static std::mutex mutex;
  static StirlingTable table;
  std::lock_guard lock(mutex);
  if (table.max_n() < n) table.extend(n);
  return table.row(n);
}
}  // namespace detail

/// Number of partitions of an n-set into k nonempty blocks.
inline Integer stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  return detail::stirling_row(n)[k];
}

/// B(n, x) = sum_k S(n, k) x^k, with B(0, x) = 1.
struct BellPoly {
  unsigned n = 0;
  std::vector<Integer> coeffs;  // coeffs[k] = S(n, k)

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto k = coeffs.size(); k-- > 0;) acc = acc * x + Rational(coeffs[k]);
    return acc;
  }

  /// The polynomial with x replaced by the given value.
  MultiPoly substitute(const MultiPoly& x) const {
    MultiPoly acc;
    for (auto k = coeffs.size(); k-- > 0;) acc = acc * x + MultiPoly(Rational(coeffs[k]));
    return acc;
  }

  MultiPoly in_symbol(const std::string& name) const {
    return substitute(MultiPoly::variable(name));
  }
};

inline BellPoly bell_poly(unsigned n) { return BellPoly{n, detail::stirling_row(n)}; }

/// G(x, lambda) = exp((e^lambda - 1) x) truncated at `order`; n! times the
/// lambda^n coefficient equals B(n, x).
inline FormalSeries bell_generating_series(const MultiPoly& x, unsigned order) {
  FormalSeries shifted = FormalSeries::exp_linear(1, order) - FormalSeries::one(order);
  return exp(x * shifted);
}

}  // namespace boson
