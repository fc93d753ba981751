#pragma once

// Ground-truth normal / anti-normal ordering by exhaustive commutator
// rewriting, a a^dag -> a^dag a + 1 (or a^dag a -> a a^dag - 1). Slow on
// purpose: every other route in the library is checked against it.

#include "boson/errors.hpp"
#include "boson/operators.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

namespace boson {

enum class RewriteStrategy { Leftmost, Rightmost, Random };

struct RewriteOptions {
  RewriteStrategy strategy = RewriteStrategy::Leftmost;
  std::uint64_t seed = 0;  // used by Random
  std::size_t length_cap = 24;
};

namespace detail {

// Words of up to 64 letters; bit i set <=> letter i (from the left) is a^dag.
struct PackedWord {
  unsigned length;
  std::uint64_t bits;
};

inline bool is_creation(std::uint64_t bits, unsigned i) { return (bits >> i) & 1u; }

// Pairs i < j that violate the target order.
inline unsigned count_inversions(const PackedWord& w, bool normal_target) {
  unsigned inv = 0, seen = 0;
  for (unsigned i = 0; i < w.length; ++i) {
    const bool c = is_creation(w.bits, i);
    // normal: every (a ... a^dag) pair is out of order
    if (normal_target ? c : !c) {
      inv += seen;
    } else {
      ++seen;
    }
  }
  return inv;
}

inline std::uint64_t delete_pair(std::uint64_t bits, unsigned i) {
  const std::uint64_t low = bits & ((std::uint64_t{1} << i) - 1);
  const std::uint64_t high = i + 2 >= 64 ? 0 : bits >> (i + 2);
  return low | (high << i);
}

/// Returns (m, n) -> integer coefficient of the canonical form of `word`.
inline std::map<OrderedMonomial, Integer> rewrite_word(const Word& word, bool normal_target,
                                                       const RewriteOptions& opts) {
  const std::size_t cap = std::min<std::size_t>(opts.length_cap, 64);
  if (word.size() > cap) throw LengthCap(word.size(), cap);

  PackedWord start{static_cast<unsigned>(word.size()), 0};
  for (unsigned i = 0; i < start.length; ++i)
    if (word.letters[i] == Letter::Creation) start.bits |= std::uint64_t{1} << i;

  // Every rewrite lowers (length, inversions), so draining the largest key
  // first touches each distinct word exactly once.
  using Key = std::tuple<unsigned, unsigned, std::uint64_t>;
  std::map<Key, Integer, std::greater<>> pending;
  pending.emplace(Key{start.length, count_inversions(start, normal_target), start.bits}, 1);

  std::mt19937_64 rng(opts.seed);
  std::map<OrderedMonomial, Integer> result;
  std::vector<unsigned> sites;

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const auto [len, inv, bits] = node.key();
    const Integer& c = node.mapped();
    if (c == 0) continue;
    if (inv == 0) {
      const auto dag = static_cast<unsigned>(std::popcount(bits));
      auto& slot = result[OrderedMonomial{dag, len - dag}];
      slot += c;
      continue;
    }
    sites.clear();
    for (unsigned i = 0; i + 1 < len; ++i) {
      const bool left = is_creation(bits, i), right = is_creation(bits, i + 1);
      if (normal_target ? (!left && right) : (left && !right)) sites.push_back(i);
    }
    unsigned i = sites.front();
    if (opts.strategy == RewriteStrategy::Rightmost) {
      i = sites.back();
    } else if (opts.strategy == RewriteStrategy::Random) {
      i = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    }

    // Adjacent swap: exactly one inversion fewer.
    const std::uint64_t swapped = bits ^ (std::uint64_t{3} << i);
    pending[Key{len, inv - 1, swapped}] += c;

    // Commutator remainder: the pair disappears, sign + for a a^dag, - for a^dag a.
    PackedWord shorter{len - 2, delete_pair(bits, i)};
    Integer& slot = pending[Key{shorter.length, count_inversions(shorter, normal_target), shorter.bits}];
    if (normal_target) {
      slot += c;
    } else {
      slot -= c;
    }
  }
  std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
  return result;
}

inline OrderedPolynomial to_polynomial(const std::map<OrderedMonomial, Integer>& counts,
                                       OrderingParam ordering, const MultiPoly& scale) {
  OrderedPolynomial p(std::move(ordering));
  for (const auto& [m, c] : counts) p.add_term(m, scale * MultiPoly(Rational(c)));
  return p;
}

}  // namespace detail

/// Canonical normal-ordered form (ordering +1) of a word.
inline OrderedPolynomial word_normal_order(const Word& w, const RewriteOptions& opts = {}) {
  return detail::to_polynomial(detail::rewrite_word(w, true, opts), OrderingParam::normal(), 1);
}

/// Canonical anti-normal form (ordering -1): all a left of all a^dag.
inline OrderedPolynomial word_antinormal_order(const Word& w, const RewriteOptions& opts = {}) {
  return detail::to_polynomial(detail::rewrite_word(w, false, opts),
                               OrderingParam::anti_normal(), 1);
}

/// Linear extension of the rewriters. `target` must be +1 or -1.
inline OrderedPolynomial expr_combine(std::span<const std::pair<MultiPoly, Word>> terms,
                                      const OrderingParam& target,
                                      const RewriteOptions& opts = {}) {
  if (!target.is_normal() && !target.is_anti_normal())
    throw UnsupportedOrdering("rewriting targets only normal (+1) or anti-normal (-1), got " +
                              target.to_string());
  const bool normal = target.is_normal();
  OrderedPolynomial out(target);
  for (const auto& [c, w] : terms) {
    if (c.is_zero()) continue;
    out += detail::to_polynomial(detail::rewrite_word(w, normal, opts), target, c);
  }
  return out;
}

/// <0| p |0> for a normal (+1) or anti-normal (-1) polynomial.
inline MultiPoly vacuum_expectation(const OrderedPolynomial& p) {
  if (p.ordering().is_normal()) return p.coefficient(0, 0);
  if (!p.ordering().is_anti_normal())
    throw UnsupportedOrdering("vacuum expectation needs ordering +1 or -1, got " +
                              p.ordering().to_string());
  MultiPoly sum;
  for (const auto& [m, c] : p.terms())
    if (m.dag == m.ann) sum += MultiPoly(Rational(factorial(m.dag))) * c;
  return sum;
}

}  // namespace boson
