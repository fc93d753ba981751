#pragma once

// General ordering of products of s_j-ordered blocks into one t-ordered
// polynomial. Each contraction removes one a^dag/a pair and contributes
// (t - u) / 2, where u is s_j for a pair inside block j, +1 when the a^dag
// stands left of the a across blocks and -1 when the a stands left.

#include "boson/errors.hpp"
#include "boson/multipoly.hpp"
#include "boson/operators.hpp"
#include "boson/rational.hpp"

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace boson {

struct Block {
  OrderedMonomial mono;
  OrderingParam ordering;

  std::size_t letters() const noexcept { return mono.dag + mono.ann; }

  friend bool operator==(const Block& a, const Block& b) {
    return a.mono == b.mono && a.ordering == b.ordering;
  }
  friend bool operator<(const Block& a, const Block& b) {
    if (a.mono != b.mono) return a.mono < b.mono;
    return a.ordering < b.ordering;
  }
};

/// Product of ordered blocks, left to right, to be rewritten in `target`
/// ordering. An empty block list stands for the identity.
struct BlockSequence {
  std::vector<Block> blocks;
  OrderingParam target;

  std::size_t letters() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.letters();
    return n;
  }
  int excess() const {
    int e = 0;
    for (const auto& b : blocks) e += b.mono.excess();
    return e;
  }
};

enum class RelativeOrder { SameBlock, CreationFirst, AnnihilationFirst };

struct ContractionPair {
  std::size_t creation_pos = 0;
  std::size_t annihilation_pos = 0;
  RelativeOrder relative = RelativeOrder::SameBlock;
  OrderingParam block_ordering;  // s_j; meaningful for SameBlock only
};

struct ContractionSet {
  std::vector<ContractionPair> pairs;
};

struct GotOptions {
  std::size_t letter_cap = 20;
};

/// (t - u) / 2 with u = s_j, +1 or -1 by the pair's relative order.
inline MultiPoly contraction_factor(RelativeOrder relative, const OrderingParam& block_ordering,
                                    const OrderingParam& target) {
  MultiPoly u;
  switch (relative) {
    case RelativeOrder::SameBlock: u = block_ordering.as_poly(); break;
    case RelativeOrder::CreationFirst: u = MultiPoly(1); break;
    case RelativeOrder::AnnihilationFirst: u = MultiPoly(-1); break;
  }
  return (target.as_poly() - u) * MultiPoly(Rational(1, 2));
}

inline MultiPoly contraction_factor(const ContractionPair& pair, const OrderingParam& target) {
  return contraction_factor(pair.relative, pair.block_ordering, target);
}

namespace detail {

inline void check_cap(const BlockSequence& seq, const GotOptions& opts) {
  const std::size_t n = seq.letters();
  if (n > opts.letter_cap) throw SizeCap("letter count", n, opts.letter_cap);
}

struct LetterSite {
  std::size_t block;
  std::size_t pos;
};

}  // namespace detail

/// Letter-level enumeration: every letter is distinct (no symmetry
/// division), block j contributes its a^dag letters then its a letters.
/// Calls visit(const ContractionSet&, const MultiPoly& weight, OrderedMonomial
/// survivors) for every contraction set; sets containing a vanishing pair are
/// skipped when skip_vanishing is true.
template <class Visitor>
void for_each_contraction_set(const BlockSequence& seq, Visitor&& visit,
                              bool skip_vanishing = true, const GotOptions& opts = {}) {
  detail::check_cap(seq, opts);
  std::vector<detail::LetterSite> creations, annihilations;
  std::size_t pos = 0;
  for (std::size_t j = 0; j < seq.blocks.size(); ++j) {
    for (unsigned i = 0; i < seq.blocks[j].mono.dag; ++i) creations.push_back({j, pos++});
    for (unsigned i = 0; i < seq.blocks[j].mono.ann; ++i) annihilations.push_back({j, pos++});
  }
  const auto total_dag = static_cast<unsigned>(creations.size());
  const auto total_ann = static_cast<unsigned>(annihilations.size());

  std::vector<bool> used(creations.size(), false);
  ContractionSet current;
  MultiPoly weight(1);

  auto recurse = [&](auto&& self, std::size_t ai) -> void {
    if (ai == annihilations.size()) {
      const auto k = static_cast<unsigned>(current.pairs.size());
      visit(static_cast<const ContractionSet&>(current), static_cast<const MultiPoly&>(weight),
            OrderedMonomial{total_dag - k, total_ann - k});
      return;
    }
    self(self, ai + 1);  // annihilation letter left uncontracted
    const auto& an = annihilations[ai];
    for (std::size_t ci = 0; ci < creations.size(); ++ci) {
      if (used[ci]) continue;
      const auto& cr = creations[ci];
      ContractionPair pair{cr.pos, an.pos, RelativeOrder::SameBlock,
                           seq.blocks[cr.block].ordering};
      if (cr.block < an.block) pair.relative = RelativeOrder::CreationFirst;
      if (cr.block > an.block) pair.relative = RelativeOrder::AnnihilationFirst;
      MultiPoly f = contraction_factor(pair, seq.target);
      if (skip_vanishing && f.is_zero()) continue;
      MultiPoly saved = weight;
      weight *= f;
      used[ci] = true;
      current.pairs.push_back(pair);
      self(self, ai + 1);
      current.pairs.pop_back();
      used[ci] = false;
      weight = std::move(saved);
    }
  };
  recurse(recurse, 0);
}

/// Straightforward sum over all contraction sets. Exponential; used as the
/// reference for got_transform.
inline OrderedPolynomial got_transform_reference(const BlockSequence& seq,
                                                 const GotOptions& opts = {}) {
  OrderedPolynomial out(seq.target);
  for_each_contraction_set(
      seq,
      [&](const ContractionSet&, const MultiPoly& w, OrderedMonomial rest) {
        out.add_term(rest, w);
      },
      true, opts);
  return out;
}

namespace detail {

// Dynamic program over blocks. State: (p, q, m, n) where p counts a^dag
// letters reserved for an a in a later block, q counts a letters reserved
// for a later a^dag, and (m, n) the surviving letters. Reserved letters are
// distinct, so closing x of them from p costs p!/(p-x)! assignments.
struct DpKey {
  unsigned p, q, m, n;
  auto operator<=>(const DpKey&) const = default;
};

// With `indicator`, every nonvanishing factor is replaced by 1 and every
// vanishing one by 0, so the weights count contraction sets.
inline std::map<DpKey, MultiPoly> contraction_dp(const BlockSequence& seq, bool indicator) {
  const MultiPoly f_cf = contraction_factor(RelativeOrder::CreationFirst, {}, seq.target);
  const MultiPoly f_af = contraction_factor(RelativeOrder::AnnihilationFirst, {}, seq.target);
  auto adjust = [&](const MultiPoly& f) {
    return indicator ? MultiPoly(f.is_zero() ? 0 : 1) : f;
  };
  const MultiPoly w_cf = adjust(f_cf), w_af = adjust(f_af);

  // Letters remaining to the right of each block.
  const std::size_t nb = seq.blocks.size();
  std::vector<unsigned> dag_after(nb + 1, 0), ann_after(nb + 1, 0);
  for (std::size_t j = nb; j-- > 0;) {
    dag_after[j] = dag_after[j + 1] + seq.blocks[j].mono.dag;
    ann_after[j] = ann_after[j + 1] + seq.blocks[j].mono.ann;
  }

  auto powers = [](const MultiPoly& f, unsigned k) {
    std::vector<MultiPoly> out{MultiPoly(1)};
    for (unsigned i = 1; i <= k; ++i) out.push_back(out.back() * f);
    return out;
  };

  std::map<DpKey, MultiPoly> states{{DpKey{0, 0, 0, 0}, MultiPoly(1)}};
  for (std::size_t j = 0; j < nb; ++j) {
    const auto& block = seq.blocks[j];
    const unsigned M = block.mono.dag, N = block.mono.ann;
    const MultiPoly w_in =
        adjust(contraction_factor(RelativeOrder::SameBlock, block.ordering, seq.target));
    const auto pin = powers(w_in, std::min(M, N));
    const auto pcf = powers(w_cf, N);
    const auto paf = powers(w_af, M);

    std::map<DpKey, MultiPoly> next;
    for (const auto& [key, w] : states) {
      for (unsigned c = 0; c <= std::min(M, N); ++c) {
        if (pin[c].is_zero()) break;
        const Integer mult_c = binomial(M, c) * binomial(N, c) * factorial(c);
        for (unsigned x = 0; x <= std::min(N - c, key.p); ++x) {
          if (pcf[x].is_zero()) break;
          const Integer mult_x = binomial(N - c, x) * falling_factorial(key.p, x);
          for (unsigned y = 0; y <= std::min(M - c, key.q); ++y) {
            if (paf[y].is_zero()) break;
            const Integer mult_y = binomial(M - c, y) * falling_factorial(key.q, y);
            const MultiPoly base =
                w * pin[c] * pcf[x] * paf[y] * MultiPoly(Rational(mult_c * mult_x * mult_y));
            const unsigned rest_dag = M - c - y, rest_ann = N - c - x;
            for (unsigned o1 = 0; o1 <= rest_dag; ++o1) {
              const unsigned p = key.p - x + o1;
              if (p > ann_after[j + 1]) break;
              for (unsigned o2 = 0; o2 <= rest_ann; ++o2) {
                const unsigned q = key.q - y + o2;
                if (q > dag_after[j + 1]) break;
                const Integer mult_o = binomial(rest_dag, o1) * binomial(rest_ann, o2);
                DpKey nk{p, q, key.m + rest_dag - o1, key.n + rest_ann - o2};
                next[nk] += base * MultiPoly(Rational(mult_o));
              }
            }
          }
        }
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    states = std::move(next);
  }
  std::erase_if(states, [](const auto& kv) { return kv.first.p != 0 || kv.first.q != 0; });
  return states;
}

}  // namespace detail

/// Rewrites the block product in the target ordering. Polynomial-time
/// dynamic program; agrees term by term with got_transform_reference.
inline OrderedPolynomial got_transform(const BlockSequence& seq, const GotOptions& opts = {}) {
  detail::check_cap(seq, opts);
  OrderedPolynomial out(seq.target);
  for (const auto& [key, w] : detail::contraction_dp(seq, false))
    out.add_term(OrderedMonomial{key.m, key.n}, w);
  return out;
}

/// Number of i-pair contraction sets whose factors are all nonzero at the
/// sequence's target ordering.
inline Integer count_contraction_sets(const BlockSequence& seq, unsigned pairs,
                                      const GotOptions& opts = {}) {
  detail::check_cap(seq, opts);
  unsigned total_dag = 0;
  for (const auto& b : seq.blocks) total_dag += b.mono.dag;
  if (pairs > total_dag) return 0;
  Integer count = 0;
  for (const auto& [key, w] : detail::contraction_dp(seq, true))
    if (key.m + pairs == total_dag) count += numerator_of(w.constant_term());
  return count;
}

/// {a^dag^m a^n}_s = sum_k k! C(m,k) C(n,k) ((t - s)/2)^k {a^dag^(m-k) a^(n-k)}_t
inline OrderedPolynomial convert_ordering(const OrderedPolynomial& p, const OrderingParam& target) {
  if (p.ordering() == target) return p;
  const MultiPoly half_gap =
      (target.as_poly() - p.ordering().as_poly()) * MultiPoly(Rational(1, 2));
  OrderedPolynomial out(target);
  for (const auto& [mono, c] : p.terms()) {
    MultiPoly gap_power(1);
    for (unsigned k = 0; k <= std::min(mono.dag, mono.ann); ++k) {
      const Integer mult = factorial(k) * binomial(mono.dag, k) * binomial(mono.ann, k);
      out.add_term({mono.dag - k, mono.ann - k}, c * gap_power * MultiPoly(Rational(mult)));
      gap_power *= half_gap;
      if (gap_power.is_zero()) break;
    }
  }
  return out;
}

/// One summand of a lowered operator expression: coefficient times a block
/// product. No blocks means the coefficient times the identity.
struct Summand {
  MultiPoly coeff;
  std::vector<Block> blocks;
};

using OperatorExpr = std::vector<Summand>;

/// Every summand rewritten in `target` ordering and added up.
inline OrderedPolynomial order_expression(const OperatorExpr& expr, const OrderingParam& target,
                                          const GotOptions& opts = {}) {
  OrderedPolynomial out(target);
  for (const auto& s : expr) {
    if (s.coeff.is_zero()) continue;
    out += s.coeff * got_transform(BlockSequence{s.blocks, target}, opts);
  }
  return out;
}

inline OperatorExpr to_expr(const OrderedPolynomial& p) {
  OperatorExpr out;
  for (const auto& [m, c] : p.terms()) {
    Summand s{c, {}};
    if (m.degree() > 0) s.blocks.push_back(Block{m, p.ordering()});
    out.push_back(std::move(s));
  }
  return out;
}

/// Each letter becomes its own block; a lone letter is ordered under any s.
inline std::vector<Block> letter_blocks(const Word& w) {
  std::vector<Block> blocks;
  for (Letter l : w.letters)
    blocks.push_back(Block{l == Letter::Creation ? OrderedMonomial{1, 0} : OrderedMonomial{0, 1},
                           OrderingParam::normal()});
  return blocks;
}

inline OperatorExpr to_expr(const Word& w, const MultiPoly& coeff = MultiPoly(1)) {
  return {Summand{coeff, letter_blocks(w)}};
}

}  // namespace boson
