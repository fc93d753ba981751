#pragma once

#include "boson/errors.hpp"
#include "boson/got.hpp"
#include "boson/parser.hpp"

#include <map>
#include <vector>

namespace boson {

struct LowerLimits {
  std::size_t max_summands = 100000;
  std::size_t max_letters = 64;  // per summand
};

namespace detail {

using Lowered = std::map<std::vector<Block>, MultiPoly>;

inline void add_summand(Lowered& out, std::vector<Block> blocks, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(std::move(blocks), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

inline std::size_t letter_count(const std::vector<Block>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.letters();
  return n;
}

inline Lowered multiply(const Lowered& lhs, const Lowered& rhs, const LowerLimits& lim) {
  Lowered out;
  for (const auto& [bl, cl] : lhs) {
    for (const auto& [br, cr] : rhs) {
      std::vector<Block> blocks = bl;
      blocks.insert(blocks.end(), br.begin(), br.end());
      const std::size_t n = letter_count(blocks);
      if (n > lim.max_letters) throw SizeCap("letters per summand", n, lim.max_letters);
      add_summand(out, std::move(blocks), cl * cr);
      if (out.size() > lim.max_summands) throw SizeCap("summand count", out.size(), lim.max_summands);
    }
  }
  return out;
}

inline Lowered lower_node(const Ast& node, bool in_block, const LowerLimits& lim) {
  using Kind = Ast::Kind;
  Lowered out;
  switch (node.kind) {
    case Kind::ScalarLit: add_summand(out, {}, MultiPoly(node.scalar)); break;
    case Kind::SymbolRef: add_summand(out, {}, MultiPoly::variable(node.symbol)); break;
    case Kind::LetterRef:
      add_summand(out,
                  {Block{node.letter == Letter::Creation ? OrderedMonomial{1, 0} : OrderedMonomial{0, 1},
                         OrderingParam::normal()}},
                  MultiPoly(1));
      break;
    case Kind::Sum:
      for (const auto& child : node.children)
        for (const auto& [b, c] : lower_node(child, in_block, lim)) add_summand(out, b, c);
      break;
    case Kind::Product:
      add_summand(out, {}, MultiPoly(1));
      for (const auto& child : node.children) out = multiply(out, lower_node(child, in_block, lim), lim);
      break;
    case Kind::Power: {
      const Lowered base = lower_node(node.children.at(0), in_block, lim);
      add_summand(out, {}, MultiPoly(1));
      for (unsigned i = 0; i < node.exponent; ++i) out = multiply(out, base, lim);
      break;
    }
    case Kind::OrderedBlock: {
      if (in_block) throw NestingUnsupported();
      for (const auto& [blocks, c] : lower_node(node.children.at(0), true, lim)) {
        OrderedMonomial mono;
        for (const auto& b : blocks) {
          mono.dag += b.mono.dag;
          mono.ann += b.mono.ann;
        }
        if (mono.degree() == 0) {
          add_summand(out, {}, c);
        } else {
          add_summand(out, {Block{mono, node.ordering}}, c);
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace detail

/// Distributes sums, expands powers and flattens products into a list of
/// coefficient * block-product summands. Bare letters become single-letter
/// blocks; an ordered block contributes one block with its letter counts.
inline OperatorExpr lower(const Ast& ast, const LowerLimits& limits = {}) {
  OperatorExpr out;
  for (auto& [blocks, c] : detail::lower_node(ast, false, limits)) out.push_back(Summand{c, blocks});
  return out;
}

}  // namespace boson
