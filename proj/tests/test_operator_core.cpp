#include "test_support.hpp"

#include <catch_amalgamated.hpp>

using namespace boson;
using namespace boson::testing;

namespace {

OrderedPolynomial normal_poly(std::initializer_list<std::tuple<unsigned, unsigned, Rational>> terms) {
  OrderedPolynomial p(OrderingParam::normal());
  for (const auto& [m, n, c] : terms) p.add_term({m, n}, MultiPoly(c));
  return p;
}

OrderedPolynomial anti_poly(std::initializer_list<std::tuple<unsigned, unsigned, Rational>> terms) {
  OrderedPolynomial p(OrderingParam::anti_normal());
  for (const auto& [m, n, c] : terms) p.add_term({m, n}, MultiPoly(c));
  return p;
}

}  // namespace

TEST_CASE("ordering parameter", "[operator-core]") {
  CHECK(OrderingParam::normal().is_normal());
  CHECK(OrderingParam::anti_normal().is_anti_normal());
  CHECK(OrderingParam::weyl().value() == 0);
  CHECK_THROWS_AS(OrderingParam::concrete(Rational(3, 2)), InvalidOrdering);
  const auto s = OrderingParam::symbolic("s");
  CHECK(s.is_symbolic());
  CHECK(s.as_poly() == MultiPoly::variable("s"));
  CHECK(s.specialized({{"s", Rational(-1)}}).is_anti_normal());
  CHECK(s.specialized({{"t", Rational(-1)}}) == s);
}

TEST_CASE("word_normal_order examples", "[operator-core]") {
  CHECK(word_normal_order(Word::parse("a ad")) == normal_poly({{1, 1, 1}, {0, 0, 1}}));
  CHECK(word_normal_order(number_power_word(2)) == normal_poly({{2, 2, 1}, {1, 1, 1}}));
  CHECK(word_normal_order(Word::parse("a a ad ad")) == normal_poly({{2, 2, 1}, {1, 1, 4}, {0, 0, 2}}));
  CHECK(word_normal_order(Word{}) == normal_poly({{0, 0, 1}}));
}

TEST_CASE("word_antinormal_order examples", "[operator-core]") {
  CHECK(word_antinormal_order(Word::parse("ad a")) == anti_poly({{1, 1, 1}, {0, 0, -1}}));
  CHECK(word_antinormal_order(number_power_word(2)) == anti_poly({{2, 2, 1}, {1, 1, -3}, {0, 0, 1}}));
  CHECK(word_antinormal_order(Word{}) == anti_poly({{0, 0, 1}}));
}

TEST_CASE("rewriting caps word length", "[operator-core]") {
  RewriteOptions opts;
  opts.length_cap = 6;
  CHECK_THROWS_AS(word_normal_order(Word::parse("a ad").pow(4), opts), LengthCap);
  CHECK_NOTHROW(word_normal_order(Word::parse("a ad").pow(3), opts));
  CHECK_THROWS_AS(word_normal_order(Word::parse("a").pow(25)), LengthCap);
}

TEST_CASE("expr_combine examples", "[operator-core]") {
  const std::vector<std::pair<MultiPoly, Word>> commutator{{MultiPoly(2), Word::parse("a ad")},
                                                           {MultiPoly(-2), Word::parse("ad a")}};
  CHECK(expr_combine(commutator, OrderingParam::normal()) == normal_poly({{0, 0, 2}}));

  const std::vector<std::pair<MultiPoly, Word>> zero{
      {MultiPoly(1), Word::parse("a ad")}, {MultiPoly(-1), Word::parse("ad a")}, {MultiPoly(-1), Word{}}};
  CHECK(expr_combine(zero, OrderingParam::normal()).is_zero());
  CHECK(expr_combine(zero, OrderingParam::anti_normal()).is_zero());

  const std::vector<std::pair<MultiPoly, Word>> three{{MultiPoly(3), Word{}}};
  CHECK(expr_combine(three, OrderingParam::normal()) == normal_poly({{0, 0, 3}}));

  CHECK_THROWS_AS(expr_combine(three, OrderingParam::weyl()), UnsupportedOrdering);
}

TEST_CASE("vacuum_expectation examples", "[operator-core]") {
  CHECK(vacuum_expectation(word_normal_order(Word::parse("a ad"))) == MultiPoly(1));
  for (unsigned n = 1; n <= 5; ++n) CHECK(vacuum_expectation(word_normal_order(number_power_word(n))).is_zero());
  CHECK(vacuum_expectation(word_antinormal_order(Word::parse("a a ad ad"))) == MultiPoly(2));
  CHECK_THROWS_AS(vacuum_expectation(OrderedPolynomial(OrderingParam::weyl())), UnsupportedOrdering);
}

TEST_CASE("normal form matches Fock matrices for all words up to length 6", "[operator-core][property]") {
  const std::size_t dim = 32;
  for (std::size_t len = 0; len <= 6; ++len) {
    for (const auto& w : all_words(len)) {
      const auto rep = identity_check(to_expr(w), to_expr(word_normal_order(w)), dim, 1e-9);
      CHECK(rep.pass);
      const auto rep2 = identity_check(to_expr(w), to_expr(word_antinormal_order(w)), dim, 1e-9);
      CHECK(rep2.pass);
    }
  }
}

TEST_CASE("grading: every term keeps the word's excess", "[operator-core][property]") {
  for (std::size_t len = 0; len <= 8; ++len) {
    for (const auto& w : all_words(len)) {
      const int excess = static_cast<int>(w.creations()) - static_cast<int>(w.annihilations());
      for (const auto& p : {word_normal_order(w), word_antinormal_order(w)})
        for (const auto& [m, c] : p.terms()) CHECK(m.excess() == excess);
    }
  }
}

TEST_CASE("vacuum expectation agrees between the two canonical forms", "[operator-core][property]") {
  for (std::size_t len = 0; len <= 8; ++len)
    for (const auto& w : all_words(len))
      CHECK(vacuum_expectation(word_normal_order(w)) == vacuum_expectation(word_antinormal_order(w)));
}

TEST_CASE("rewriting is confluent under random strategies", "[operator-core][property]") {
  Rng rng(7);
  for (int i = 0; i < 150; ++i) {
    const Word w = random_word(rng, std::uniform_int_distribution<std::size_t>(0, 8)(rng));
    const auto reference_n = word_normal_order(w);
    const auto reference_a = word_antinormal_order(w);
    for (auto strategy : {RewriteStrategy::Rightmost, RewriteStrategy::Random}) {
      RewriteOptions opts;
      opts.strategy = strategy;
      opts.seed = rng();
      CHECK(word_normal_order(w, opts) == reference_n);
      CHECK(word_antinormal_order(w, opts) == reference_a);
    }
  }
}

TEST_CASE("ordered polynomials refuse mixed orderings", "[operator-core]") {
  OrderedPolynomial n = normal_poly({{1, 1, 1}});
  CHECK_THROWS_AS(n + anti_poly({{1, 1, 1}}), InvalidOrdering);
  CHECK((n - n).is_zero());
  const auto sym = OrderedPolynomial::monomial({1, 1}, OrderingParam::symbolic("s"), MultiPoly::variable("t"));
  const auto concrete = sym.specialized({{"s", Rational(1)}, {"t", Rational(3)}});
  CHECK(concrete == normal_poly({{1, 1, 3}}));
}
