#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace boson;
using namespace boson::testing;

namespace {

bool mentions(const std::vector<std::string>& expected, const std::string& token) {
  return std::find(expected.begin(), expected.end(), token) != expected.end();
}

SyntaxError syntax_error_of(std::string_view input) {
  try {
    parse(input);
  } catch (const SyntaxError& e) {
    return e;
  }
  FAIL("no SyntaxError for '" << input << "'");
  throw std::logic_error("unreachable");
}

OrderedPolynomial reparse(const std::string& text, const OrderingParam& target) {
  return order_expression(lower(parse(text)), target);
}

OrderedPolynomial random_ordered_poly(Rng& rng, const OrderingParam& ordering) {
  OrderedPolynomial p(ordering);
  std::uniform_int_distribution<unsigned> deg(0, 3), count(0, 4);
  for (unsigned i = count(rng); i > 0; --i) p.add_term({deg(rng), deg(rng)}, random_poly(rng, {"s", "t"}, 2, 2));
  return p;
}

std::string random_token_string(Rng& rng) {
  static const std::vector<std::string> tokens{"a",   "ad", "a\xE2\x80\xA0", "+", "-", "*", "^", "2",  "1/2", "(",
                                               ")",   "N[", "A[",            "W[", "S[", ";", "]", "s",  "x",   " ",
                                               "-1/2", "0", "/",             "[",  "3"};
  std::string out;
  const auto n = std::uniform_int_distribution<int>(0, 12)(rng);
  for (int i = 0; i < n; ++i) out += tokens[std::uniform_int_distribution<std::size_t>(0, tokens.size() - 1)(rng)];
  return out;
}

}  // namespace

TEST_CASE("parse examples", "[expr-frontend]") {
  CHECK(parse("ad a").to_string() == "Product[LetterRef(ad), LetterRef(a)]");
  CHECK(parse("a\xE2\x80\xA0 a") == parse("ad a"));
  CHECK(parse("S[s; ad a]").to_string() == "OrderedBlock(Product[LetterRef(ad), LetterRef(a)], s)");
  CHECK(parse("S[-1/2; a]").to_string() == "OrderedBlock(LetterRef(a), -1/2)");
  CHECK(parse("N[a ad]").to_string() == "OrderedBlock(Product[LetterRef(a), LetterRef(ad)], 1)");
  CHECK(parse("(a + ad)^2").to_string() == "Power(Sum[LetterRef(a), LetterRef(ad)], 2)");
  CHECK(parse("a ad - ad a").to_string() ==
        "Sum[Product[LetterRef(a), LetterRef(ad)], Product[ScalarLit(-1), LetterRef(ad), LetterRef(a)]]");
  CHECK(parse("3/6 * t").to_string() == "Product[ScalarLit(1/2), SymbolRef(t)]");
}

TEST_CASE("syntax errors carry offset and expected tokens", "[expr-frontend]") {
  auto e = syntax_error_of("a +");
  CHECK(e.offset() == 3);
  CHECK(mentions(e.expected(), "'a'"));

  e = syntax_error_of("ad a )");
  CHECK(e.offset() == 5);
  CHECK(mentions(e.expected(), "end of input"));

  e = syntax_error_of("S[2; a]");
  CHECK(e.offset() == 2);
  CHECK(mentions(e.expected(), "rational in [-1, 1]"));

  e = syntax_error_of("X[a]");
  CHECK(e.offset() == 0);

  e = syntax_error_of("1/0");
  CHECK(e.offset() == 2);

  e = syntax_error_of("N[a");
  CHECK(e.offset() == 3);
  CHECK(mentions(e.expected(), "']'"));

  e = syntax_error_of("");
  CHECK(e.offset() == 0);

  CHECK_THROWS_AS(parse("a^5000"), SyntaxError);
  CHECK_THROWS_AS(parse(std::string(500, '(') + "a" + std::string(500, ')')), SyntaxError);
  CHECK_THROWS_AS(parse("S[a; ad]"), SyntaxError);
}

TEST_CASE("lower examples", "[expr-frontend]") {
  const auto sq = lower(parse("(a + ad)^2"));
  CHECK(sq.size() == 4);
  for (const auto& s : sq) {
    CHECK(s.coeff == MultiPoly(1));
    CHECK(s.blocks.size() == 2);
  }

  const auto scaled = lower(parse("2 S[s; ad a]"));
  REQUIRE(scaled.size() == 1);
  CHECK(scaled[0].coeff == MultiPoly(2));
  REQUIRE(scaled[0].blocks.size() == 1);
  CHECK(scaled[0].blocks[0] == Block{{1, 1}, OrderingParam::symbolic("s")});

  CHECK(lower(parse("a ad - a ad")).empty());
  CHECK(lower(parse("N[1]")).size() == 1);
  CHECK_THROWS_AS(lower(parse("N[ad N[a]]")), NestingUnsupported);
  CHECK_THROWS_AS(lower(parse("a^65")), SizeCap);
  LowerLimits tight;
  tight.max_summands = 10;
  CHECK_THROWS_AS(lower(parse("(a + ad)^4"), tight), SizeCap);
}

TEST_CASE("parsed expressions order correctly", "[expr-frontend]") {
  CHECK(reparse("a ad - ad a", OrderingParam::normal()) == OrderedPolynomial::scalar(1, OrderingParam::normal()));
  CHECK(reparse("a a ad ad", OrderingParam::normal()) == word_normal_order(Word::parse("a a ad ad")));
  CHECK(reparse("(ad a)^4", OrderingParam::anti_normal()) == number_power_antinormal(4));
  // Letters inside a block commute freely.
  CHECK(reparse("N[a ad]", OrderingParam::normal()) == OrderedPolynomial::monomial({1, 1}, OrderingParam::normal()));
  const auto sq = reparse("(ad a)^2", OrderingParam::symbolic("s"));
  CHECK(format(sq) == "S[s; ad^2 a^2 + (2*s + (-1)) ad a + ((1/2)*s^2 + (-1/2)*s)]");
}

TEST_CASE("format examples", "[expr-frontend]") {
  CHECK(format(OrderedPolynomial(OrderingParam::normal())) == "0");
  CHECK(format(word_normal_order(Word::parse("a ad"))) == "N[ad a + 1]");
  CHECK(format(word_normal_order(Word::parse("a a ad"))) == "N[ad a^2 + 2 a]");
  CHECK(format(word_antinormal_order(Word::parse("ad ad a"))) == "A[ad^2 a + (-2) ad]");

  OrderedPolynomial p = word_antinormal_order(Word::parse("a ad"));
  p -= OrderedPolynomial::scalar(1, OrderingParam::anti_normal());
  CHECK(format(p, Style::Json) ==
        R"({"schema":"boson-order/1","ordering":-1,"terms":[{"m":1,"n":1,"coeff":"1"},{"m":0,"n":0,"coeff":"-1"}]})");

  CHECK(format(word_normal_order(Word::parse("a a ad")), Style::Latex) == ":a^{\\dagger} a^{2}: + 2 :a:");
  CHECK(format(word_antinormal_order(Word::parse("ad ad a")), Style::Latex) ==
        "\\vdots a a^{\\dagger 2} \\vdots - 2 \\vdots a^{\\dagger} \\vdots");
  const auto half = convert_ordering(word_normal_order(Word::parse("a a ad")), OrderingParam::concrete(Rational(-1, 2)));
  CHECK(format(half, Style::Latex) == "\\{a^{\\dagger} a^{2}\\}_{-\\frac{1}{2}} + \\frac{1}{2} \\{a\\}_{-\\frac{1}{2}}");
  CHECK(format(half, Style::Json) ==
        R"({"schema":"boson-order/1","ordering":"-1/2","terms":[{"m":1,"n":2,"coeff":"1"},{"m":0,"n":1,"coeff":"1/2"}]})");
}

TEST_CASE("series formatting", "[expr-frontend]") {
  CHECK(format(exp_number_normal(2)) ==
        "N[((1/2)*lambda^2 + O(lambda^3)) ad^2 a^2 + (lambda + (1/2)*lambda^2 + O(lambda^3)) ad a + (1 + O(lambda^3))]");
  const auto j = nlohmann::json::parse(format(exp_number_antinormal(2), Style::Json));
  CHECK(j["schema"] == "boson-order/1");
  CHECK(j["ordering"] == -1);
  CHECK(j["terms"].size() == 3);
}

TEST_CASE("format then parse is the identity", "[expr-frontend][property]") {
  Rng rng(21);
  std::vector<OrderingParam> orderings{OrderingParam::symbolic("s"), OrderingParam::symbolic("r")};
  for (const auto& g : grid_orderings()) orderings.push_back(OrderingParam::concrete(g));
  for (int i = 0; i < 300; ++i) {
    const auto& ordering = orderings[static_cast<std::size_t>(i) % orderings.size()];
    const auto p = random_ordered_poly(rng, ordering);
    const std::string text = format(p);
    INFO(text);
    CHECK(reparse(text, ordering) == p);
  }
}

TEST_CASE("format is injective on distinct polynomials", "[expr-frontend][property]") {
  Rng rng(22);
  std::map<std::string, OrderedPolynomial> seen;
  for (int i = 0; i < 400; ++i) {
    const auto ordering = i % 2 ? OrderingParam::symbolic("s") : random_concrete_ordering(rng);
    const auto p = random_ordered_poly(rng, ordering);
    for (auto style : {Style::Text, Style::Json}) {
      const std::string key = std::to_string(static_cast<int>(style)) + format(p, style);
      auto [it, inserted] = seen.try_emplace(key, p);
      // The zero operator renders as "0" whatever its ordering tag.
      if (!inserted) CHECK((it->second == p || (p.is_zero() && it->second.is_zero())));
    }
  }
}

TEST_CASE("parser only ever throws SyntaxError", "[expr-frontend][property]") {
  Rng rng(23);
  std::uniform_int_distribution<int> byte(0, 255), len(0, 24);
  std::size_t accepted = 0;
  for (int i = 0; i < 20000; ++i) {
    std::string input;
    if (i % 2) {
      for (int k = len(rng); k > 0; --k) input.push_back(static_cast<char>(byte(rng)));
    } else {
      input = random_token_string(rng);
    }
    try {
      (void)parse(input);
      ++accepted;
    } catch (const SyntaxError&) {
    }
  }
  // The token generator should produce a fair share of valid inputs.
  CHECK(accepted > 500);
}
