#include "test_support.hpp"

#include <catch_amalgamated.hpp>

using namespace boson;
using namespace boson::testing;

namespace {
const MultiPoly s = MultiPoly::variable("s");
const MultiPoly t = MultiPoly::variable("t");
const MultiPoly half = MultiPoly(Rational(1, 2));
}  // namespace

TEST_CASE("rational canonical form", "[exact-kernel]") {
  const Rational r = Rational(6) / Rational(-8);
  CHECK(numerator_of(r) == -3);
  CHECK(denominator_of(r) == 4);
  CHECK(to_string(r) == "-3/4");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("+5") == 5);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
}

TEST_CASE("poly_arith examples", "[exact-kernel]") {
  CHECK(((s + 1) * 0).is_zero());
  CHECK((s - 1) * (s + 1) == s * s - 1);
  CHECK((t - 1) * half + (t + 1) * half == t);
  CHECK(((t - 1) * half).to_string() == "(1/2)*t + (-1/2)");
  CHECK((s - s).terms().empty());
}

TEST_CASE("canonical rendering is graded lexicographic", "[exact-kernel]") {
  const MultiPoly p = t * t + s * t + s * s + 3 * s - 2;
  CHECK(p.to_string() == "s^2 + s*t + t^2 + 3*s + (-2)");
  CHECK(MultiPoly().to_string() == "0");
  CHECK(MultiPoly(Rational(-1, 2)).to_string() == "-1/2");
  CHECK((-s).to_string() == "(-1)*s");
}

TEST_CASE("poly_eval examples", "[exact-kernel]") {
  CHECK(((t + 1) * half).eval({{"t", Rational(-1)}}) == 0);
  CHECK(((s - 1) * half).eval({{"s", Rational(1)}}) == 0);
  CHECK(((s + 1) * half * (s - 1) * half).eval({{"s", Rational(0)}}) == Rational(-1, 4));
  try {
    (s * t).eval({{"s", Rational(1)}});
    FAIL("expected MissingBinding");
  } catch (const MissingBinding& e) {
    CHECK(e.symbol() == "t");
  }
  CHECK((s * t + s).specialize({{"s", Rational(2)}}) == 2 * t + 2);
}

TEST_CASE("ring axioms on random polynomials", "[exact-kernel][property]") {
  Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MultiPoly());
    const MultiPoly prod = a * b;
    for (const auto& [m, coef] : prod.terms()) CHECK(coef != 0);
  }
}

TEST_CASE("evaluation is a ring homomorphism", "[exact-kernel][property]") {
  Rng rng(202);
  for (int i = 0; i < 200; ++i) {
    const MultiPoly a = random_poly(rng), b = random_poly(rng);
    const Bindings env{{"s", random_rational(rng)}, {"t", random_rational(rng)}, {"u", random_rational(rng)}};
    CHECK((a * b).eval(env) == a.eval(env) * b.eval(env));
    CHECK((a + b).eval(env) == a.eval(env) + b.eval(env));
  }
}

TEST_CASE("series_arith examples", "[exact-kernel]") {
  const auto lam = FormalSeries::variable(2);
  const auto one = FormalSeries::one(2);
  CHECK((one + lam) * (one - lam) == one - lam * lam);
  CHECK((one - lam * lam)[2] == MultiPoly(-1));

  const auto e = FormalSeries::exp_linear(1, 3) * FormalSeries::exp_linear(-1, 3);
  CHECK(e == FormalSeries::one(3));

  const FormalSeries a({MultiPoly(1), s, t}, 2);
  CHECK(a + FormalSeries(2) == a);
  CHECK_THROWS_AS(a + FormalSeries(3), OrderMismatch);
  CHECK_THROWS_AS(a * FormalSeries(1), OrderMismatch);
}

TEST_CASE("truncation never leaks past the order", "[exact-kernel]") {
  const FormalSeries a({MultiPoly(0), MultiPoly(1), MultiPoly(1)}, 2);
  const auto sq = a * a;
  CHECK(sq.coefficients().size() == 3);
  CHECK(sq[2] == MultiPoly(1));
  CHECK(FormalSeries({1, 2, 3, 4}, 1).coefficients().size() == 2);
}

TEST_CASE("series_exp examples", "[exact-kernel]") {
  CHECK(exp(FormalSeries(4)) == FormalSeries::one(4));

  const auto e = exp(FormalSeries::variable(4));
  const std::vector<Rational> expected{1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24)};
  for (unsigned n = 0; n <= 4; ++n) CHECK(e[n] == MultiPoly(expected[n]));

  // exp(e^lambda - 1): oracle by naive powers of the shifted exponential.
  std::vector<Rational> shifted = exp_coeffs(1, 4);
  shifted[0] = 0;
  const auto oracle = exp_by_powers(shifted, 4);
  REQUIRE(oracle[4] == Rational(15, 24));
  const auto g = exp(FormalSeries::exp_linear(1, 4) - FormalSeries::one(4));
  CHECK(g[4] == MultiPoly(Rational(15, 24)));

  CHECK_THROWS_AS(exp(FormalSeries::one(3)), NonzeroConstantTerm);
}

TEST_CASE("series_pow examples", "[exact-kernel]") {
  const auto shifted = FormalSeries::exp_linear(1, 3) - FormalSeries::one(3);
  const auto p1 = pow(shifted, 1);
  CHECK(p1[0].is_zero());
  CHECK(p1[1] == MultiPoly(1));
  CHECK(p1[2] == MultiPoly(Rational(1, 2)));
  CHECK(p1[3] == MultiPoly(Rational(1, 6)));
  CHECK(pow(shifted, 2)[2] == MultiPoly(1));
  CHECK(pow(shifted, 0) == FormalSeries::one(3));
}

TEST_CASE("exp(a) exp(-a) = 1 for random zero-constant series", "[exact-kernel][property]") {
  Rng rng(303);
  for (int i = 0; i < 25; ++i) {
    std::vector<MultiPoly> coeffs{MultiPoly()};
    for (unsigned n = 1; n <= 6; ++n) coeffs.push_back(random_poly(rng, {"s", "t"}, 2, 1));
    const FormalSeries a(coeffs, 6);
    CHECK(exp(a) * exp(-a) == FormalSeries::one(6));
  }
}

TEST_CASE("series exponential agrees with the naive power sum", "[exact-kernel][property]") {
  Rng rng(404);
  for (int i = 0; i < 25; ++i) {
    std::vector<Rational> f{0};
    for (unsigned n = 1; n <= 8; ++n) f.push_back(random_rational(rng));
    const auto oracle = exp_by_powers(f, 8);
    const auto e = exp(RationalSeries(f, 8));
    for (unsigned n = 0; n <= 8; ++n) CHECK(e[n] == oracle[n]);
  }
}

TEST_CASE("derivative and reflection", "[exact-kernel]") {
  const auto e = FormalSeries::exp_linear(1, 5);
  CHECK(e.derivative() == FormalSeries::exp_linear(1, 4));
  CHECK(e.reflected() == FormalSeries::exp_linear(-1, 5));
  CHECK(e.to_string() ==
        "1 + lambda + (1/2)*lambda^2 + (1/6)*lambda^3 + (1/24)*lambda^4 + (1/120)*lambda^5 + O(lambda^6)");
}
