#include <doctest.h>

#include <random>

#include "laurent.hpp"
#include "rational.hpp"

using namespace biham;

namespace {

LaurentPoly q(int e, Rational c = Rational(1)) { return LaurentPoly::q_power(e, c); }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational basics and serialization") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(5, 1).str() == "5");
  CHECK(Rational(3, -2) == Rational(-3, 2));
  CHECK(Rational::parse("22/7") == Rational(22, 7));
  CHECK(Rational::parse("-9") == Rational(-9));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK(factorial(6) == Rational(720));
  CHECK(pow_int(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 200; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!c.is_zero()) CHECK((a / c) * c == a);
  }
}

TEST_CASE("laurent arithmetic") {
  LaurentPoly a = q(1) + q(-1);
  LaurentPoly b = q(1) - q(-1);
  CHECK(a * b == q(2) - q(-2));
  CHECK(LaurentPoly{} + a == a);
  CHECK((q(1) + LaurentPoly(1)) * (q(1) - LaurentPoly(1)) == q(2) - LaurentPoly(1));
  CHECK((a - a).is_zero());
  CHECK(a.pow(2) == q(2) + LaurentPoly(2) + q(-2));
}

TEST_CASE("laurent q -> q^k substitution") {
  LaurentPoly a = q(1) + q(-1);
  CHECK(a.substitute_power(2) == q(2) + q(-2));
  CHECK(a.substitute_power(1) == a);
  CHECK((LaurentPoly(3) + q(1)).substitute_power(3) == LaurentPoly(3) + q(3));
  CHECK_THROWS(a.substitute_power(0));
  // Composition of substitutions.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    LaurentPoly f;
    std::uniform_int_distribution<int> e(-4, 4);
    for (int t = 0; t < 5; ++t) f += q(e(rng), random_rational(rng));
    for (int j = 1; j <= 5; ++j)
      for (int k = 1; k <= 5; ++k)
        CHECK(f.substitute_power(j).substitute_power(k) == f.substitute_power(j * k));
  }
}

TEST_CASE("laurent evaluation at one") {
  CHECK((q(1) + q(-1)).eval_at_one() == Rational(2));
  CHECK(LaurentPoly{}.eval_at_one() == Rational(0));
  LaurentPoly lie2_n3 = q(2, Rational(2)) + LaurentPoly(5) + q(-2, Rational(2));
  CHECK(lie2_n3.eval_at_one() == Rational(9));
}

TEST_CASE("sl2 irreducible characters") {
  CHECK(sl2_irreducible_char(1) == LaurentPoly(1));
  CHECK(sl2_irreducible_char(2) == q(1) + q(-1));
  CHECK(sl2_irreducible_char(4) == q(3) + q(1) + q(-1) + q(-3));
  CHECK_THROWS(sl2_irreducible_char(0));
  for (int n = 1; n <= 20; ++n) {
    CHECK(sl2_irreducible_char(n).is_palindromic());
    CHECK(sl2_irreducible_char(n).eval_at_one() == Rational(n));
  }
}

TEST_CASE("laurent exact division") {
  // (q^n - q^-n) / (q - q^-1) = sl2 character.
  for (int n = 1; n <= 12; ++n) {
    auto quot = LaurentPoly::try_divide(q(n) - q(-n), q(1) - q(-1));
    REQUIRE(quot.has_value());
    CHECK(*quot == sl2_irreducible_char(n));
  }
  CHECK(!LaurentPoly::try_divide(q(1), q(1) + LaurentPoly(1)).has_value());
  CHECK(!LaurentPoly::try_divide(q(1), LaurentPoly{}).has_value());
  CHECK(LaurentPoly::try_divide(LaurentPoly{}, q(5)).value().is_zero());
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly f, g;
    for (int t = 0; t < 4; ++t) {
      f += q(e(rng), random_rational(rng));
      g += q(e(rng), random_rational(rng));
    }
    if (g.is_zero()) continue;
    auto quot = LaurentPoly::try_divide(f * g, g);
    REQUIRE(quot.has_value());
    CHECK(*quot == f);
  }
}

TEST_CASE("laurent rendering") {
  CHECK((q(2, Rational(2)) + LaurentPoly(5) + q(-2, Rational(2))).str() ==
        "2*q^2 + 5 + 2*q^-2");
  CHECK((q(1) - q(-1)).str() == "q - q^-1");
  CHECK(LaurentPoly{}.str() == "0");
  CHECK(q(0, Rational(-1, 2)).str() == "-1/2");
}
