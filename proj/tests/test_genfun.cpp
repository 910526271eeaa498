#include <doctest.h>

#include <random>

#include "charlib.hpp"
#include "genfun.hpp"

using namespace biham;

namespace {

USeriesQ exp_minus_one(int n) {
  USeriesQ f(n);
  for (int d = 1; d <= n; ++d) f[d] = Rational(1) / factorial(static_cast<unsigned>(d));
  return f;
}

}  // namespace

TEST_CASE("univariate inversion: Com against Lie") {
  // f = exp(x) - 1 inverts to -ln(1-x): coefficients 1/n.
  USeriesQ g = invert_univariate(exp_minus_one(8));
  for (int d = 1; d <= 8; ++d) CHECK(g[d] == Rational(1, d));
}

TEST_CASE("univariate inversion: Com2 against Lie2") {
  // f_Com2 = sum n x^n / n! inverts to sum n^{n-1} x^n / n!.
  const int N = 7;
  USeriesQ f(N);
  for (int d = 1; d <= N; ++d) f[d] = Rational(d) / factorial(static_cast<unsigned>(d));
  USeriesQ g = invert_univariate(f);
  CHECK(g[1] == Rational(1));
  CHECK(g[2] == Rational(1));
  CHECK(g[3] == Rational(3, 2));
  CHECK(g[4] == Rational(8, 3));
  CHECK(g[5] == Rational(625, 120));
  for (int d = 1; d <= N; ++d)
    CHECK(g[d] == pow_int(Rational(d), static_cast<unsigned>(d - 1)) /
                      factorial(static_cast<unsigned>(d)));
}

TEST_CASE("univariate inversion edge cases") {
  USeriesQ x(5);
  x[1] = Rational(1);
  CHECK(invert_univariate(x) == x);
  USeriesQ bad(5);
  bad[1] = Rational(2);
  CHECK_THROWS(invert_univariate(bad));
}

TEST_CASE("univariate inversion roundtrip") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    USeriesQ f(10);
    f[1] = Rational(1);
    for (int d = 2; d <= 10; ++d) f[d] = Rational(num(rng), den(rng));
    CHECK(invert_univariate(invert_univariate(f)) == f);
  }
}

TEST_CASE("plethystic inversion: Com gives the Klyachko series") {
  const int N = 6;
  CHECK(invert_plethystic(f_com_char(N)) == f_lie_char(N));
  CHECK(invert_plethystic(SymQ::p(1, N)) == SymQ::p(1, N));
}

TEST_CASE("plethystic inversion: Com2 gives the Lie2 character") {
  const int N = 5;
  CHECK(invert_plethystic(f_com2_char(N)) == f_lie2_char(N));
}

TEST_CASE("plethystic inversion is symmetric in the Koszul pair") {
  const int N = 6;
  SymQ fcom = f_com_char(N);
  CHECK(invert_plethystic(invert_plethystic(fcom)) == fcom);
  SymL fcom2 = f_com2_char(N);
  CHECK(invert_plethystic(invert_plethystic(fcom2)) == fcom2);
}

TEST_CASE("plethystic inversion residual") {
  const int N = 6;
  SymL g = invert_plethystic(f_com2_char(N));
  SymL residual = plethysm(epsilon(f_com2_char(N)), epsilon(g)) - SymL::p(1, N);
  CHECK(residual.is_zero());
}

TEST_CASE("plethystic inversion rejects a non-p1 degree-1 slice") {
  SymQ f(4);
  f.set(Exponents{1}, Rational(2));
  CHECK_THROWS(invert_plethystic(f));
}

TEST_CASE("inversion commutes with univariate specialization") {
  const int N = 7;
  // Rational case.
  SymQ fcom = f_com_char(N);
  CHECK(specialize_univariate(invert_plethystic(fcom)) ==
        invert_univariate(specialize_univariate(fcom)));
  // Laurent case at q = 1: the dimension route.
  SymL fcom2 = f_com2_char(N);
  USeriesQ via_pleth = at_q_one(specialize_univariate(invert_plethystic(fcom2)));
  USeriesQ via_u = invert_univariate(at_q_one(specialize_univariate(fcom2)));
  CHECK(via_pleth == via_u);
}

TEST_CASE("compose_characters semantics") {
  const int N = 5;
  SymL flie2 = f_lie2_char(N);
  CHECK(compose_characters(to_laurent(f_com_char(N)), flie2) == f_p2_char(N));
  CHECK(compose_characters(SymL::p(1, N), flie2) == flie2);
  CHECK(compose_characters(flie2, SymL::p(1, N)) == flie2);
}
