#include <doctest.h>

#include "charlib.hpp"

using namespace biham;

namespace {

LaurentPoly q(int e, Rational c = Rational(1)) { return LaurentPoly::q_power(e, c); }

Exponents ev(std::initializer_list<int> v) { return Exponents(v); }

Exponents identity_class(int n) { return Exponents{n}; }

}  // namespace

TEST_CASE("helper sequences") {
  CHECK(helper_a(1) == LaurentPoly(1));
  CHECK(helper_a(2) == (q(1) + q(-1)) * Rational(-1, 2));
  CHECK(helper_a(4).is_zero());  // mu_4 = 0
  CHECK(helper_c(1) == q(1));
  CHECK(helper_d(1) == LaurentPoly(1));
  CHECK(helper_c(2) == LaurentPoly(Rational(-1, 2)));
  CHECK(helper_c(3) == (q(1) + q(-1)) * Rational(-1, 3));
  CHECK(helper_c(4) == LaurentPoly(Rational(-1, 4)));
  // Construction asserts exactness of the division for all n <= 30; the
  // product form must reproduce mu_n (q^n - q^-n) / n.
  for (int n = 1; n <= 30; ++n) {
    LaurentPoly a = helper_a(n);
    CHECK(a * (q(1) - q(-1)) * Rational(n) == (q(n) - q(-n)) * Rational(moebius(n)));
  }
  // Degree bound used in the weight-slice argument: deg c_s <= s - 2 for s > 1.
  for (int s = 2; s <= 12; ++s)
    if (!helper_c(s).is_zero()) CHECK(helper_c(s).max_exp() <= s - 2);
}

TEST_CASE("com2 character series") {
  SymL f = f_com2_char(6);
  CHECK(f.slice(1) == SymL::p(1, 6));
  for (int n = 1; n <= 6; ++n)
    for (const auto& rho : exponent_vectors_of_degree(n)) {
      CHECK(char_value(f, rho) == sl2_irreducible_char(n));
      CHECK(char_value(f, rho).eval_at_one() == Rational(n));
    }
}

TEST_CASE("LL1 series coefficients") {
  SymL h = h_series_ll1(4);
  CHECK(h.coefficient(ev({1})) == LaurentPoly(1));
  CHECK(h.coefficient(ev({2})) == (q(1) + q(-1)) * Rational(1, 2));
  CHECK(h.coefficient(ev({1, 1})) == LaurentPoly(Rational(-1, 2)));
  // Only vectors with n_1 > 0 contribute.
  CHECK(h.coefficient(ev({0, 1})).is_zero());
  CHECK(h.coefficient(ev({0, 0, 1})).is_zero());
}

TEST_CASE("Klyachko series") {
  SymQ f = f_lie_char(6);
  SymQ expect(6);
  expect.set(ev({2}), Rational(1, 2));
  expect.set(ev({0, 1}), Rational(-1, 2));
  CHECK(f.slice(2) == expect);
  for (int n = 1; n <= 6; ++n)
    CHECK(char_value(f, identity_class(n)) == factorial(static_cast<unsigned>(n - 1)));
  // sum_k p_k o F_L / k = -ln(1 - p_1) = sum p_1^n / n.
  SymQ fwd = weighted_forward(f, [](int k) { return Rational(1, k); });
  SymQ log_series(6);
  for (int n = 1; n <= 6; ++n) log_series.set(Exponents{n}, Rational(1, n));
  CHECK(fwd == log_series);
}

TEST_CASE("1/k-weighted Moebius inversion recovers the Klyachko series") {
  SymQ log_series(6);
  for (int n = 1; n <= 6; ++n) log_series.set(Exponents{n}, Rational(1, n));
  SymQ inverted =
      weighted_invert(log_series, [](int k) { return Rational(1, k); });
  CHECK(inverted == f_lie_char(6));
}

TEST_CASE("H and F_Lie2 are a q-Moebius pair") {
  // The defining relation H = sum_k (q^k - q^-k)/(k(q - q^-1)) p_k o F_Lie2
  // inverts with weights a_k = mu_k (q^k - q^-k)/(k(q - q^-1)), which is
  // exactly the series assembly; both directions must hold.
  const SymL h = h_series_ll1(6);
  const SymL f = f_lie2_char(6);
  CHECK(q_moebius_forward(f) == h);
  CHECK(q_moebius_invert(h) == f);
}

TEST_CASE("lie2 character series") {
  SymL f = f_lie2_char(7);
  long expect_dim[] = {1, 1, 2, 9, 64, 625, 7776, 117649};  // n^{n-1}
  for (int n = 1; n <= 7; ++n)
    CHECK(char_value(f, identity_class(n)).eval_at_one() == Rational(expect_dim[n]));
  CHECK(char_value(f, ev({0, 1})) == -(q(1) + q(-1)));
  CHECK(char_value(f, identity_class(3)) == q(2, Rational(2)) + LaurentPoly(5) + q(-2, Rational(2)));
}

TEST_CASE("lie2 coefficient weight bound") {
  // The q-degree of the coefficient of p^v in F_Lie2 is at most n - 1.
  // Equality happens exactly on the pure-power vectors p_k^{n/k} with
  // squarefree k (the support of the Klyachko character), since those pick up
  // a_k(q) times the top-degree p_1-coefficient of H; mixed vectors stay at
  // least two weights below.
  SymL f = f_lie2_char(7);
  for (const auto& [v, c] : f.terms()) {
    const int n = degree_of(v);
    int support = 0, k = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        ++support;
        k = static_cast<int>(i + 1);
      }
    const bool pure_power = support == 1;
    CHECK(c.max_exp() <= n - 1);
    if (c.max_exp() == n - 1) CHECK(pure_power);
    if (pure_power && moebius(k) != 0) CHECK(c.max_exp() == n - 1);
  }
  // Pure powers with mu(k) = 0 drop out entirely (a_k = 0).
  CHECK(f.coefficient(Exponents{0, 0, 0, 1}).is_zero());
}

TEST_CASE("character palindromicity") {
  SymL flie2 = f_lie2_char(6);
  SymL fp2 = f_p2_char(6);
  for (int n = 1; n <= 6; ++n)
    for (const auto& rho : exponent_vectors_of_degree(n)) {
      CHECK(char_value(flie2, rho).is_palindromic());
      CHECK(char_value(fp2, rho).is_palindromic());
    }
}

TEST_CASE("p2 character series") {
  SymL f = f_p2_char(7);
  long expect_dim[] = {1, 1, 3, 16, 125, 1296, 16807, 262144};  // (n+1)^{n-1}
  for (int n = 1; n <= 7; ++n)
    CHECK(char_value(f, identity_class(n)).eval_at_one() == Rational(expect_dim[n]));
  CHECK(char_value(f, ev({0, 1})) == LaurentPoly(1) - q(1) - q(-1));
  CHECK(char_value(f, identity_class(2)) == q(1) + LaurentPoly(1) + q(-1));
}

TEST_CASE("identity q-character products") {
  CHECK(identity_qchar_product(Operad::lie2, 2) == q(1) + q(-1));
  CHECK(identity_qchar_product(Operad::lie2, 3) ==
        q(2, Rational(2)) + LaurentPoly(5) + q(-2, Rational(2)));
  CHECK(identity_qchar_product(Operad::p2, 1) == LaurentPoly(1));
  SymL flie2 = f_lie2_char(7);
  SymL fp2 = f_p2_char(7);
  for (int n = 1; n <= 7; ++n) {
    CHECK(char_value(flie2, identity_class(n)) == identity_qchar_product(Operad::lie2, n));
    CHECK(char_value(fp2, identity_class(n)) == identity_qchar_product(Operad::p2, n));
  }
}

TEST_CASE("main theorem values, calibrated") {
  CHECK(mt_p2_value(ev({1})) == LaurentPoly(1));
  CHECK(mt_p2_value(ev({0, 1})) == LaurentPoly(1) - q(1) - q(-1));
  CHECK(mt_lie2_value(ev({0, 0, 1})) == -(q(2) + LaurentPoly(1) + q(-2)));
  CHECK(mt_lie2_value(ev({1, 1})) == LaurentPoly(Rational(-1)));
  // Divisibility vanishing: shortest cycle length 2 with a 3-cycle present.
  CHECK(mt_lie2_value(ev({0, 1, 1})).is_zero());
  CHECK(mt_lie2_value(ev({0, 0, 1, 0, 1})).is_zero());
  // Cycle lengths 2 and 6 are compatible (6 divisible by 2): nonvanishing,
  // and the closed form still matches the series route.
  CHECK_FALSE(mt_lie2_value(ev({0, 1, 0, 0, 0, 1})).is_zero());
  CHECK(mt_lie2_value(ev({0, 1, 0, 0, 0, 1})) ==
        char_value(f_lie2_char(8), ev({0, 1, 0, 0, 0, 1})));
  // Both closed forms match the authoritative series on every class, n <= 5.
  SymL flie2 = f_lie2_char(5);
  SymL fp2 = f_p2_char(5);
  for (int n = 1; n <= 5; ++n)
    for (const auto& rho : exponent_vectors_of_degree(n)) {
      CHECK(mt_lie2_value(rho) == char_value(flie2, rho));
      CHECK(mt_p2_value(rho) == char_value(fp2, rho));
    }
  // q = 1 at the identity gives (n+1)^{n-1}.
  CHECK(mt_p2_value(identity_class(4)).eval_at_one() == Rational(125));
}

TEST_CASE("main theorem printed forms document the transcription gaps") {
  SymL flie2 = f_lie2_char(5);
  SymL fp2 = f_p2_char(5);
  for (int n = 1; n <= 5; ++n)
    for (const auto& rho : exponent_vectors_of_degree(n)) {
      int k = 0;
      for (std::size_t i = 0; i < rho.size(); ++i)
        if (rho[i] > 0) {
          k = static_cast<int>(i + 1);
          break;
        }
      // Part 2 as printed vanishes whenever the shortest cycle length is >= 2,
      // so it disagrees with the series route on every nonvanishing such class.
      const LaurentPoly lie2_printed = mt_lie2_value(rho, MtForm::printed);
      if (k >= 2) {
        CHECK(lie2_printed.is_zero());
        if (!char_value(flie2, rho).is_zero())
          CHECK(lie2_printed != char_value(flie2, rho));
      } else {
        CHECK(lie2_printed == char_value(flie2, rho));
      }
      // Part 1 as printed misses the s = 1 fraction: off by (1 + n_1 q^-1)
      // exactly on classes with fixed points.
      const LaurentPoly p2_printed = mt_p2_value(rho, MtForm::printed);
      if (k == 1) {
        CHECK(p2_printed ==
              mt_p2_value(rho) * (LaurentPoly(1) + q(-1, Rational(rho[0]))));
        CHECK(p2_printed != char_value(fp2, rho));
      } else {
        CHECK(p2_printed == char_value(fp2, rho));
      }
    }
}

TEST_CASE("diagonal harmonics character values") {
  auto id1 = diag_harmonics_value(ev({1}));
  CHECK(id1.exact);
  CHECK(id1.value == LaurentPoly(1));
  for (int n = 1; n <= 6; ++n) {
    auto v = diag_harmonics_value(identity_class(n));
    REQUIRE(v.exact);
    CHECK(v.value.eval_at_one() ==
          pow_int(Rational(n + 1), static_cast<unsigned>(n - 1)));
  }
  auto tr = diag_harmonics_value(ev({0, 1}));
  REQUIRE(tr.exact);
  // -q^-1 (1 + q^2 + q^4) / (1 + q + q^2) = -q^-1 (q^2 - q + 1)
  CHECK(tr.value == -q(1) + LaurentPoly(1) - q(-1));
  CHECK(tr.numerator == (q(4) + q(2) + LaurentPoly(1)) * q(-1, Rational(-1)));
  CHECK(tr.denominator == q(2) + q(1) + LaurentPoly(1));
}

TEST_CASE("sl2 decomposition") {
  CHECK(sl2_decompose(q(1) + q(-1)) == std::map<int, long>{{2, 1}});
  // 2q^2 + 5 + 2q^-2 = 2 (q^2 + 1 + q^-2) + 3: two copies of L(3), three of
  // L(1), total dimension 9 (the identity character of Lie2(3)).
  CHECK(sl2_decompose(q(2, Rational(2)) + LaurentPoly(5) + q(-2, Rational(2))) ==
        std::map<int, long>{{3, 2}, {1, 3}});
  CHECK_THROWS(sl2_decompose(q(2)));
  CHECK_THROWS(sl2_decompose(q(1, Rational(1, 2)) + q(-1, Rational(1, 2))));
  // All multiplicities of Lie2(n) identity characters are nonnegative.
  SymL f = f_lie2_char(7);
  for (int n = 1; n <= 7; ++n) {
    auto mult = sl2_decompose(char_value(f, identity_class(n)));
    long total = 0;
    for (const auto& [dim, m] : mult) {
      CHECK(m >= 0);
      total += dim * m;
    }
    CHECK(Rational(total) == char_value(f, identity_class(n)).eval_at_one());
  }
}

TEST_CASE("multiplicity report") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(multiplicity_report(Operad::lie2, n).all_pass());
    CHECK(multiplicity_report(Operad::p2, n).all_pass());
  }
  auto lie3 = multiplicity_report(Operad::lie2, 3);
  CHECK(lie3.checks[1].name == "standard_isotypic");
  CHECK(lie3.checks[1].expected == ((q(1) + q(-1)) * (q(1) + q(-1))).str());
  auto p23 = multiplicity_report(Operad::p2, 3);
  CHECK(p23.checks[0].expected == "1");
  CHECK(p23.checks[0].pass);
  CHECK_FALSE(p23.checks[3].applicable);
}

TEST_CASE("residue lemma") {
  CHECK(residue_closed_form(Rational(7), Rational(1), 1) == Rational(1));
  CHECK(residue_closed_form(Rational(2), Rational(2), 2) == Rational(0));
  CHECK(residue_closed_form(Rational(3), Rational(1), 3) == Rational(1));
  CHECK(residue_series_oracle(Rational(3), Rational(1), 3) == Rational(1));
  CHECK_THROWS(residue_closed_form(Rational(1), Rational(0), 2));
  const Rational as[] = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(3)};
  const Rational bs[] = {Rational(1), Rational(2), Rational(3), Rational(1, 2), Rational(-1)};
  for (const auto& a : as)
    for (const auto& b : bs)
      for (int n = 1; n <= 5; ++n)
        CHECK(residue_closed_form(a, b, n) == residue_series_oracle(a, b, n));
}

TEST_CASE("hall pairing against the trivial character") {
  SymL f = f_lie2_char(5);
  SymQ h = h_series(5);
  for (int n = 2; n <= 5; ++n)
    CHECK(hall_inner_product(f, to_laurent(h.slice(n)), n).is_zero());
}
