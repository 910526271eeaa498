#pragma once

#include <map>
#include <optional>
#include <string>

#include "rational.hpp"

namespace biham {

/// Laurent polynomial in the single variable q with rational coefficients,
/// stored sparsely by exponent. No stored coefficient is zero; the empty
/// mapping is 0. Exponents are unbounded in both directions.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constant embeds implicitly
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT

  static LaurentPoly q_power(int exp, Rational coeff = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<int, Rational>& terms() const { return terms_; }

  Rational coefficient(int exp) const;
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero

  /// q -> q^k (k >= 1): every exponent scaled by k.
  LaurentPoly substitute_power(int k) const;

  /// Sum of all coefficients (evaluation at q = 1).
  Rational eval_at_one() const;

  /// Invariance under q -> q^{-1}.
  bool is_palindromic() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator-(const LaurentPoly& a);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(unsigned e) const;

  /// Exact quotient a/b, or nullopt when the division is not exact
  /// (including b = 0).
  static std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b);

  /// Human-readable form, e.g. "2*q^2 + 5 + 2*q^-2".
  std::string str() const;

 private:
  void set(int exp, Rational c);
  std::map<int, Rational> terms_;
};

/// Character of the n-dimensional irreducible SL2 representation:
/// q^{n-1} + q^{n-3} + ... + q^{1-n}. Requires n >= 1.
LaurentPoly sl2_irreducible_char(int n);

}  // namespace biham
