#pragma once

#include <map>
#include <string>
#include <vector>

#include "symfunc.hpp"

namespace biham {

/// Helper sequences of the character formulas:
///   a_n(q) = mu_n (q^n - q^-n) / (n (q - q^-1)),
///   c_n(q) = sum_{d|n} (q^d/d) a_{n/d}(q^d),
///   d_n(q) = sum_{d|n} (1/d) a_{n/d}(q^d).
/// All divisions are exact-or-abort; values are memoized.
LaurentPoly helper_a(int n);
LaurentPoly helper_c(int n);
LaurentPoly helper_d(int n);

std::vector<int> divisors(int n);

/// F_Com = sum h_k (trivial representations).
SymQ f_com_char(int truncation);

/// F_Lie: the Klyachko character series sum_n (1/n) sum_{k|n} mu_k p_k^{n/k}.
SymQ f_lie_char(int truncation);

/// F_Com2 = sum_n [n]_q h_n, with [n]_q the n-dimensional SL2 character.
SymL f_com2_char(int truncation);

/// The auxiliary series H: coefficient of p_1^{n_1}...p_k^{n_k} (n_1 > 0) is
///   (1/prod n_i!) prod_{l=1}^{n_1-1} ((n_1-l)q + l q^-1)
///   prod_{s=2}^{k} [ prod_{l=1}^{n_s} (S_s - l(q^s - q^-s)) * X_s / (X_s + n_s q^-s) ]
/// with S_s = sum_{d|s} n_d c_{s/d}(q^d) and X_s its proper-divisor part.
/// The fraction must cancel exactly; a non-exact division aborts.
SymL h_series_ll1(int truncation);

/// F_Lie2 = sum_k a_k(q) p_k o H. The authoritative Lie2 character series.
SymL f_lie2_char(int truncation);

/// F_P2 = F_Com o F_Lie2. The authoritative P2 character series.
SymL f_p2_char(int truncation);

/// Evaluation conventions for the closed-form character values. The printed
/// form follows the displayed products literally; the calibrated form takes
/// the P2 fraction product over s >= 1 and, for Lie2, excludes s = k from the
/// second product while adjoining a k^{n_k} prefactor.
enum class MtForm { printed, calibrated };

/// Closed-form P2 character value on the class rho.
LaurentPoly mt_p2_value(const Exponents& rho, MtForm form = MtForm::calibrated);

/// Closed-form Lie2 character value on the class rho; zero when some cycle
/// length is not divisible by the shortest one.
LaurentPoly mt_lie2_value(const Exponents& rho, MtForm form = MtForm::calibrated);

/// Character value of the diagonal-harmonics space on the class rho; the
/// display is a ratio whose exactness is not asserted class-by-class, so an
/// inexact division is returned unreduced.
struct DiagHarmonicsValue {
  bool exact = false;
  LaurentPoly value;      // quotient when exact
  LaurentPoly numerator;  // always set
  LaurentPoly denominator;
};
DiagHarmonicsValue diag_harmonics_value(const Exponents& rho);

enum class Operad { lie2, p2, com2 };
Operad parse_operad(const std::string& name);

/// prod_{k=1}^{n-1} (kq + (n-k)q^-1) for Lie2, with the middle "+1" for P2:
/// the identity-class q-characters.
LaurentPoly identity_qchar_product(Operad op, int n);

/// Decomposes an SL2 character into irreducible multiplicities
/// {dimension -> multiplicity}. Throws when chi is not an SL2 character
/// (asymmetric, non-integer, or negative multiplicities).
std::map<int, long> sl2_decompose(const LaurentPoly& chi);

struct MultiplicityCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool applicable = true;
  bool pass = false;
};

struct MultiplicityReport {
  Operad operad = Operad::lie2;
  int n = 0;
  std::vector<MultiplicityCheck> checks;
  bool all_pass() const;
};

/// The isotypic-multiplicity identities: trivial and standard S_n-isotypic
/// components, and the top- and next-weight SL2 slices against the Klyachko
/// characters. Mismatches are reported, not thrown.
MultiplicityReport multiplicity_report(Operad op, int n);

/// res exp(az)/(exp(bz)-1)^n dz = (a-b)(a-2b)...(a-(n-1)b) / (b^n (n-1)!).
Rational residue_closed_form(const Rational& a, const Rational& b, int n);

/// The same residue by truncated Laurent-series expansion in z; the
/// independent oracle for the closed form.
Rational residue_series_oracle(const Rational& a, const Rational& b, int n);

}  // namespace biham
