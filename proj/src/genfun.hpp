#pragma once

#include "symfunc.hpp"

namespace biham {

/// Truncated univariate formal power series with zero constant term.
/// Coefficient of x^n lives at index n (1-based).
template <class C>
class USeries {
 public:
  explicit USeries(int truncation)
      : c_(static_cast<std::size_t>(truncation) + 1) {
    if (truncation < 1) throw std::invalid_argument("USeries: truncation must be >= 1");
  }

  int truncation() const { return static_cast<int>(c_.size()) - 1; }
  const C& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  C& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }

  friend bool operator==(const USeries& a, const USeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const USeries& a, const USeries& b) { return !(a == b); }

 private:
  std::vector<C> c_;
};

using USeriesQ = USeries<Rational>;
using USeriesL = USeries<LaurentPoly>;

/// f(h(x)) truncated; h must have zero constant term (it does by type).
template <class C>
USeries<C> compose_univariate(const USeries<C>& f, const USeries<C>& h) {
  const int n = std::min(f.truncation(), h.truncation());
  USeries<C> out(n);
  // power[i] = coefficients of h^k at the current k.
  USeries<C> power = h;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      USeries<C> next(n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j) next[i + j] += power[i] * h[j];
      power = next;
    }
    if (f[k].is_zero()) continue;
    for (int i = k; i <= n; ++i) out[i] += f[k] * power[i];
  }
  return out;
}

/// Compositional inverse in the Koszul normalization: returns g with
/// f(-g(-x)) = x up to the truncation. Requires a unit linear coefficient.
/// Solved degree by degree; the degree-n coefficient of g enters linearly.
template <class C>
USeries<C> invert_univariate(const USeries<C>& f) {
  const int n = f.truncation();
  if (f[1] != coeff_cast<C>(Rational(1)))
    throw std::invalid_argument("invert_univariate: linear coefficient must be 1");
  // Solve f(gt) = x for gt, then g(x) = -gt(-x).
  USeries<C> gt(n);
  gt[1] = coeff_cast<C>(Rational(1));
  for (int d = 2; d <= n; ++d) {
    USeries<C> r = compose_univariate(f, gt);
    gt[d] = C{} - r[d];
  }
  USeries<C> g(n);
  for (int d = 1; d <= n; ++d) g[d] = d % 2 == 1 ? gt[d] : C{} - gt[d];
  return g;
}

/// Plethystic inverse per the Koszul functional equation: returns G with
/// eps(F) o eps(G) = p_1 up to the truncation. Requires the degree-1 slice of
/// F to be exactly p_1. At step n the unknown degree-n slice enters the
/// equation only through the p_1-linear part of eps(F), so each step is one
/// truncated plethysm and one slice extraction.
template <class C>
Series<C> invert_plethystic(const Series<C>& f) {
  const int n = f.truncation();
  if (f.slice(1) != Series<C>::p(1, n))
    throw std::invalid_argument("invert_plethystic: degree-1 slice must be p_1");
  const Series<C> ef = epsilon(f);
  Series<C> gt = Series<C>::p(1, n);  // eps(G), built degree by degree
  gt.scale(coeff_cast<C>(Rational(-1)));
  for (int d = 2; d <= n; ++d) {
    // Intermediate plethysms truncated at d, not n, to keep the solver at
    // O(n) truncated-plethysm calls.
    Series<C> r = plethysm(ef.truncated(d), gt.truncated(d));
    gt += r.slice(d).retruncated(n);
  }
  Series<C> g = epsilon(gt);
  // The construction leaves no residual when the precondition holds.
  Series<C> residual = plethysm(ef, epsilon(g)) - Series<C>::p(1, n);
  if (!residual.is_zero())
    throw std::logic_error("invert_plethystic: inconsistent system (nonzero residual)");
  return g;
}

/// Character of a composition of S-modules: an alias of plethysm with
/// F_{V o W} = F_V o F_W semantics.
template <class C>
Series<C> compose_characters(const Series<C>& f, const Series<C>& g) {
  return plethysm(f, g);
}

/// Specialization p_1 = x, p_k = 0 for k > 1.
template <class C>
USeries<C> specialize_univariate(const Series<C>& f) {
  USeries<C> out(f.truncation());
  for (int d = 1; d <= f.truncation(); ++d) out[d] = f.coefficient(Exponents{d});
  return out;
}

/// q = 1 on every coefficient of a Laurent univariate series.
USeriesQ at_q_one(const USeriesL& f);

}  // namespace biham
