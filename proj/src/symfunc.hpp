#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "laurent.hpp"
#include "rational.hpp"

namespace biham {

/// Multiplicity vector (n_1,...,n_k) indexing the monomial p_1^{n_1}...p_k^{n_k}.
/// Doubles as the cycle type of a permutation with n_i cycles of length i.
/// Trailing zeros are trimmed; the empty vector is the constant term.
using Exponents = std::vector<int>;

void trim_exponents(Exponents& v);
int degree_of(const Exponents& v);

/// z_rho = prod_i i^{n_i} n_i!, the centralizer order of the class rho.
Rational z_of(const Exponents& v);

/// All exponent vectors of degree exactly n (the conjugacy classes of S_n),
/// in deterministic order.
std::vector<Exponents> exponent_vectors_of_degree(int n);

/// Number-theoretic Moebius function.
int moebius(int n);

/// All set partitions of {1..n}; blocks are ascending and ordered by their
/// minimal element. Deterministic order.
std::vector<std::vector<std::vector<int>>> set_partitions(int n);

/// Term order: by degree, then reverse-lex on the multiplicity vector.
/// Fixed for deterministic serialization; no semantic weight.
struct ExponentsLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    const std::size_t k = std::max(a.size(), b.size());
    for (std::size_t i = k; i-- > 0;) {
      const int ai = i < a.size() ? a[i] : 0;
      const int bi = i < b.size() ? b[i] : 0;
      if (ai != bi) return ai < bi;
    }
    return false;
  }
};

inline Rational frobenius(const Rational& c, int /*k*/) { return c; }
inline LaurentPoly frobenius(const LaurentPoly& c, int k) { return c.substitute_power(k); }

template <class C>
C coeff_cast(const Rational& r);
template <>
inline Rational coeff_cast<Rational>(const Rational& r) { return r; }
template <>
inline LaurentPoly coeff_cast<LaurentPoly>(const Rational& r) { return LaurentPoly(r); }

/// Truncated element of the ring of symmetric functions in the power-sum
/// basis. Coefficients are Rational or LaurentPoly (one kind per value; the
/// template keeps kinds from mixing). Every stored key has degree <= the
/// truncation degree and no stored coefficient is zero.
template <class C>
class Series {
 public:
  using TermMap = std::map<Exponents, C, ExponentsLess>;

  explicit Series(int truncation) : trunc_(truncation) {
    if (truncation < 0) throw std::invalid_argument("Series: negative truncation");
  }

  int truncation() const { return trunc_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(const Exponents& v) const {
    Exponents key = v;
    trim_exponents(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? C{} : it->second;
  }

  /// Adds c to the coefficient of p^v; drops terms beyond the truncation.
  void add_term(Exponents v, const C& c) {
    if (c.is_zero()) return;
    trim_exponents(v);
    if (degree_of(v) > trunc_) return;
    auto [it, inserted] = terms_.try_emplace(std::move(v), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Sets the coefficient exactly; degree overflow is an error.
  void set(Exponents v, C c) {
    trim_exponents(v);
    if (degree_of(v) > trunc_)
      throw std::invalid_argument("Series: term degree exceeds truncation");
    if (c.is_zero())
      terms_.erase(v);
    else
      terms_[std::move(v)] = std::move(c);
  }

  bool has_constant_term() const { return terms_.count(Exponents{}) != 0; }

  /// Smallest degree carrying a term; truncation+1 when zero.
  int valuation() const {
    int best = trunc_ + 1;
    for (const auto& [v, c] : terms_) best = std::min(best, degree_of(v));
    return best;
  }

  /// Homogeneous degree-d part.
  Series slice(int d) const {
    Series out(trunc_);
    for (const auto& [v, c] : terms_)
      if (degree_of(v) == d) out.terms_.emplace(v, c);
    return out;
  }

  Series truncated(int n) const {
    Series out(std::min(n, trunc_));
    for (const auto& [v, c] : terms_)
      if (degree_of(v) <= out.trunc_) out.terms_.emplace(v, c);
    return out;
  }

  /// Same terms under a new truncation degree; raising the degree is allowed
  /// (the caller asserts the dropped tail is not being reinterpreted as zero).
  Series retruncated(int n) const {
    Series out(n);
    for (const auto& [v, c] : terms_)
      if (degree_of(v) <= n) out.terms_.emplace(v, c);
    return out;
  }

  static Series p(int k, int truncation) {
    if (k < 1) throw std::invalid_argument("Series::p: k must be >= 1");
    Series out(truncation);
    Exponents v(k, 0);
    v[k - 1] = 1;
    out.add_term(std::move(v), coeff_cast<C>(Rational(1)));
    return out;
  }

  static Series one(int truncation) {
    Series out(truncation);
    out.add_term(Exponents{}, coeff_cast<C>(Rational(1)));
    return out;
  }

  Series& operator+=(const Series& o) {
    align(o);
    for (const auto& [v, c] : o.terms_) add_term(v, c);
    return *this;
  }

  Series& operator-=(const Series& o) {
    align(o);
    for (const auto& [v, c] : o.terms_) add_term(v, negate(c));
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  friend Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.trunc_, b.trunc_));
    for (const auto& [va, ca] : a.terms_) {
      const int da = degree_of(va);
      if (da > out.trunc_) continue;
      for (const auto& [vb, cb] : b.terms_) {
        if (da + degree_of(vb) > out.trunc_) continue;
        Exponents v(std::max(va.size(), vb.size()), 0);
        for (std::size_t i = 0; i < va.size(); ++i) v[i] += va[i];
        for (std::size_t i = 0; i < vb.size(); ++i) v[i] += vb[i];
        out.add_term(std::move(v), ca * cb);
      }
    }
    return out;
  }

  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series operator-() const {
    Series out(trunc_);
    for (const auto& [v, c] : terms_) out.terms_.emplace(v, negate(c));
    return out;
  }

  Series& scale(const C& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    TermMap scaled;
    for (const auto& [v, old] : terms_) {
      C nc = old * c;
      if (!nc.is_zero()) scaled.emplace(v, std::move(nc));
    }
    terms_ = std::move(scaled);
    return *this;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  static C negate(const C& c) { return C{} - c; }
  void align(const Series& o) {
    if (o.trunc_ >= trunc_) return;
    *this = truncated(o.trunc_);
  }

  int trunc_;
  TermMap terms_;
};

using SymQ = Series<Rational>;
using SymL = Series<LaurentPoly>;

/// p_k o h: every p_i becomes p_{ik} and, for Laurent coefficients, q -> q^k.
template <class C>
Series<C> pleth_pk(const Series<C>& h, int k, int truncation) {
  if (k < 1) throw std::invalid_argument("pleth_pk: k must be >= 1");
  Series<C> out(truncation);
  for (const auto& [v, c] : h.terms()) {
    if (degree_of(v) * k > truncation) continue;
    Exponents w(v.size() * k, 0);
    for (std::size_t i = 0; i < v.size(); ++i) w[(i + 1) * k - 1] = v[i];
    out.add_term(std::move(w), frobenius(c, k));
  }
  return out;
}

/// Plethysm f o h, the ring homomorphism sending p_k to p_k o h. The second
/// argument must have no constant term (valuation >= 1); the first may.
template <class C>
Series<C> plethysm(const Series<C>& f, const Series<C>& h) {
  if (h.has_constant_term())
    throw std::invalid_argument("plethysm: substituted series has a constant term");
  const int n = std::min(f.truncation(), h.truncation());
  std::vector<Series<C>> pk;  // pk[i] = p_{i+1} o h
  pk.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) pk.push_back(pleth_pk(h, k, n));
  Series<C> out(n);
  for (const auto& [v, c] : f.terms()) {
    if (degree_of(v) > n) continue;
    Series<C> prod = Series<C>::one(n);
    prod.scale(c);
    for (std::size_t i = 0; i < v.size() && !prod.is_zero(); ++i)
      for (int rep = 0; rep < v[i]; ++rep) prod *= pk[i];
    out += prod;
  }
  return out;
}

/// The involution mapping every p_n to -p_n: the coefficient of p^v picks up
/// (-1)^{sum of multiplicities}.
template <class C>
Series<C> epsilon(const Series<C>& f) {
  Series<C> out(f.truncation());
  for (const auto& [v, c] : f.terms()) {
    long parity = 0;
    for (int m : v) parity += m;
    out.add_term(v, parity % 2 == 0 ? c : C{} - c);
  }
  return out;
}

/// Character value on the class rho: coefficient of p^rho times z_rho.
template <class C>
C char_value(const Series<C>& f, const Exponents& rho) {
  if (degree_of(rho) > f.truncation())
    throw std::invalid_argument("char_value: class degree exceeds truncation");
  return f.coefficient(rho) * z_of(rho);
}

/// Hall inner product of the degree-n slices: power sums are orthogonal with
/// <p^rho, p^rho> = z_rho.
template <class C>
C hall_inner_product(const Series<C>& f, const Series<C>& g, int n) {
  if (f.truncation() < n || g.truncation() < n)
    throw std::invalid_argument("hall_inner_product: truncation below n");
  C acc{};
  for (const auto& rho : exponent_vectors_of_degree(n)) {
    C cf = f.coefficient(rho);
    if (cf.is_zero()) continue;
    C cg = g.coefficient(rho);
    if (cg.is_zero()) continue;
    acc += cf * cg * z_of(rho);
  }
  return acc;
}

/// exp(s) - requires valuation(s) >= 1; truncated at s.truncation().
template <class C>
Series<C> exp_series(const Series<C>& s) {
  if (s.has_constant_term())
    throw std::invalid_argument("exp_series: nonzero constant term");
  const int n = s.truncation();
  Series<C> acc = Series<C>::one(n);
  Series<C> term = Series<C>::one(n);
  for (int m = 1; m <= n; ++m) {
    term *= s;
    if (term.is_zero()) break;
    term.scale(coeff_cast<C>(Rational(1, m)));
    acc += term;
  }
  return acc;
}

/// Sum of complete symmetric functions h_1 + h_2 + ...,
/// computed as exp(sum p_k/k) - 1.
SymQ h_series(int truncation);

/// Weighted plethystic sum A = sum_k w(k) p_k o B. With weights satisfying
/// w(1) = 1 and w(k)(q) * w(l)(q^k) = w(kl)(q), Moebius inversion applies:
/// B = sum_k mu_k w(k) p_k o A. Covers the plain lemma (w = 1), the 1/k
/// variant and the q-analogue with one implementation.
template <class C, class WeightFn>
Series<C> weighted_forward(const Series<C>& b, WeightFn w) {
  const int n = b.truncation();
  Series<C> out(n);
  for (int k = 1; k <= n; ++k) {
    Series<C> t = pleth_pk(b, k, n);
    t.scale(w(k));
    out += t;
  }
  return out;
}

template <class C, class WeightFn>
Series<C> weighted_invert(const Series<C>& a, WeightFn w) {
  if (a.has_constant_term())
    throw std::invalid_argument("weighted_invert: nonzero constant term");
  const int n = a.truncation();
  Series<C> out(n);
  for (int k = 1; k <= n; ++k) {
    const int mu = moebius(k);
    if (mu == 0) continue;
    Series<C> t = pleth_pk(a, k, n);
    t.scale(w(k) * Rational(mu));
    out += t;
  }
  return out;
}

/// Plain Moebius pair: A = sum p_k o B  <=>  B = sum mu_k p_k o A.
SymQ moebius_forward(const SymQ& b);
SymQ moebius_invert(const SymQ& a);

/// q-analogue with weights (q^k - q^{-k}) / (k (q - q^{-1})).
SymL q_moebius_forward(const SymL& b);
SymL q_moebius_invert(const SymL& a);

/// Lifts rational coefficients into constant Laurent polynomials.
SymL to_laurent(const SymQ& f);

/// Specialization q = 1 on every coefficient.
SymQ at_q_one(const SymL& f);

/// Extracts the coefficient of q^e from every term's Laurent coefficient.
SymQ q_coefficient_slice(const SymL& f, int e);

}  // namespace biham
