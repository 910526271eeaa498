#include "charlib.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace biham {

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::mutex g_memo_mutex;

LaurentPoly q_pow(int e, Rational c = Rational(1)) {
  return LaurentPoly::q_power(e, std::move(c));
}

LaurentPoly compute_a(int n) {
  // mu_n (q^n - q^-n) / (n (q - q^-1)); the division must be exact.
  auto quot = LaurentPoly::try_divide(q_pow(n) - q_pow(-n), q_pow(1) - q_pow(-1));
  if (!quot)
    throw std::logic_error("helper_a: (q - q^-1) does not divide q^n - q^-n");
  return *quot * Rational(moebius(n), n);
}

LaurentPoly compute_c(int n) {
  LaurentPoly c;
  for (int d : divisors(n))
    c += q_pow(d, Rational(1, d)) * helper_a(n / d).substitute_power(d);
  return c;
}

LaurentPoly compute_d(int n) {
  LaurentPoly out;
  for (int d : divisors(n))
    out += helper_a(n / d).substitute_power(d) * Rational(1, d);
  return out;
}

template <LaurentPoly (*Fn)(int)>
LaurentPoly memoized(int n, std::map<int, LaurentPoly>& cache) {
  if (n < 1) throw std::invalid_argument("helper sequence index must be >= 1");
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  LaurentPoly value = Fn(n);  // computed outside the lock; may recurse
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  return cache.emplace(n, std::move(value)).first->second;
}

}  // namespace

LaurentPoly helper_a(int n) {
  static std::map<int, LaurentPoly> cache;
  return memoized<compute_a>(n, cache);
}

LaurentPoly helper_c(int n) {
  static std::map<int, LaurentPoly> cache;
  return memoized<compute_c>(n, cache);
}

LaurentPoly helper_d(int n) {
  static std::map<int, LaurentPoly> cache;
  return memoized<compute_d>(n, cache);
}

SymQ f_com_char(int truncation) { return h_series(truncation); }

SymQ f_lie_char(int truncation) {
  SymQ f(truncation);
  for (int n = 1; n <= truncation; ++n)
    for (int k : divisors(n)) {
      const int mu = moebius(k);
      if (mu == 0) continue;
      Exponents v(k, 0);
      v[k - 1] = n / k;
      f.add_term(std::move(v), Rational(mu, n));
    }
  return f;
}

SymL f_com2_char(int truncation) {
  SymQ h = h_series(truncation);
  SymL f(truncation);
  for (int n = 1; n <= truncation; ++n) {
    const LaurentPoly chi = sl2_irreducible_char(n);
    const SymQ hn = h.slice(n);
    for (const auto& [v, c] : hn.terms()) f.add_term(v, chi * c);
  }
  return f;
}

namespace {

// sum_{d | s} n_d c_{s/d}(q^d) over stored multiplicities; proper = drop d = s.
LaurentPoly divisor_c_sum(const Exponents& v, int s, bool proper) {
  LaurentPoly sum;
  for (int d : divisors(s)) {
    if (proper && d == s) continue;
    if (d > static_cast<int>(v.size()) || v[d - 1] == 0) continue;
    sum += helper_c(s / d).substitute_power(d) * Rational(v[d - 1]);
  }
  return sum;
}

LaurentPoly ll1_coefficient(const Exponents& v) {
  const int n1 = v[0];
  LaurentPoly coeff(Rational(1));
  for (int l = 1; l <= n1 - 1; ++l)
    coeff *= q_pow(1, Rational(n1 - l)) + q_pow(-1, Rational(l));
  for (int s = 2; s <= static_cast<int>(v.size()); ++s) {
    const int ns = v[s - 1];
    const LaurentPoly ssum = divisor_c_sum(v, s, /*proper=*/false);
    const LaurentPoly xsum = divisor_c_sum(v, s, /*proper=*/true);
    const LaurentPoly bs = q_pow(s) - q_pow(-s);
    LaurentPoly numer = xsum;
    for (int l = 1; l <= ns; ++l) numer *= ssum - bs * Rational(l);
    const LaurentPoly denom = xsum + q_pow(-s, Rational(ns));
    auto factor = LaurentPoly::try_divide(numer, denom);
    if (!factor)
      throw std::logic_error(
          "h_series_ll1: fraction factor did not cancel exactly at s=" +
          std::to_string(s) + " (formula transcription bug)");
    coeff *= *factor;
  }
  Rational fact(1);
  for (int m : v) fact *= factorial(static_cast<unsigned>(m));
  coeff *= Rational(1) / fact;
  return coeff;
}

}  // namespace

SymL h_series_ll1(int truncation) {
  if (truncation < 1) throw std::invalid_argument("h_series_ll1: truncation must be >= 1");
  static std::map<int, SymL> cache;
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = cache.find(truncation);
    if (it != cache.end()) return it->second;
  }
  SymL h(truncation);
  for (int n = 1; n <= truncation; ++n)
    for (const auto& v : exponent_vectors_of_degree(n)) {
      if (v.empty() || v[0] == 0) continue;  // the (LL1) range: n_1 > 0
      h.add_term(v, ll1_coefficient(v));
    }
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  cache.emplace(truncation, h);
  return h;
}

SymL f_lie2_char(int truncation) {
  static std::map<int, SymL> cache;
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = cache.find(truncation);
    if (it != cache.end()) return it->second;
  }
  const SymL h = h_series_ll1(truncation);
  SymL f(truncation);
  for (int k = 1; k <= truncation; ++k) {
    const LaurentPoly ak = helper_a(k);
    if (ak.is_zero()) continue;
    SymL t = pleth_pk(h, k, truncation);
    t.scale(ak);
    f += t;
  }
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  cache.emplace(truncation, f);
  return f;
}

SymL f_p2_char(int truncation) {
  static std::map<int, SymL> cache;
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = cache.find(truncation);
    if (it != cache.end()) return it->second;
  }
  SymL f = plethysm(to_laurent(f_com_char(truncation)), f_lie2_char(truncation));
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  cache.emplace(truncation, f);
  return f;
}

namespace {

void validate_cycle_type(const Exponents& rho) {
  if (degree_of(rho) < 1)
    throw std::invalid_argument("cycle type must have degree >= 1");
  for (int m : rho)
    if (m < 0) throw std::invalid_argument("cycle type has a negative multiplicity");
}

}  // namespace

LaurentPoly mt_p2_value(const Exponents& rho, MtForm form) {
  validate_cycle_type(rho);
  LaurentPoly numer(Rational(1));
  LaurentPoly denom(Rational(1));
  const int fraction_min_s = form == MtForm::calibrated ? 1 : 2;
  for (int s = 1; s <= static_cast<int>(rho.size()); ++s) {
    const int ns = rho[s - 1];
    if (ns == 0) continue;
    const LaurentPoly ssum = divisor_c_sum(rho, s, /*proper=*/false);
    const LaurentPoly xsum = divisor_c_sum(rho, s, /*proper=*/true);
    const LaurentPoly ds = helper_d(s);
    const LaurentPoly bs = q_pow(s) - q_pow(-s);
    for (int m = 1; m <= ns; ++m) numer *= ssum + ds - bs * Rational(m);
    numer *= LaurentPoly(pow_int(Rational(s), static_cast<unsigned>(ns)));
    if (s >= fraction_min_s) {
      numer *= xsum + ds;
      denom *= xsum + q_pow(-s, Rational(ns)) + ds;
    }
  }
  if (denom.is_zero())
    throw std::domain_error("mt_p2_value: formula-domain failure (zero denominator)");
  auto value = LaurentPoly::try_divide(numer, denom);
  if (!value)
    throw std::domain_error("mt_p2_value: formula-domain failure (inexact division)");
  return *value;
}

LaurentPoly mt_lie2_value(const Exponents& rho, MtForm form) {
  validate_cycle_type(rho);
  int k = 0;
  for (int s = 1; s <= static_cast<int>(rho.size()); ++s)
    if (rho[s - 1] > 0) {
      k = s;
      break;
    }
  for (int s = k; s <= static_cast<int>(rho.size()); ++s)
    if (rho[s - 1] > 0 && s % k != 0) return LaurentPoly{};  // vanishing case

  const int nk = rho[k - 1];
  LaurentPoly value = helper_a(k);
  if (form == MtForm::calibrated)
    value *= LaurentPoly(pow_int(Rational(k), static_cast<unsigned>(nk)));
  for (int j = 1; j <= nk - 1; ++j)
    value *= q_pow(k, Rational(nk - j)) + q_pow(-k, Rational(j));

  for (int s = 2; s <= static_cast<int>(rho.size()); ++s) {
    const int ns = rho[s - 1];
    if (ns == 0) continue;
    if (form == MtForm::calibrated && s == k) continue;
    // Divisor sums restricted to multiples of k.
    LaurentPoly tsum, ysum;
    for (int d : divisors(s)) {
      if (d % k != 0) continue;
      if (d > static_cast<int>(rho.size()) || rho[d - 1] == 0) continue;
      LaurentPoly part = helper_c(s / d).substitute_power(d) * Rational(rho[d - 1]);
      tsum += part;
      if (d != s) ysum += part;
    }
    const LaurentPoly bs = q_pow(s) - q_pow(-s);
    LaurentPoly factor = ysum;
    for (int m = 1; m <= ns - 1; ++m) factor *= tsum - bs * Rational(m);
    factor *= LaurentPoly(pow_int(Rational(s), static_cast<unsigned>(ns)));
    value *= factor;
  }
  return value;
}

DiagHarmonicsValue diag_harmonics_value(const Exponents& rho) {
  validate_cycle_type(rho);
  const int n = degree_of(rho);
  long sign_exp = 0;
  for (std::size_t i = 0; i < rho.size(); ++i) sign_exp += static_cast<long>(i) * rho[i];
  DiagHarmonicsValue out;
  LaurentPoly numer = q_pow(-n * (n - 1) / 2, Rational(sign_exp % 2 == 0 ? 1 : -1));
  for (int m = 1; m <= static_cast<int>(rho.size()); ++m) {
    if (rho[m - 1] == 0) continue;
    LaurentPoly geo;
    for (int i = 0; i <= n; ++i) geo += q_pow(i * m);
    numer *= geo.pow(static_cast<unsigned>(rho[m - 1]));
  }
  LaurentPoly denom;
  for (int i = 0; i <= n; ++i) denom += q_pow(i);
  out.numerator = numer;
  out.denominator = denom;
  if (auto quot = LaurentPoly::try_divide(numer, denom)) {
    out.exact = true;
    out.value = *quot;
  }
  return out;
}

Operad parse_operad(const std::string& name) {
  if (name == "lie2") return Operad::lie2;
  if (name == "p2") return Operad::p2;
  if (name == "com2") return Operad::com2;
  throw std::invalid_argument("unknown operad '" + name + "'");
}

LaurentPoly identity_qchar_product(Operad op, int n) {
  if (n < 1) throw std::invalid_argument("identity_qchar_product: n must be >= 1");
  if (op == Operad::com2) return sl2_irreducible_char(n);
  LaurentPoly prod(Rational(1));
  for (int k = 1; k <= n - 1; ++k) {
    LaurentPoly factor = q_pow(1, Rational(k)) + q_pow(-1, Rational(n - k));
    if (op == Operad::p2) factor += LaurentPoly(Rational(1));
    prod *= factor;
  }
  return prod;
}

std::map<int, long> sl2_decompose(const LaurentPoly& chi) {
  if (!chi.is_palindromic())
    throw std::domain_error("sl2_decompose: not an SL2 character (asymmetric in q)");
  std::map<int, long> mult;
  LaurentPoly rem = chi;
  while (!rem.is_zero()) {
    const int w = rem.max_exp();
    if (w < 0) throw std::domain_error("sl2_decompose: not an SL2 character");
    const Rational c = rem.coefficient(w);
    if (!c.is_integer() || c.sign() < 0)
      throw std::domain_error("sl2_decompose: not an SL2 character (multiplicity " +
                              c.str() + " of L(" + std::to_string(w + 1) + "))");
    mult[w + 1] = c.to_long();
    rem -= sl2_irreducible_char(w + 1) * c;
  }
  return mult;
}

bool MultiplicityReport::all_pass() const {
  for (const auto& c : checks)
    if (c.applicable && !c.pass) return false;
  return true;
}

namespace {

template <class C>
std::string series_str(const Series<C>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      os << "*p" << (i + 1);
      if (v[i] > 1) os << "^" << v[i];
    }
  }
  return os.str();
}

MultiplicityCheck make_check(std::string name, const LaurentPoly& expected,
                             const LaurentPoly& actual) {
  MultiplicityCheck c;
  c.name = std::move(name);
  c.expected = expected.str();
  c.actual = actual.str();
  c.pass = expected == actual;
  return c;
}

MultiplicityCheck make_check(std::string name, const SymQ& expected, const SymQ& actual) {
  MultiplicityCheck c;
  c.name = std::move(name);
  c.expected = series_str(expected);
  c.actual = series_str(actual);
  c.pass = expected == actual;
  return c;
}

}  // namespace

MultiplicityReport multiplicity_report(Operad op, int n) {
  if (n < 2) throw std::invalid_argument("multiplicity_report: n must be >= 2");
  if (op == Operad::com2)
    throw std::invalid_argument("multiplicity_report: lie2 or p2 only");
  MultiplicityReport report;
  report.operad = op;
  report.n = n;

  const SymL f = (op == Operad::lie2 ? f_lie2_char(n) : f_p2_char(n)).slice(n);
  const SymQ h = h_series(n);
  const SymL hn = to_laurent(h.slice(n));
  const LaurentPoly l1 = sl2_irreducible_char(2);  // q + q^-1

  // (i) trivial isotypic component <F_n, h_n>.
  LaurentPoly triv_expected =
      op == Operad::lie2 ? LaurentPoly{} : LaurentPoly(Rational(1));
  report.checks.push_back(
      make_check("trivial_isotypic", triv_expected, hall_inner_product(f, hn, n)));

  // (ii) standard isotypic component <F_n, h_{n-1} h_1 - h_n>.
  const SymL std_char = to_laurent(h.slice(n - 1) * SymQ::p(1, n)) - hn;
  LaurentPoly std_expected;
  if (op == Operad::lie2) {
    std_expected = l1.pow(static_cast<unsigned>(n - 1));
  } else {
    for (int j = 1; j <= n - 1; ++j) std_expected += l1.pow(static_cast<unsigned>(j));
  }
  report.checks.push_back(make_check("standard_isotypic", std_expected,
                                     hall_inner_product(f, std_char, n)));

  // (iii) top-weight slice (coefficient of q^{n-1}) = Klyachko character.
  const SymQ klyachko = f_lie_char(n);
  report.checks.push_back(make_check("top_weight_slice", klyachko.slice(n),
                                     q_coefficient_slice(f, n - 1)));

  // (iv) next-weight slice (q^{n-3} minus q^{n-1}) for Lie2 only.
  MultiplicityCheck next;
  next.name = "next_weight_slice";
  if (op == Operad::lie2) {
    SymQ expected(n);
    for (int k = 2; k <= n - 1; ++k) {
      SymQ t = klyachko.slice(k);
      for (int i = 0; i < n - k; ++i) t *= SymQ::p(1, n);
      expected += t;
    }
    SymQ actual = q_coefficient_slice(f, n - 3) - q_coefficient_slice(f, n - 1);
    next = make_check("next_weight_slice", expected, actual);
  } else {
    next.applicable = false;
    next.expected = "n/a";
    next.actual = "n/a";
    next.pass = true;
  }
  report.checks.push_back(std::move(next));
  return report;
}

Rational residue_closed_form(const Rational& a, const Rational& b, int n) {
  if (n < 1) throw std::invalid_argument("residue: n must be >= 1");
  if (b.is_zero()) throw std::invalid_argument("residue: b must be nonzero");
  Rational numer(1);
  for (int j = 1; j <= n - 1; ++j) numer *= a - b * Rational(j);
  return numer / (pow_int(b, static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n - 1)));
}

Rational residue_series_oracle(const Rational& a, const Rational& b, int n) {
  if (n < 1) throw std::invalid_argument("residue: n must be >= 1");
  if (b.is_zero()) throw std::invalid_argument("residue: b must be nonzero");
  // exp(az)/(exp(bz)-1)^n = exp(az) * u(z)^-1 * z^-n with
  // u = ((exp(bz)-1)/z)^n; the residue is the coefficient of z^{n-1} in
  // exp(az) * u^-1. Plain truncated power series in z suffice.
  const int N = n;  // need degrees 0..n-1
  auto mul = [N](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    std::vector<Rational> out(static_cast<std::size_t>(N), Rational(0));
    for (int i = 0; i < N; ++i)
      for (int j = 0; i + j < N; ++j) out[i + j] += x[i] * y[j];
    return out;
  };
  std::vector<Rational> base(static_cast<std::size_t>(N), Rational(0));
  for (int j = 0; j < N; ++j)
    base[j] = pow_int(b, static_cast<unsigned>(j + 1)) / factorial(static_cast<unsigned>(j + 1));
  std::vector<Rational> u(static_cast<std::size_t>(N), Rational(0));
  u[0] = Rational(1);
  for (int rep = 0; rep < n; ++rep) u = mul(u, base);
  std::vector<Rational> v(static_cast<std::size_t>(N), Rational(0));
  v[0] = Rational(1) / u[0];
  for (int k = 1; k < N; ++k) {
    Rational s(0);
    for (int i = 1; i <= k; ++i) s += u[i] * v[k - i];
    v[k] = -s / u[0];
  }
  Rational res(0);
  for (int i = 0; i < N; ++i)
    res += pow_int(a, static_cast<unsigned>(i)) / factorial(static_cast<unsigned>(i)) * v[N - 1 - i];
  return res;
}

}  // namespace biham
