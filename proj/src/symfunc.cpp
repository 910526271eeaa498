#include "symfunc.hpp"

namespace biham {

void trim_exponents(Exponents& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int degree_of(const Exponents& v) {
  int d = 0;
  for (std::size_t i = 0; i < v.size(); ++i) d += static_cast<int>(i + 1) * v[i];
  return d;
}

Rational z_of(const Exponents& v) {
  Rational z(1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    z *= pow_int(Rational(static_cast<long>(i + 1)), static_cast<unsigned>(v[i]));
    z *= factorial(static_cast<unsigned>(v[i]));
  }
  return z;
}

namespace {

void gen_vectors(int remaining, int max_part, Exponents& acc,
                 std::vector<Exponents>& out) {
  if (remaining == 0) {
    Exponents v = acc;
    trim_exponents(v);
    out.push_back(std::move(v));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    acc[part - 1] += 1;
    gen_vectors(remaining - part, part, acc, out);
    acc[part - 1] -= 1;
  }
}

}  // namespace

std::vector<Exponents> exponent_vectors_of_degree(int n) {
  std::vector<Exponents> out;
  if (n < 0) return out;
  if (n == 0) {
    out.push_back(Exponents{});
    return out;
  }
  Exponents acc(static_cast<std::size_t>(n), 0);
  gen_vectors(n, n, acc, out);
  std::sort(out.begin(), out.end(), ExponentsLess{});
  return out;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  if (n < 0) throw std::invalid_argument("set_partitions: negative n");
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> current;
  // Insert elements in order; each goes into an existing block or a new one,
  // which keeps blocks ordered by minimal element.
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.push_back(current);
      return;
    }
    const std::size_t nblocks = current.size();  // recursion grows the vector
    for (std::size_t b = 0; b < nblocks; ++b) {
      current[b].push_back(next);
      self(self, next + 1);
      current[b].pop_back();
    }
    current.push_back({next});
    self(self, next + 1);
    current.pop_back();
  };
  if (n == 0) return out;
  rec(rec, 1);
  return out;
}

int moebius(int n) {
  if (n < 1) throw std::invalid_argument("moebius: n must be >= 1");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

SymQ h_series(int truncation) {
  SymQ s(truncation);
  for (int k = 1; k <= truncation; ++k) {
    Exponents v(k, 0);
    v[k - 1] = 1;
    s.add_term(std::move(v), Rational(1, k));
  }
  SymQ e = exp_series(s);
  e.set(Exponents{}, Rational(0));  // drop the constant: sum_{k>=1} h_k
  return e;
}

SymQ moebius_forward(const SymQ& b) {
  return weighted_forward(b, [](int) { return Rational(1); });
}

SymQ moebius_invert(const SymQ& a) {
  return weighted_invert(a, [](int) { return Rational(1); });
}

namespace {
// (q^k - q^{-k}) / (k (q - q^{-1})), a Laurent polynomial: [k]_q / k.
LaurentPoly q_weight(int k) {
  return sl2_irreducible_char(k) * Rational(1, k);
}
}  // namespace

SymL q_moebius_forward(const SymL& b) { return weighted_forward(b, q_weight); }

SymL q_moebius_invert(const SymL& a) { return weighted_invert(a, q_weight); }

SymL to_laurent(const SymQ& f) {
  SymL out(f.truncation());
  for (const auto& [v, c] : f.terms()) out.add_term(v, LaurentPoly(c));
  return out;
}

SymQ at_q_one(const SymL& f) {
  SymQ out(f.truncation());
  for (const auto& [v, c] : f.terms()) out.add_term(v, c.eval_at_one());
  return out;
}

SymQ q_coefficient_slice(const SymL& f, int e) {
  SymQ out(f.truncation());
  for (const auto& [v, c] : f.terms()) out.add_term(v, c.coefficient(e));
  return out;
}

}  // namespace biham
