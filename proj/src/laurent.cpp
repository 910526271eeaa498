#include "laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace biham {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::q_power(int exp, Rational coeff) {
  LaurentPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(exp, std::move(coeff));
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational LaurentPoly::coefficient(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("LaurentPoly: min_exp of zero");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("LaurentPoly: max_exp of zero");
  return terms_.rbegin()->first;
}

void LaurentPoly::set(int exp, Rational c) {
  if (c.is_zero())
    terms_.erase(exp);
  else
    terms_[exp] = std::move(c);
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k < 1) throw std::invalid_argument("LaurentPoly: substitution power must be >= 1");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * k, c);
  return out;
}

Rational LaurentPoly::eval_at_one() const {
  Rational s;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::is_palindromic() const {
  for (const auto& [e, c] : terms_)
    if (coefficient(-e) != c) return false;
  return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(ea + eb, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly acc{Rational(1)};
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

std::optional<LaurentPoly> LaurentPoly::try_divide(const LaurentPoly& a,
                                                   const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly{};
  // Long division from the top exponent, equivalent to ordinary polynomial
  // division after shifting both operands by their minimal exponents.
  const int sa = a.min_exp();
  const int sb = b.min_exp();
  const int db = b.max_exp();
  const Rational& lead_b = b.terms_.rbegin()->second;
  LaurentPoly rem = a;
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exp() - sa >= db - sb) {
    Rational f = rem.terms_.rbegin()->second / lead_b;
    LaurentPoly t = q_power(rem.max_exp() - db, f);
    quot += t;
    rem -= t * b;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest power first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    const int e = it->first;
    if (e == 0) {
      os << c.str();
    } else {
      if (!c.is_one()) os << c.str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly sl2_irreducible_char(int n) {
  if (n < 1) throw std::invalid_argument("sl2_irreducible_char: n must be >= 1");
  LaurentPoly chi;
  for (int w = n - 1; w >= 1 - n; w -= 2) chi += LaurentPoly::q_power(w);
  return chi;
}

}  // namespace biham
