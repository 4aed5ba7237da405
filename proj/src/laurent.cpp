#include "platjones/laurent.hpp"

#include <stdexcept>

namespace platjones {

LaurentPolynomial::LaurentPolynomial(long long constant) {
  if (constant != 0) terms_.emplace(0, Coefficient(constant));
}

LaurentPolynomial LaurentPolynomial::monomial(Coefficient coefficient, int exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPolynomial::Coefficient LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

void LaurentPolynomial::add_term(int exponent, const Coefficient& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::shifted(int shift) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::mirrored() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
  LaurentPolynomial result(1);
  LaurentPolynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  LaurentPolynomial product;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) product.add_term(e1 + e2, c1 * c2);
  }
  terms_ = std::move(product.terms_);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPolynomial::Coefficient LaurentPolynomial::value_at_one() const {
  Coefficient sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest power first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Coefficient magnitude = negative ? Coefficient(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = magnitude == 1;
    if (!unit || e == 0) out += magnitude.str();
    if (e != 0) {
      out += "A";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace platjones
