#ifndef PLATJONES_LAURENT_HPP
#define PLATJONES_LAURENT_HPP

#include <complex>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace platjones {

/// Exact Laurent polynomial in one variable (the Kauffman variable A) with
/// arbitrary-precision integer coefficients. Zero coefficients are never
/// stored.
class LaurentPolynomial {
 public:
  using Coefficient = boost::multiprecision::cpp_int;
  using Terms = std::map<int, Coefficient>;

  LaurentPolynomial() = default;
  /// Constant polynomial.
  LaurentPolynomial(long long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPolynomial monomial(Coefficient coefficient, int exponent);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// Multiply by A^shift.
  LaurentPolynomial shifted(int shift) const;
  /// p(A) ↦ p(A⁻¹).
  LaurentPolynomial mirrored() const;
  LaurentPolynomial pow(unsigned exponent) const;

  void add_term(int exponent, const Coefficient& coefficient);

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out = a;
    return out *= b;
  }
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Exact value at A = 1 (sum of coefficients).
  Coefficient value_at_one() const;

  template <typename Real>
  std::complex<Real> evaluate(std::complex<Real> a) const {
    std::complex<Real> sum{0, 0};
    for (const auto& [exponent, c] : terms_) {
      sum += c.template convert_to<Real>() * std::pow(a, exponent);
    }
    return sum;
  }

  /// Human-readable form such as "-A^4 - A^-4".
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace platjones

#endif  // PLATJONES_LAURENT_HPP
