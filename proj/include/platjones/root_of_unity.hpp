#ifndef PLATJONES_ROOT_OF_UNITY_HPP
#define PLATJONES_ROOT_OF_UNITY_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace platjones {

/// Evaluation point shared by the skein oracle and the path model:
/// ω = exp(2πi/k), A = i·exp(−iπ/(2k)), so that A⁻⁴ = ω and
/// d = −A² − A⁻² = 2cos(π/k).
template <typename Real = double>
struct RootOfUnity {
  using Complex = std::complex<Real>;

  int k;
  Complex omega;
  Complex A;
  Real d;

  explicit RootOfUnity(int order) : k(order) {
    if (order < 1) throw std::invalid_argument("root-of-unity order k must be positive");
    const Real pi = std::numbers::pi_v<Real>;
    omega = std::polar(Real(1), 2 * pi / order);
    A = Complex(0, 1) * std::polar(Real(1), -pi / (2 * order));
    d = 2 * std::cos(pi / order);
  }

  /// ω^{1/2} in the A-convention, i.e. A⁻².
  Complex sqrt_omega() const { return Real(1) / (A * A); }

  /// True for k = 5 and k ≥ 7, where the path-model images are dense.
  bool universal() const { return k == 5 || k >= 7; }
};

}  // namespace platjones

#endif  // PLATJONES_ROOT_OF_UNITY_HPP
