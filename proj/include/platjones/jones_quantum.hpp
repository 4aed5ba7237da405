#ifndef PLATJONES_JONES_QUANTUM_HPP
#define PLATJONES_JONES_QUANTUM_HPP

#include <complex>
#include <optional>

#include "platjones/braid.hpp"
#include "platjones/laurent.hpp"
#include "platjones/path_model.hpp"
#include "platjones/skein.hpp"

namespace platjones {

inline constexpr double kJonesRelTolerance = 1e-9;

/// ⟨cap|ρ_k(b)|cap⟩.
std::complex<double> plat_amplitude(const PathRepresentation<double>& rep, const BraidWord& b);
std::complex<double> plat_amplitude(const BraidWord& b, int k);

/// (−A)^{−3w}·d^{n−1}, the factor turning the plat amplitude into V(ω).
std::complex<double> jones_factor(const RootOfUnity<double>& root, int writhe, int n);

std::complex<double> jones_via_path_model(const PathRepresentation<double>& rep, const BraidWord& b);
std::complex<double> jones_via_path_model(const BraidWord& b, int k);

/// |a − b| / |a|, falling back to the absolute error when |a| < 1e-12.
double relative_error(std::complex<double> reference, std::complex<double> value);

struct JonesComparison {
  BraidWord braid;
  int k;
  int writhe;
  std::size_t components;
  LaurentPolynomial oracle_polynomial;
  std::complex<double> via_oracle;
  std::complex<double> via_path_model;
  double abs_error;
  double rel_error;
  bool flagged;  // rel_error above kJonesRelTolerance
};

JonesComparison cross_check(const PathRepresentation<double>& rep, const BraidWord& b,
                            int budget = default_oracle_budget());
JonesComparison cross_check(const BraidWord& b, int k, int budget = default_oracle_budget());

}  // namespace platjones

#endif  // PLATJONES_JONES_QUANTUM_HPP
