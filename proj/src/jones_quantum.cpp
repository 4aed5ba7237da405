#include "platjones/jones_quantum.hpp"

#include <cmath>

namespace platjones {

std::complex<double> plat_amplitude(const PathRepresentation<double>& rep, const BraidWord& b) {
  ComplexVector<double> psi = cap_state<double>(rep.basis_ptr()).amplitudes();
  rep.apply(b, psi);
  return psi(static_cast<Eigen::Index>(rep.basis().cap_index()));
}

std::complex<double> plat_amplitude(const BraidWord& b, int k) {
  return plat_amplitude(PathRepresentation<double>(b.half_strands(), k), b);
}

std::complex<double> jones_factor(const RootOfUnity<double>& root, int writhe, int n) {
  return std::pow(-root.A, -3 * writhe) * std::pow(root.d, n - 1);
}

std::complex<double> jones_via_path_model(const PathRepresentation<double>& rep, const BraidWord& b) {
  return jones_factor(rep.root(), writhe(b), b.half_strands()) * plat_amplitude(rep, b);
}

std::complex<double> jones_via_path_model(const BraidWord& b, int k) {
  return jones_via_path_model(PathRepresentation<double>(b.half_strands(), k), b);
}

double relative_error(std::complex<double> reference, std::complex<double> value) {
  const double diff = std::abs(reference - value);
  const double scale = std::abs(reference);
  return scale < 1e-12 ? diff : diff / scale;
}

JonesComparison cross_check(const PathRepresentation<double>& rep, const BraidWord& b, int budget) {
  rep.check_word(b);
  const PlatDiagram diagram(b);
  LaurentPolynomial poly = jones_from_bracket(kauffman_bracket(b, budget), diagram.writhe());
  const std::complex<double> oracle = poly.evaluate(rep.root().A);
  const std::complex<double> path =
      jones_factor(rep.root(), diagram.writhe(), b.half_strands()) * plat_amplitude(rep, b);
  const double rel = relative_error(oracle, path);
  return JonesComparison{b,
                         rep.basis().k(),
                         diagram.writhe(),
                         diagram.component_count(),
                         std::move(poly),
                         oracle,
                         path,
                         std::abs(oracle - path),
                         rel,
                         rel > kJonesRelTolerance};
}

JonesComparison cross_check(const BraidWord& b, int k, int budget) {
  return cross_check(PathRepresentation<double>(b.half_strands(), k), b, budget);
}

}  // namespace platjones
