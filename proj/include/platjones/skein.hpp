#ifndef PLATJONES_SKEIN_HPP
#define PLATJONES_SKEIN_HPP

#include <complex>
#include <cstddef>
#include <cstdint>

#include "platjones/braid.hpp"
#include "platjones/laurent.hpp"

namespace platjones {

inline constexpr int kDefaultOracleBudget = 24;

/// Crossing budget for the state sum; PLATJONES_ORACLE_BUDGET overrides the
/// built-in default of 24.
int default_oracle_budget();

/// Number of terms the bracket state sum visits: 2^length.
std::uint64_t state_sum_terms(const BraidWord& b);

/// The loop value d = −A² − A⁻².
LaurentPolynomial loop_value();

/// Kauffman bracket of the plat closure, normalized so the unknot is 1.
///
/// Every crossing is resolved both ways: σ_i contributes A·(identity
/// smoothing) + A⁻¹·(cup-cap smoothing), σ_i⁻¹ the same with A ↔ A⁻¹. Each
/// state weighs A^{a−b}·d^{loops−1} with loops counted by union-find over the
/// strand segments of the closed diagram. Throws OracleBudgetError when the
/// word is longer than `budget`.
LaurentPolynomial kauffman_bracket(const BraidWord& b, int budget = default_oracle_budget());

/// (−A)^{−3w}·bracket.
LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int writhe);

/// Jones polynomial of the plat closure as a Laurent polynomial in A
/// (t = A⁻⁴), oriented as traced by PlatDiagram.
LaurentPolynomial jones_oracle(const BraidWord& b, int budget = default_oracle_budget());

/// Substitute A = i·exp(−iπ/(2k)).
std::complex<double> evaluate_at(const LaurentPolynomial& poly, int k);

struct SkeinResidual {
  std::size_t site = 0;
  /// False when the two strands at `site` run in opposite directions; then
  /// deleting the letter is not the oriented smoothing and nothing is checked.
  bool applicable = false;
  /// (A⁻² − A²)·V₀ − A⁴·V₊ + A⁻⁴·V₋ as an exact polynomial (zero when the
  /// relation holds identically).
  LaurentPolynomial exact_residual;
  /// The same expression evaluated at the k-th root.
  std::complex<double> residual{0.0, 0.0};
};

/// Check ω⁻¹V(L₊) − ωV(L₋) = (ω^{1/2} − ω^{−1/2})V(L₀) at one letter of `b`.
/// L₊ and L₋ replace the letter by σ_{|g|}^{±1}, L₀ deletes it and inherits
/// the orientation of L₊.
SkeinResidual skein_residual(const BraidWord& b, std::size_t site, int k,
                             int budget = default_oracle_budget());

}  // namespace platjones

#endif  // PLATJONES_SKEIN_HPP
