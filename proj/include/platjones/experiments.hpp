#ifndef PLATJONES_EXPERIMENTS_HPP
#define PLATJONES_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "platjones/braid.hpp"
#include "platjones/path_model.hpp"

namespace platjones {

inline constexpr std::size_t kDistributionDimLimit = 2000;
inline constexpr std::size_t kMomentOperatorLimit = 2401;  // d⁴, i.e. d ≤ 7

// ---------------------------------------------------------------------------
// Output distributions

/// Pr[x] = |⟨x|ρ_k(b)|cap⟩|² over the path basis.
struct OutputDistribution {
  BasisPtr basis;
  std::vector<double> probabilities;

  std::size_t cap_index() const { return basis->cap_index(); }
  double total() const;
};

OutputDistribution output_distribution(const PathRepresentation<double>& rep, const BraidWord& b);
OutputDistribution output_distribution(const BraidWord& b, int k);

/// Counts of N i.i.d. inverse-CDF draws from `probabilities`.
std::vector<std::uint64_t> sample_outcomes(std::span<const double> probabilities, std::uint64_t draws,
                                           std::uint64_t seed);
inline std::vector<std::uint64_t> sample_outcomes(const OutputDistribution& dist, std::uint64_t draws,
                                                  std::uint64_t seed) {
  return sample_outcomes(dist.probabilities, draws, seed);
}

/// Counts normalized to frequencies.
std::vector<double> empirical_distribution(std::span<const std::uint64_t> counts);

struct Distance {
  double l1;  // Σ|p_i − q_i|
  double tv;  // l1 / 2
};

Distance l1_distance(std::span<const double> p, std::span<const double> q);

// ---------------------------------------------------------------------------
// Random-braid experiments

enum class BetaMode { cap, random };

struct ExperimentConfig {
  int n = 2;
  int k = 5;
  int t = 2;
  double epsilon = 0.1;
  double gamma = 0.5;
  double lambda = 1.0;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  BetaMode beta = BetaMode::cap;
  /// Overrides design_length(n, ε, t, λ) when set.
  std::optional<std::int64_t> length;
  unsigned workers = 1;

  /// Throws ConfigError naming the violated bound.
  void validate() const;
  std::int64_t braid_length() const;
  int strands() const { return 2 * n; }
};

/// The fixed vector |β⟩ of a configuration: the cap state, or a seeded
/// Gaussian unit vector.
ComplexVector<double> beta_vector(const PathBasis& basis, BetaMode mode, std::uint64_t seed);

/// |⟨cap|ρ_k(b_i)|β⟩|² for the N random braids of the configuration; braid i
/// is random_braid(2n, L, derive_seed(seed, i)), independent of `workers`.
std::vector<double> amplitude_ensemble(const PathRepresentation<double>& rep, const ExperimentConfig& cfg);

/// 1/binom(k+d−1, d−1), with the binomial computed exactly.
double haar_moment(int k_moment, std::size_t dim);

struct MomentReport {
  int k_moment;
  double empirical;
  double haar_value;
  double ratio;
  double standard_error;
  std::uint64_t samples;
  std::uint64_t seed;
  std::int64_t length;
  std::size_t dim;
  /// E|⟨α|ρ(b)|β⟩|^{2k} from the exact moment operator, when computable.
  std::optional<double> exact;
};

std::vector<MomentReport> estimate_design_moments(const ExperimentConfig& cfg);
std::vector<MomentReport> moments_from_ensemble(std::span<const double> ensemble, const ExperimentConfig& cfg,
                                                std::size_t dim, std::int64_t length);

// ---------------------------------------------------------------------------
// Exact second-moment operator

/// Projector onto span{|I⟩, |F⟩} ⊂ (C^d)^{⊗4}: the Haar average of
/// U⊗U⊗Ū⊗Ū. Index of (a, b, c, e) is ((a·d + b)·d + c)·d + e.
ComplexMatrix<double> haar_second_moment_projector(std::size_t dim);

/// M = mean over the 2(2n−1) signed generators g of ρ(g)⊗ρ(g)⊗ρ̄(g)⊗ρ̄(g)
/// and its distance to the Haar projector P. The generator set is closed
/// under inverses, so M is Hermitian and MP = PM = P; hence
/// M^L − P = (M − P)^L for L ≥ 1 and the operator-norm gap is r^L with r
/// the spectral radius of M − P.
class MomentOperator {
 public:
  explicit MomentOperator(const PathRepresentation<double>& rep);

  std::size_t dim() const { return dim_; }
  const ComplexMatrix<double>& matrix() const { return moment_; }
  const ComplexMatrix<double>& first_moment() const { return first_; }
  const ComplexMatrix<double>& haar_projector() const { return projector_; }

  /// Spectral radius of M − P.
  double subleading_modulus() const { return subleading_; }

  /// ‖M^L − P‖ (operator norm).
  double gap(std::int64_t length) const;
  /// ‖M^L − P‖ by explicit matrix powers; slow, for validation.
  double gap_by_power(std::int64_t length) const;

  /// E|⟨α|ρ(b)|β⟩|^{2k} over random braids of the given length, k ∈ {1, 2}.
  double exact_moment(int k_moment, std::int64_t length, const ComplexVector<double>& alpha,
                      const ComplexVector<double>& beta) const;

  /// Smallest L with gap(L) ≤ epsilon.
  std::int64_t min_length(double epsilon) const;

  /// ‖M₁^L − P₁‖ for the first-moment operator M₁ = mean ρ(g)⊗ρ̄(g).
  double first_gap(std::int64_t length) const;

  /// Relative accuracy certified for the monomials |⟨α|U|β⟩|^{2k}, k ≤ 2,
  /// at every pair of unit vectors: max_k gap_k(L)·binom(k+d−1, d−1).
  double relative_accuracy(std::int64_t length) const;
  /// Smallest L with relative_accuracy(L) ≤ epsilon.
  std::int64_t min_relative_length(double epsilon) const;

 private:
  std::size_t dim_;
  ComplexMatrix<double> first_;
  ComplexMatrix<double> moment_;
  ComplexMatrix<double> first_projector_;
  ComplexMatrix<double> projector_;
  double identity_gap_;
  double subleading_;
  double first_subleading_;
};

double exact_moment_gap(int n, int k, std::int64_t length);

struct LambdaCalibration {
  int n;
  int k;
  std::size_t dim;
  double epsilon;
  double lambda_step;
  double subleading_modulus;
  std::int64_t min_length;     // smallest L with gap ≤ ε
  double lambda;               // smallest grid λ with gap(design_length) ≤ ε
  std::int64_t design_length;  // design_length(n, ε, 2, λ)
  double gap_at_length;
  // Same search against relative_accuracy(L) ≤ ε, the multiplicative
  // monomial condition the anti-concentration argument consumes.
  std::int64_t relative_min_length;
  double relative_lambda;
  std::int64_t relative_design_length;
  double relative_accuracy_at_length;
};

/// Smallest λ on the grid {step, 2·step, …} whose t = 2 design length brings
/// the exact gap to at most ε, and likewise for the certified relative
/// accuracy.
LambdaCalibration calibrate_lambda(const MomentOperator& op, int n, int k, double epsilon,
                                   double lambda_step = 0.01);
LambdaCalibration calibrate_lambda(int n, int k, double epsilon, double lambda_step = 0.01);

// ---------------------------------------------------------------------------
// Anti-concentration and Paley-Zygmund

/// (1−ε−γ)²/(2(1+ε)).
double anticoncentration_bound(double epsilon, double gamma);

struct AntiConcentrationRow {
  double gamma;
  double threshold;  // γ/d
  double bound;
  double empirical;
  double standard_error;
  bool applicable;   // 0 < γ < 1 − ε for the ε in use
  bool passes;       // empirical ≥ bound − 3·stderr
};

struct AntiConcentrationReport {
  std::size_t dim;
  std::int64_t length;
  double epsilon_used;
  std::string epsilon_source;  // "exact_moment_operator" or "config"
  std::vector<AntiConcentrationRow> rows;
};

AntiConcentrationReport anticoncentration_fraction(const ExperimentConfig& cfg,
                                                   std::span<const double> gammas);
AntiConcentrationReport anticoncentration_fraction(const ExperimentConfig& cfg);
AntiConcentrationReport anticoncentration_from_ensemble(std::span<const double> ensemble, std::size_t dim,
                                                        std::int64_t length, double epsilon,
                                                        std::string epsilon_source,
                                                        std::span<const double> gammas);

struct PaleyZygmundReport {
  double theta;
  std::size_t samples;
  double probability;    // Pr[Z > θ·E[Z]]
  double mean;
  double second_moment;
  double bound;          // (1−θ)²E[Z]²/E[Z²]
  double slack;          // probability − bound
  double standard_error;
  bool passes;           // slack ≥ −3·stderr
};

PaleyZygmundReport paley_zygmund_check(std::span<const double> samples, double theta);

}  // namespace platjones

#endif  // PLATJONES_EXPERIMENTS_HPP
