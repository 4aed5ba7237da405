#include "platjones/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

#include <unsupported/Eigen/KroneckerProduct>

#include "platjones/errors.hpp"
#include "platjones/parallel.hpp"
#include "platjones/rng.hpp"

namespace platjones {

namespace {

using Complex = std::complex<double>;
using Vector = ComplexVector<double>;
using Matrix = ComplexMatrix<double>;

constexpr std::uint64_t kBetaStream = 0xBE7A;
constexpr std::uint64_t kSamplerStream = 0x5A3D;

double mean_of(std::span<const double> xs) {
  return xs.empty() ? 0.0 : std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

/// Standard error of the mean with the N−1 sample variance.
double standard_error_of(std::span<const double> xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double n = static_cast<double>(xs.size());
  return std::sqrt(ss / (n - 1.0) / n);
}

double bernoulli_standard_error(double p, std::size_t n) {
  return n == 0 ? 0.0 : std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n));
}

void check_moment_dimension(std::size_t dim) {
  const std::size_t size = dim * dim * dim * dim;
  if (size > kMomentOperatorLimit) {
    throw DimensionError("second-moment operator needs d^4 <= " + std::to_string(kMomentOperatorLimit) +
                         ", got d = " + std::to_string(dim));
  }
}

bool moment_operator_feasible(std::size_t dim) { return dim * dim * dim * dim <= kMomentOperatorLimit; }

/// Largest |eigenvalue| of a matrix that is Hermitian up to round-off.
double hermitian_norm(const Matrix& m) {
  const Matrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

// ---------------------------------------------------------------------------

double OutputDistribution::total() const {
  return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

OutputDistribution output_distribution(const PathRepresentation<double>& rep, const BraidWord& b) {
  if (rep.dim() > kDistributionDimLimit) {
    throw DimensionError("output distribution limited to dimension " + std::to_string(kDistributionDimLimit) +
                         ", basis has " + std::to_string(rep.dim()));
  }
  Vector psi = cap_state<double>(rep.basis_ptr()).amplitudes();
  rep.apply(b, psi);
  OutputDistribution dist{rep.basis_ptr(), std::vector<double>(rep.dim())};
  for (std::size_t x = 0; x < rep.dim(); ++x) dist.probabilities[x] = std::norm(psi(static_cast<Eigen::Index>(x)));
  return dist;
}

OutputDistribution output_distribution(const BraidWord& b, int k) {
  const auto basis = make_basis(b.half_strands(), k);
  if (basis->dim() > kDistributionDimLimit) {
    throw DimensionError("output distribution limited to dimension " + std::to_string(kDistributionDimLimit) +
                         ", basis has " + std::to_string(basis->dim()));
  }
  return output_distribution(PathRepresentation<double>(basis), b);
}

std::vector<std::uint64_t> sample_outcomes(std::span<const double> probabilities, std::uint64_t draws,
                                           std::uint64_t seed) {
  if (probabilities.empty()) throw std::invalid_argument("cannot sample from an empty distribution");
  std::vector<double> cdf(probabilities.size());
  std::partial_sum(probabilities.begin(), probabilities.end(), cdf.begin());
  const double total = cdf.back();
  if (!(total > 0.0)) throw std::invalid_argument("distribution has no probability mass");
  // Last outcome with positive mass absorbs round-off at the top of the CDF.
  std::size_t last = probabilities.size() - 1;
  while (last > 0 && probabilities[last] <= 0.0) --last;

  CounterRng rng(seed, kSamplerStream);
  std::vector<std::uint64_t> counts(probabilities.size(), 0);
  for (std::uint64_t i = 0; i < draws; ++i) {
    const double u = rng.uniform01() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto x = std::min(static_cast<std::size_t>(it - cdf.begin()), last);
    ++counts[x];
  }
  return counts;
}

std::vector<double> empirical_distribution(std::span<const std::uint64_t> counts) {
  const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  std::vector<double> freq(counts.size(), 0.0);
  if (total == 0.0) return freq;
  for (std::size_t i = 0; i < counts.size(); ++i) freq[i] = static_cast<double>(counts[i]) / total;
  return freq;
}

Distance l1_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("distributions have different support sizes (" + std::to_string(p.size()) +
                                " vs " + std::to_string(q.size()) + ")");
  }
  double l1 = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) l1 += std::abs(p[i] - q[i]);
  return {l1, l1 / 2.0};
}

// ---------------------------------------------------------------------------

void ExperimentConfig::validate() const {
  if (n < 1) throw ConfigError("n must be at least 1");
  if (k < 3) throw ConfigError("k must be at least 3");
  if (t < 1) throw ConfigError("design order t must be at least 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("epsilon must satisfy 0 < epsilon < 1");
  if (!(gamma > 0.0 && gamma < 1.0 - epsilon)) {
    throw ConfigError("gamma must satisfy 0 < gamma < 1 - epsilon (gamma = " + std::to_string(gamma) +
                      ", 1 - epsilon = " + std::to_string(1.0 - epsilon) + ")");
  }
  if (!(lambda > 0.0)) throw ConfigError("lambda must be positive");
  if (samples < 1) throw ConfigError("sample count must be at least 1");
  if (length && *length < 0) throw ConfigError("braid length must be non-negative");
  if (workers < 1) throw ConfigError("worker count must be at least 1");
}

std::int64_t ExperimentConfig::braid_length() const {
  return length ? *length : design_length(n, epsilon, t, lambda);
}

Vector beta_vector(const PathBasis& basis, BetaMode mode, std::uint64_t seed) {
  const auto dim = static_cast<Eigen::Index>(basis.dim());
  Vector beta = Vector::Zero(dim);
  if (mode == BetaMode::cap) {
    beta(static_cast<Eigen::Index>(basis.cap_index())) = 1.0;
    return beta;
  }
  CounterRng rng(seed, kBetaStream);
  std::normal_distribution<double> normal;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    beta(i) = Complex(re, im);
  }
  beta.normalize();
  return beta;
}

std::vector<double> amplitude_ensemble(const PathRepresentation<double>& rep, const ExperimentConfig& cfg) {
  cfg.validate();
  if (rep.basis().n() != cfg.n || rep.basis().k() != cfg.k) {
    throw ConfigError("representation does not match the configured (n, k)");
  }
  const auto length = static_cast<std::size_t>(cfg.braid_length());
  const Vector beta = beta_vector(rep.basis(), cfg.beta, cfg.seed);
  const auto cap = static_cast<Eigen::Index>(rep.basis().cap_index());
  std::vector<double> values(cfg.samples);
  parallel_for(values.size(), cfg.workers, [&](std::size_t i) {
    const BraidWord b = random_braid(cfg.strands(), length, derive_seed(cfg.seed, i));
    Vector psi = beta;
    rep.apply(b, psi);
    values[i] = std::norm(psi(cap));
  });
  return values;
}

double haar_moment(int k_moment, std::size_t dim) {
  if (k_moment < 0 || dim < 1) throw std::invalid_argument("haar_moment needs k >= 0 and d >= 1");
  // binom(k + d − 1, d − 1) = binom(k + d − 1, k)
  boost::multiprecision::cpp_int binom = 1;
  const auto top = static_cast<long long>(k_moment) + static_cast<long long>(dim) - 1;
  for (long long i = 1; i <= k_moment; ++i) {
    binom *= (top - k_moment + i);
    binom /= i;
  }
  return 1.0 / binom.convert_to<double>();
}

std::vector<MomentReport> moments_from_ensemble(std::span<const double> ensemble, const ExperimentConfig& cfg,
                                                std::size_t dim, std::int64_t length) {
  std::optional<MomentOperator> op;
  std::optional<PathRepresentation<double>> rep;
  if (moment_operator_feasible(dim)) {
    rep.emplace(cfg.n, cfg.k);
    op.emplace(*rep);
  }
  std::vector<MomentReport> reports;
  std::vector<double> powers(ensemble.size());
  for (int km = 1; km <= cfg.t; ++km) {
    for (std::size_t i = 0; i < ensemble.size(); ++i) powers[i] = std::pow(ensemble[i], km);
    const double mean = mean_of(powers);
    const double haar = haar_moment(km, dim);
    MomentReport r{km, mean, haar, mean / haar, standard_error_of(powers, mean), cfg.samples, cfg.seed,
                   length, dim, std::nullopt};
    if (op && km <= 2) {
      const Vector alpha = beta_vector(rep->basis(), BetaMode::cap, cfg.seed);
      const Vector beta = beta_vector(rep->basis(), cfg.beta, cfg.seed);
      r.exact = op->exact_moment(km, length, alpha, beta);
    }
    reports.push_back(r);
  }
  return reports;
}

std::vector<MomentReport> estimate_design_moments(const ExperimentConfig& cfg) {
  cfg.validate();
  const PathRepresentation<double> rep(cfg.n, cfg.k);
  const auto ensemble = amplitude_ensemble(rep, cfg);
  return moments_from_ensemble(ensemble, cfg, rep.dim(), cfg.braid_length());
}

// ---------------------------------------------------------------------------

Matrix haar_second_moment_projector(std::size_t dim) {
  check_moment_dimension(dim);
  const auto d = static_cast<Eigen::Index>(dim);
  const Eigen::Index size = d * d * d * d;
  auto index = [d](Eigen::Index a, Eigen::Index b, Eigen::Index c, Eigen::Index e) {
    return ((a * d + b) * d + c) * d + e;
  };
  Vector identity = Vector::Zero(size);
  Vector swap = Vector::Zero(size);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      identity(index(a, b, a, b)) = 1.0;
      swap(index(a, b, b, a)) = 1.0;
    }
  }
  // Gram-Schmidt; for d = 1 the two vectors coincide.
  Matrix projector = Matrix::Zero(size, size);
  const Vector first = identity.normalized();
  projector += first * first.adjoint();
  Vector second = swap - first * first.dot(swap);
  if (second.norm() > 1e-12) {
    second.normalize();
    projector += second * second.adjoint();
  }
  return projector;
}

MomentOperator::MomentOperator(const PathRepresentation<double>& rep) : dim_(rep.dim()) {
  check_moment_dimension(dim_);
  const auto d = static_cast<Eigen::Index>(dim_);
  first_ = Matrix::Zero(d * d, d * d);
  moment_ = Matrix::Zero(d * d * d * d, d * d * d * d);
  const int generators = rep.strands() - 1;
  for (int i = 1; i <= generators; ++i) {
    for (int sign : {1, -1}) {
      const Matrix g = rep.generator(sign * i).dense();
      const Matrix g_bar = g.conjugate();
      first_ += Eigen::kroneckerProduct(g, g_bar).eval();
      const Matrix gg = Eigen::kroneckerProduct(g, g).eval();
      const Matrix gg_bar = Eigen::kroneckerProduct(g_bar, g_bar).eval();
      moment_ += Eigen::kroneckerProduct(gg, gg_bar).eval();
    }
  }
  const double count = 2.0 * generators;
  first_ /= count;
  moment_ /= count;
  projector_ = haar_second_moment_projector(dim_);
  Vector flat_identity = Vector::Zero(d * d);
  for (Eigen::Index a = 0; a < d; ++a) flat_identity(a * d + a) = 1.0;
  flat_identity.normalize();
  first_projector_ = flat_identity * flat_identity.adjoint();

  const double rank = projector_.trace().real();
  identity_gap_ = std::llround(rank) < moment_.rows() ? 1.0 : 0.0;
  subleading_ = hermitian_norm(moment_ - projector_);
  first_subleading_ = hermitian_norm(first_ - first_projector_);
}

double MomentOperator::first_gap(std::int64_t length) const {
  if (length < 0) throw std::invalid_argument("length must be non-negative");
  if (length == 0) return dim_ > 1 ? 1.0 : 0.0;
  return std::pow(first_subleading_, static_cast<double>(length));
}

double MomentOperator::relative_accuracy(std::int64_t length) const {
  return std::max(first_gap(length) / haar_moment(1, dim_), gap(length) / haar_moment(2, dim_));
}

std::int64_t MomentOperator::min_relative_length(double epsilon) const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (relative_accuracy(0) <= epsilon) return 0;
  if (std::max(subleading_, first_subleading_) >= 1.0) {
    throw std::runtime_error("moment operator has no spectral gap; the walk does not converge");
  }
  std::int64_t length = 1;
  while (relative_accuracy(length) > epsilon) length *= 2;
  std::int64_t low = length / 2;  // relative_accuracy(low) > epsilon
  while (length - low > 1) {
    const std::int64_t mid = low + (length - low) / 2;
    (relative_accuracy(mid) <= epsilon ? length : low) = mid;
  }
  return length;
}

double MomentOperator::gap(std::int64_t length) const {
  if (length < 0) throw std::invalid_argument("length must be non-negative");
  if (length == 0) return identity_gap_;
  return std::pow(subleading_, static_cast<double>(length));
}

double MomentOperator::gap_by_power(std::int64_t length) const {
  if (length < 0) throw std::invalid_argument("length must be non-negative");
  Matrix power = Matrix::Identity(moment_.rows(), moment_.cols());
  for (std::int64_t i = 0; i < length; ++i) power = (moment_ * power).eval();
  return hermitian_norm(power - projector_);
}

double MomentOperator::exact_moment(int k_moment, std::int64_t length, const Vector& alpha,
                                    const Vector& beta) const {
  if (length < 0) throw std::invalid_argument("length must be non-negative");
  Vector left;
  Vector state;
  const Matrix* op = nullptr;
  if (k_moment == 1) {
    left = Eigen::kroneckerProduct(alpha, alpha.conjugate()).eval();
    state = Eigen::kroneckerProduct(beta, beta.conjugate()).eval();
    op = &first_;
  } else if (k_moment == 2) {
    const Vector aa = Eigen::kroneckerProduct(alpha, alpha).eval();
    const Vector bb = Eigen::kroneckerProduct(beta, beta).eval();
    left = Eigen::kroneckerProduct(aa, aa.conjugate()).eval();
    state = Eigen::kroneckerProduct(bb, bb.conjugate()).eval();
    op = &moment_;
  } else {
    throw std::invalid_argument("exact moments are available for k = 1 and k = 2 only");
  }
  Vector scratch(state.size());
  for (std::int64_t i = 0; i < length; ++i) {
    scratch.noalias() = (*op) * state;
    state.swap(scratch);
  }
  return left.dot(state).real();
}

std::int64_t MomentOperator::min_length(double epsilon) const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (identity_gap_ <= epsilon) return 0;
  if (subleading_ <= 0.0) return 1;
  if (subleading_ >= 1.0) {
    throw std::runtime_error("moment operator has no spectral gap; the walk does not converge");
  }
  auto length = static_cast<std::int64_t>(std::ceil(std::log(epsilon) / std::log(subleading_)));
  length = std::max<std::int64_t>(length, 1);
  while (length > 1 && gap(length - 1) <= epsilon) --length;
  while (gap(length) > epsilon) ++length;
  return length;
}

double exact_moment_gap(int n, int k, std::int64_t length) {
  const PathRepresentation<double> rep(n, k);
  return MomentOperator(rep).gap(length);
}

LambdaCalibration calibrate_lambda(const MomentOperator& op, int n, int k, double epsilon, double lambda_step) {
  if (!(lambda_step > 0.0)) throw ConfigError("lambda step must be positive");
  // design_length is non-decreasing in λ and both accuracies are
  // non-increasing in L, so the first grid point reaching the target wins.
  auto smallest_lambda = [&](std::int64_t target) -> std::pair<double, std::int64_t> {
    for (std::int64_t j = 1; j <= 100000000; ++j) {
      const double lambda = static_cast<double>(j) * lambda_step;
      const std::int64_t length = design_length(n, epsilon, 2, lambda);
      if (length >= target) return {lambda, length};
    }
    throw std::runtime_error("lambda calibration did not terminate");
  };
  LambdaCalibration cal{};
  cal.n = n;
  cal.k = k;
  cal.dim = op.dim();
  cal.epsilon = epsilon;
  cal.lambda_step = lambda_step;
  cal.subleading_modulus = op.subleading_modulus();
  cal.min_length = op.min_length(epsilon);
  std::tie(cal.lambda, cal.design_length) = smallest_lambda(cal.min_length);
  cal.gap_at_length = op.gap(cal.design_length);
  cal.relative_min_length = op.min_relative_length(epsilon);
  std::tie(cal.relative_lambda, cal.relative_design_length) = smallest_lambda(cal.relative_min_length);
  cal.relative_accuracy_at_length = op.relative_accuracy(cal.relative_design_length);
  return cal;
}

LambdaCalibration calibrate_lambda(int n, int k, double epsilon, double lambda_step) {
  const PathRepresentation<double> rep(n, k);
  return calibrate_lambda(MomentOperator(rep), n, k, epsilon, lambda_step);
}

// ---------------------------------------------------------------------------

double anticoncentration_bound(double epsilon, double gamma) {
  const double slack = 1.0 - epsilon - gamma;
  return slack * slack / (2.0 * (1.0 + epsilon));
}

AntiConcentrationReport anticoncentration_from_ensemble(std::span<const double> ensemble, std::size_t dim,
                                                        std::int64_t length, double epsilon,
                                                        std::string epsilon_source,
                                                        std::span<const double> gammas) {
  AntiConcentrationReport report{dim, length, epsilon, std::move(epsilon_source), {}};
  for (double gamma : gammas) {
    const double threshold = gamma / static_cast<double>(dim);
    const auto above = std::count_if(ensemble.begin(), ensemble.end(), [&](double z) { return z > threshold; });
    const double fraction = ensemble.empty() ? 0.0 : static_cast<double>(above) / static_cast<double>(ensemble.size());
    const double se = bernoulli_standard_error(fraction, ensemble.size());
    const bool applicable = gamma > 0.0 && gamma < 1.0 - epsilon;
    const double bound = applicable ? anticoncentration_bound(epsilon, gamma) : 0.0;
    report.rows.push_back({gamma, threshold, bound, fraction, se, applicable, fraction >= bound - 3.0 * se});
  }
  return report;
}

AntiConcentrationReport anticoncentration_fraction(const ExperimentConfig& cfg, std::span<const double> gammas) {
  cfg.validate();
  for (double gamma : gammas) {
    if (!(gamma > 0.0 && gamma < 1.0 - cfg.epsilon)) {
      throw ConfigError("gamma must satisfy 0 < gamma < 1 - epsilon (gamma = " + std::to_string(gamma) + ")");
    }
  }
  const PathRepresentation<double> rep(cfg.n, cfg.k);
  const std::int64_t length = cfg.braid_length();
  double epsilon = cfg.epsilon;
  std::string source = "config";
  if (moment_operator_feasible(rep.dim())) {
    epsilon = MomentOperator(rep).relative_accuracy(length);
    source = "exact_moment_operator";
  }
  const auto ensemble = amplitude_ensemble(rep, cfg);
  return anticoncentration_from_ensemble(ensemble, rep.dim(), length, epsilon, std::move(source), gammas);
}

AntiConcentrationReport anticoncentration_fraction(const ExperimentConfig& cfg) {
  const double gamma[] = {cfg.gamma};
  return anticoncentration_fraction(cfg, gamma);
}

PaleyZygmundReport paley_zygmund_check(std::span<const double> samples, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw ConfigError("theta must lie in [0, 1]");
  if (samples.empty()) throw std::invalid_argument("Paley-Zygmund check needs at least one sample");
  for (double z : samples) {
    if (z < 0.0 || std::isnan(z)) throw std::invalid_argument("Paley-Zygmund samples must be non-negative");
  }
  const double n = static_cast<double>(samples.size());
  const double mean = mean_of(samples);
  double second = 0.0;
  for (double z : samples) second += z * z;
  second /= n;
  const double cut = theta * mean;
  const auto above = std::count_if(samples.begin(), samples.end(), [&](double z) { return z > cut; });
  const double probability = static_cast<double>(above) / n;
  const double bound = second > 0.0 ? (1.0 - theta) * (1.0 - theta) * mean * mean / second : 0.0;
  const double se = bernoulli_standard_error(probability, samples.size());
  const double slack = probability - bound;
  return {theta, samples.size(), probability, mean, second, bound, slack, se, slack >= -3.0 * se};
}

}  // namespace platjones
