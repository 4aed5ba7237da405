#ifndef PLATJONES_PATH_MODEL_HPP
#define PLATJONES_PATH_MODEL_HPP

#include <cmath>
#include <complex>
#include <cstdlib>
#include <memory>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "platjones/braid.hpp"
#include "platjones/errors.hpp"
#include "platjones/path_basis.hpp"
#include "platjones/root_of_unity.hpp"

namespace platjones {

inline constexpr std::size_t kDenseDimLimit = 200;

template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using SparseComplexMatrix = Eigen::SparseMatrix<std::complex<Real>>;

using BasisPtr = std::shared_ptr<const PathBasis>;

inline BasisPtr make_basis(int n, int k) { return std::make_shared<const PathBasis>(n, k); }

/// sin(πℓ/k), the weight of vertex ℓ of G_k.
template <typename Real>
Real vertex_weight(int vertex, int k) {
  return std::sin(std::numbers::pi_v<Real> * vertex / k);
}

/// Linear operator on the span of a PathBasis.
template <typename Real = double>
class RepOperator {
 public:
  using Complex = std::complex<Real>;
  using Matrix = SparseComplexMatrix<Real>;

  RepOperator(BasisPtr basis, Matrix matrix) : basis_(std::move(basis)), matrix_(std::move(matrix)) {}

  const PathBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const Matrix& matrix() const { return matrix_; }
  ComplexMatrix<Real> dense() const { return ComplexMatrix<Real>(matrix_); }
  std::size_t dim() const { return basis_->dim(); }

  RepOperator adjoint() const { return RepOperator(basis_, Matrix(matrix_.adjoint())); }

 private:
  BasisPtr basis_;
  Matrix matrix_;
};

/// Amplitudes over a PathBasis.
template <typename Real = double>
class StateVector {
 public:
  using Complex = std::complex<Real>;

  StateVector(BasisPtr basis, ComplexVector<Real> amplitudes)
      : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amplitudes_.size()) != basis_->dim()) {
      throw DimensionError("state vector length does not match basis dimension");
    }
  }

  const PathBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const ComplexVector<Real>& amplitudes() const { return amplitudes_; }
  ComplexVector<Real>& amplitudes() { return amplitudes_; }
  Real norm() const { return amplitudes_.norm(); }

 private:
  BasisPtr basis_;
  ComplexVector<Real> amplitudes_;
};

namespace detail {

inline void check_generator(int i, const PathBasis& basis) {
  if (i < 1 || i > basis.steps_per_path() - 1) {
    throw BraidError("generator index " + std::to_string(i) + " out of range for B_" +
                     std::to_string(basis.steps_per_path()));
  }
}

}  // namespace detail

/// Temperley-Lieb generator E_i (1-based) in the path model. It sees only the
/// heights around step i: paths with h_{i−1} ≠ h_{i+1} are annihilated, and
/// for h_{i−1} = h_{i+1} = z (vertex ℓ = z+1) the valley and peak variants
/// mix through
///   (1/λ_ℓ)·[[λ_{ℓ−1}, √(λ_{ℓ−1}λ_{ℓ+1})], [√(λ_{ℓ−1}λ_{ℓ+1}), λ_{ℓ+1}]].
/// Variants above the height cap carry weight λ_k = 0 and never appear.
template <typename Real = double>
RepOperator<Real> tl_generator(int i, const BasisPtr& basis) {
  detail::check_generator(i, *basis);
  using Complex = std::complex<Real>;
  const int k = basis->k();
  const auto dim = static_cast<Eigen::Index>(basis->dim());
  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(2 * basis->dim());
  std::vector<std::int8_t> variant(static_cast<std::size_t>(basis->steps_per_path()));

  for (std::size_t col = 0; col < basis->dim(); ++col) {
    const int left = basis->height(col, i - 1);
    const int right = basis->height(col, i + 1);
    if (left != right) continue;
    const int vertex = left + 1;
    const Real lam = vertex_weight<Real>(vertex, k);
    const Real lam_down = vertex_weight<Real>(vertex - 1, k);
    const Real lam_up = vertex_weight<Real>(vertex + 1, k);
    const Real mixed = std::sqrt(lam_down * lam_up) / lam;
    const bool is_peak = basis->height(col, i) > left;

    const auto steps = basis->steps(col);
    std::copy(steps.begin(), steps.end(), variant.begin());
    variant[i - 1] = static_cast<std::int8_t>(-variant[i - 1]);
    variant[i] = static_cast<std::int8_t>(-variant[i]);
    const auto partner = basis->index_of(variant);

    const Real diagonal = (is_peak ? lam_up : lam_down) / lam;
    entries.emplace_back(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col), diagonal);
    if (partner) {
      entries.emplace_back(static_cast<Eigen::Index>(*partner), static_cast<Eigen::Index>(col), mixed);
    }
  }
  typename RepOperator<Real>::Matrix matrix(dim, dim);
  matrix.setFromTriplets(entries.begin(), entries.end());
  return RepOperator<Real>(basis, std::move(matrix));
}

/// ρ_k(σ_i) = A·I + A⁻¹·E_i and ρ_k(σ_i⁻¹) = ρ_k(σ_i)†.
template <typename Real = double>
RepOperator<Real> braid_generator_rep(int i, int sign, const BasisPtr& basis) {
  if (sign != 1 && sign != -1) throw BraidError("generator sign must be +1 or -1");
  const RootOfUnity<Real> root(basis->k());
  const auto E = tl_generator<Real>(i, basis);
  typename RepOperator<Real>::Matrix identity(E.matrix().rows(), E.matrix().cols());
  identity.setIdentity();
  const std::complex<Real> a = sign > 0 ? root.A : std::conj(root.A);
  const std::complex<Real> a_inv = Real(1) / a;
  typename RepOperator<Real>::Matrix rho = a * identity + a_inv * E.matrix();
  rho.makeCompressed();
  return RepOperator<Real>(basis, std::move(rho));
}

/// Unit vector on the alternating path, the plat-cap state.
template <typename Real = double>
StateVector<Real> cap_state(const BasisPtr& basis) {
  ComplexVector<Real> amplitudes = ComplexVector<Real>::Zero(static_cast<Eigen::Index>(basis->dim()));
  amplitudes(static_cast<Eigen::Index>(basis->cap_index())) = 1;
  return StateVector<Real>(basis, std::move(amplitudes));
}

/// The k-th path-model representation of B_{2n}: a basis plus the images of
/// every signed generator, built once and reused across words.
template <typename Real = double>
class PathRepresentation {
 public:
  using Complex = std::complex<Real>;

  explicit PathRepresentation(BasisPtr basis) : basis_(std::move(basis)), root_(basis_->k()) {
    const int generators = basis_->steps_per_path() - 1;
    for (int i = 1; i <= generators; ++i) {
      forward_.push_back(braid_generator_rep<Real>(i, +1, basis_));
      backward_.push_back(braid_generator_rep<Real>(i, -1, basis_));
    }
  }
  PathRepresentation(int n, int k) : PathRepresentation(make_basis(n, k)) {}

  const PathBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const RootOfUnity<Real>& root() const { return root_; }
  std::size_t dim() const { return basis_->dim(); }
  int strands() const { return basis_->steps_per_path(); }

  /// Image of a single letter (σ_g or σ_{|g|}⁻¹).
  const RepOperator<Real>& generator(int letter) const {
    detail::check_generator(std::abs(letter), *basis_);
    const auto slot = static_cast<std::size_t>(std::abs(letter) - 1);
    return letter > 0 ? forward_[slot] : backward_[slot];
  }

  void check_word(const BraidWord& b) const {
    if (b.strands() != strands()) {
      throw BraidError("braid has " + std::to_string(b.strands()) +
                       " strands but the representation acts on B_" + std::to_string(strands()));
    }
  }

  /// In-place ψ ← ρ(g_L)⋯ρ(g_1)ψ: letters act in reading order.
  void apply(const BraidWord& b, ComplexVector<Real>& psi) const {
    check_word(b);
    ComplexVector<Real> scratch(psi.size());
    for (int g : b.letters()) {
      scratch.noalias() = generator(g).matrix() * psi;
      psi.swap(scratch);
    }
  }

 private:
  BasisPtr basis_;
  RootOfUnity<Real> root_;
  std::vector<RepOperator<Real>> forward_;
  std::vector<RepOperator<Real>> backward_;
};

template <typename Real = double>
StateVector<Real> apply_braid(const PathRepresentation<Real>& rep, const BraidWord& b,
                              StateVector<Real> state) {
  if (state.basis().n() != rep.basis().n() || state.basis().k() != rep.basis().k()) {
    throw DimensionError("state basis does not match the representation");
  }
  rep.apply(b, state.amplitudes());
  return state;
}

template <typename Real = double>
StateVector<Real> apply_braid(const BraidWord& b, StateVector<Real> state) {
  const PathRepresentation<Real> rep(state.basis_ptr());
  return apply_braid(rep, b, std::move(state));
}

/// Dense ρ_k(b) = ρ(g_L)⋯ρ(g_1), so ρ(b₁b₂) = ρ(b₂)·ρ(b₁).
template <typename Real = double>
ComplexMatrix<Real> rep_matrix(const PathRepresentation<Real>& rep, const BraidWord& b) {
  if (rep.dim() > kDenseDimLimit) {
    throw DimensionError("dense representation limited to dimension " +
                         std::to_string(kDenseDimLimit) + ", basis has " + std::to_string(rep.dim()));
  }
  rep.check_word(b);
  const auto dim = static_cast<Eigen::Index>(rep.dim());
  ComplexMatrix<Real> product = ComplexMatrix<Real>::Identity(dim, dim);
  ComplexMatrix<Real> scratch(dim, dim);
  for (int g : b.letters()) {
    scratch.noalias() = rep.generator(g).matrix() * product;
    product.swap(scratch);
  }
  return product;
}

template <typename Real = double>
RepOperator<Real> rep_matrix(const BraidWord& b, const BasisPtr& basis) {
  if (basis->dim() > kDenseDimLimit) {
    throw DimensionError("dense representation limited to dimension " +
                         std::to_string(kDenseDimLimit) + ", basis has " + std::to_string(basis->dim()));
  }
  const PathRepresentation<Real> rep(basis);
  return RepOperator<Real>(basis, rep_matrix(rep, b).sparseView());
}

/// max |(X†X − I)_{ij}|
template <typename Derived>
auto unitarity_defect(const Eigen::MatrixBase<Derived>& x) {
  const auto n = x.rows();
  return (x.adjoint() * x - Derived::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace platjones

#endif  // PLATJONES_PATH_MODEL_HPP
