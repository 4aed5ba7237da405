#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "platjones/braid.hpp"
#include "platjones/errors.hpp"
#include "platjones/path_basis.hpp"
#include "platjones/path_model.hpp"

namespace pj = platjones;
using Matrix = pj::ComplexMatrix<double>;

TEST(PathBasis, SmallExamples) {
  const pj::PathBasis one(1, 5);
  ASSERT_EQ(one.dim(), 1U);
  EXPECT_EQ(one.steps(0)[0], 1);
  EXPECT_EQ(one.steps(0)[1], -1);

  const pj::PathBasis two(2, 5);
  ASSERT_EQ(two.dim(), 2U);
  const std::vector<std::int8_t> uudd{1, 1, -1, -1};
  const std::vector<std::int8_t> udud{1, -1, 1, -1};
  EXPECT_EQ(two.index_of(uudd), std::optional<std::size_t>(0));
  EXPECT_EQ(two.index_of(udud), std::optional<std::size_t>(1));

  EXPECT_EQ(pj::PathBasis(4, 5).dim(), 13U);
}

TEST(PathBasis, MatchesTransferMatrixCount) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 3; k <= 10; ++k) {
      const pj::PathBasis basis(n, k);
      EXPECT_EQ(basis.dim(), oracle::walk_count(n, k)) << n << "," << k;
      EXPECT_LE(boost::multiprecision::cpp_int(basis.dim()), pj::catalan(n));
    }
  }
}

TEST(PathBasis, PathsAreValidAndIndexed) {
  const pj::PathBasis basis(5, 6);
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    EXPECT_EQ(basis.height(i, 0), 0);
    EXPECT_EQ(basis.height(i, 10), 0);
    for (int j = 0; j <= 10; ++j) {
      EXPECT_GE(basis.height(i, j), 0);
      EXPECT_LE(basis.height(i, j), 4);
    }
    EXPECT_EQ(basis.index_of(basis.steps(i)), std::optional<std::size_t>(i));
    if (i > 0) {
      const auto prev = basis.steps(i - 1);
      const auto cur = basis.steps(i);
      EXPECT_TRUE(std::lexicographical_compare(prev.begin(), prev.end(), cur.begin(), cur.end(), std::greater<>()));
    }
  }
  const std::vector<std::int8_t> too_high{1, 1, 1, 1, 1, -1, -1, -1, -1, -1};
  EXPECT_FALSE(basis.index_of(too_high).has_value());
}

TEST(Catalan, ExactValues) {
  EXPECT_EQ(pj::catalan(0), 1);
  EXPECT_EQ(pj::catalan(1), 1);
  EXPECT_EQ(pj::catalan(3), 5);
  EXPECT_EQ(pj::catalan(10), 16796);
  const auto table = oracle::catalan_table(30);
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(pj::catalan(n), table[static_cast<std::size_t>(n)]);
  EXPECT_THROW(pj::catalan(-1), std::invalid_argument);
}

TEST(CapState, Examples) {
  const auto single = pj::cap_state<double>(pj::make_basis(1, 5));
  EXPECT_EQ(single.amplitudes().size(), 1);
  EXPECT_DOUBLE_EQ(std::abs(single.amplitudes()(0)), 1.0);

  const auto basis = pj::make_basis(3, 5);
  const auto cap = pj::cap_state<double>(basis);
  // Up-first lexicographic order places UDUDUD last of the five paths.
  EXPECT_EQ(basis->cap_index(), 4U);
  EXPECT_DOUBLE_EQ(cap.norm(), 1.0);
  EXPECT_DOUBLE_EQ(std::abs(cap.amplitudes()(4)), 1.0);
}

class Algebra : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(Algebra, TemperleyLiebRelations) {
  const auto [n, k] = GetParam();
  const auto basis = pj::make_basis(n, k);
  const double d = 2.0 * std::cos(std::numbers::pi / k);
  const int gens = 2 * n - 1;
  std::vector<Matrix> e;
  for (int i = 1; i <= gens; ++i) e.push_back(pj::tl_generator<double>(i, basis).dense());
  for (int i = 0; i < gens; ++i) {
    const auto& ei = e[static_cast<std::size_t>(i)];
    EXPECT_LT((ei * ei - d * ei).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((ei - ei.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    for (int j = 0; j < gens; ++j) {
      const auto& ej = e[static_cast<std::size_t>(j)];
      if (std::abs(i - j) == 1) EXPECT_LT((ei * ej * ei - ei).cwiseAbs().maxCoeff(), 1e-10);
      if (std::abs(i - j) >= 2) EXPECT_LT((ei * ej - ej * ei).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST_P(Algebra, BraidRelationsAndUnitarity) {
  const auto [n, k] = GetParam();
  const pj::PathRepresentation<double> rep(n, k);
  const int gens = 2 * n - 1;
  const auto dim = static_cast<Eigen::Index>(rep.dim());
  for (int i = 1; i <= gens; ++i) {
    const Matrix s = rep.generator(i).dense();
    const Matrix s_inv = rep.generator(-i).dense();
    EXPECT_LT(pj::unitarity_defect(s), 1e-12);
    EXPECT_LT((s * s_inv - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((s_inv - s.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
    for (int j = 1; j <= gens; ++j) {
      const Matrix t = rep.generator(j).dense();
      if (std::abs(i - j) == 1) EXPECT_LT((s * t * s - t * s * t).cwiseAbs().maxCoeff(), 1e-10);
      if (std::abs(i - j) >= 2) EXPECT_LT((s * t - t * s).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST_P(Algebra, GeneratorEigenvalues) {
  const auto [n, k] = GetParam();
  const pj::PathRepresentation<double> rep(n, k);
  const auto a = rep.root().A;
  const std::complex<double> allowed[] = {a, -1.0 / (a * a * a)};
  for (int i = 1; i <= 2 * n - 1; ++i) {
    Eigen::ComplexEigenSolver<Matrix> solver(rep.generator(i).dense());
    for (const auto& lambda : solver.eigenvalues()) {
      EXPECT_LT(std::min(std::abs(lambda - allowed[0]), std::abs(lambda - allowed[1])), 1e-10);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallCases, Algebra,
                         ::testing::Values(std::pair{1, 5}, std::pair{2, 5}, std::pair{3, 5}, std::pair{4, 5},
                                           std::pair{2, 7}, std::pair{3, 7}, std::pair{4, 7}, std::pair{3, 8},
                                           std::pair{4, 8}));

TEST(TlGenerator, BoundaryVertexValueIsLoop) {
  // At height 0 only the peak variant exists: E = λ₂/λ₁ = d on it.
  for (int k : {5, 7}) {
    const auto basis = pj::make_basis(1, k);
    const auto e = pj::tl_generator<double>(1, basis).dense();
    EXPECT_NEAR(e(0, 0).real(), 2.0 * std::cos(std::numbers::pi / k), 1e-14);
  }
}

TEST(TlGenerator, RejectsOutOfRange) {
  const auto basis = pj::make_basis(2, 5);
  EXPECT_THROW(pj::tl_generator<double>(0, basis), pj::BraidError);
  EXPECT_THROW(pj::tl_generator<double>(4, basis), pj::BraidError);
}

TEST(ApplyBraid, IdentityAndInverse) {
  const auto basis = pj::make_basis(3, 7);
  const pj::PathRepresentation<double> rep(basis);
  const auto cap = pj::cap_state<double>(basis);
  const auto same = pj::apply_braid(rep, pj::BraidWord(6), cap);
  EXPECT_EQ(same.amplitudes(), cap.amplitudes());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto b = pj::random_braid(6, 25, seed);
    const auto there = pj::apply_braid(rep, b, cap);
    const auto back = pj::apply_braid(rep, pj::inverse(b), there);
    EXPECT_LT((back.amplitudes() - cap.amplitudes()).norm(), 1e-9);
    EXPECT_NEAR(there.norm(), 1.0, 1e-12);
  }
}

TEST(RepMatrix, CompositionAndSingleLetters) {
  const auto basis = pj::make_basis(3, 5);
  const pj::PathRepresentation<double> rep(basis);
  const auto dim = static_cast<Eigen::Index>(rep.dim());
  EXPECT_EQ(pj::rep_matrix(rep, pj::BraidWord(6)), Matrix::Identity(dim, dim));
  EXPECT_LT((pj::rep_matrix(rep, pj::parse_braid_word("-4", 6)) - rep.generator(-4).dense()).cwiseAbs().maxCoeff(),
            1e-15);
  const auto b1 = pj::random_braid(6, 7, 1);
  const auto b2 = pj::random_braid(6, 9, 2);
  const Matrix lhs = pj::rep_matrix(rep, pj::concat(b1, b2));
  const Matrix rhs = pj::rep_matrix(rep, b2) * pj::rep_matrix(rep, b1);
  EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((pj::rep_matrix(b1, basis).dense() - pj::rep_matrix(rep, b1)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(RepMatrix, RejectsMismatchedStrands) {
  const pj::PathRepresentation<double> rep(2, 5);
  EXPECT_THROW(pj::rep_matrix(rep, pj::parse_braid_word("1", 6)), pj::BraidError);
}

TEST(RepMatrix, LongDoublePrecisionAgrees) {
  const pj::PathRepresentation<double> rep(3, 7);
  const pj::PathRepresentation<long double> rep_ld(3, 7);
  const auto b = pj::random_braid(6, 40, 5);
  const Matrix m = pj::rep_matrix(rep, b);
  const auto m_ld = pj::rep_matrix(rep_ld, b);
  EXPECT_LT((m - m_ld.cast<std::complex<double>>()).cwiseAbs().maxCoeff(), 1e-12);
}
