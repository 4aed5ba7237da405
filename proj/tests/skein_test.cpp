#include <cmath>
#include <cstdlib>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "platjones/braid.hpp"
#include "platjones/errors.hpp"
#include "platjones/laurent.hpp"
#include "platjones/skein.hpp"

namespace pj = platjones;
using pj::LaurentPolynomial;

namespace {

LaurentPolynomial poly(std::initializer_list<std::pair<int, long long>> terms) {
  LaurentPolynomial p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

/// Substitute A = t^{-1/4}; only defined when all exponents are multiples of 4.
std::map<int, long long> in_t(const LaurentPolynomial& p) {
  std::map<int, long long> out;
  for (const auto& [e, c] : p.terms()) {
    EXPECT_EQ(e % 4, 0);
    out[-e / 4] = c.convert_to<long long>();
  }
  return out;
}

}  // namespace

TEST(Laurent, Arithmetic) {
  const auto a = LaurentPolynomial::monomial(1, 1);
  const auto d = -(a * a) - a.pow(2).mirrored();
  EXPECT_EQ(d, poly({{2, -1}, {-2, -1}}));
  EXPECT_EQ((a * a.mirrored()), LaurentPolynomial(1));
  EXPECT_TRUE((d - d).is_zero());
  EXPECT_EQ(d.shifted(3), poly({{5, -1}, {1, -1}}));
  EXPECT_EQ(d.value_at_one(), -2);
  EXPECT_EQ(d.to_string(), "-A^2 - A^-2");
}

TEST(Laurent, EvaluateExamples) {
  EXPECT_NEAR(std::abs(pj::evaluate_at(LaurentPolynomial(1), 7) - std::complex<double>(1, 0)), 0.0, 1e-15);
  for (int k : {3, 5, 7, 8}) {
    const auto a4 = pj::evaluate_at(LaurentPolynomial::monomial(1, 4), k);
    EXPECT_NEAR(std::abs(a4 - std::polar(1.0, -2.0 * std::numbers::pi / k)), 0.0, 1e-14);
  }
}

TEST(Bracket, Examples) {
  EXPECT_EQ(pj::kauffman_bracket(pj::BraidWord(2)), LaurentPolynomial(1));
  EXPECT_EQ(pj::kauffman_bracket(pj::parse_braid_word("1", 2)), poly({{-3, -1}}));
  EXPECT_EQ(pj::kauffman_bracket(pj::parse_braid_word("-1", 2)), poly({{3, -1}}));
  EXPECT_EQ(pj::kauffman_bracket(pj::parse_braid_word("2 2", 4)), poly({{4, -1}, {-4, -1}}));
  EXPECT_EQ(pj::kauffman_bracket(pj::BraidWord(4)), poly({{2, -1}, {-2, -1}}));
}

TEST(Bracket, MatchesGraphWalkOracle) {
  for (int strands : {2, 4, 6}) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto b = pj::random_braid(strands, static_cast<std::size_t>(seed % 9), seed);
      const std::vector<int> letters(b.letters().begin(), b.letters().end());
      EXPECT_EQ(oracle::from_library(pj::kauffman_bracket(b)), oracle::bracket(letters, strands))
          << pj::format_braid_word(b);
    }
  }
}

TEST(Jones, Examples) {
  EXPECT_EQ(pj::jones_oracle(pj::BraidWord(2)), LaurentPolynomial(1));
  EXPECT_EQ(pj::jones_oracle(pj::parse_braid_word("1", 2)), LaurentPolynomial(1));
  EXPECT_EQ(pj::jones_oracle(pj::parse_braid_word("-1 -1 -1", 2)), LaurentPolynomial(1));
  // Trefoil: V(t) = t + t³ − t⁴ or its mirror.
  const auto t = in_t(pj::jones_oracle(pj::parse_braid_word("2 2 2", 4)));
  const std::map<int, long long> right{{1, 1}, {3, 1}, {4, -1}};
  const std::map<int, long long> left{{-1, 1}, {-3, 1}, {-4, -1}};
  EXPECT_TRUE(t == right || t == left);
  const auto mirrored = in_t(pj::jones_oracle(pj::parse_braid_word("-2 -2 -2", 4)));
  EXPECT_TRUE((t == right && mirrored == left) || (t == left && mirrored == right));
}

TEST(Jones, UnlinkAndComponentParity) {
  // c-component unlink: (−A² − A⁻²)^{c−1}; V(1) = (−2)^{c−1} for any link.
  const auto d = poly({{2, -1}, {-2, -1}});
  EXPECT_EQ(pj::jones_oracle(pj::BraidWord(6)), d.pow(2));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto b = pj::random_braid(6, 7, seed);
    const auto c = static_cast<int>(pj::plat_components(b).component_count());
    EXPECT_EQ(pj::jones_oracle(b).value_at_one(), pj::LaurentPolynomial::Coefficient(1 - 2 * ((c - 1) % 2)) *
                                                      pj::LaurentPolynomial::Coefficient(1 << (c - 1)));
  }
}

TEST(Jones, InvariantUnderBraidRelations) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto b = pj::random_braid(6, 5, seed);
    const auto v = pj::jones_oracle(b);
    std::vector<int> base(b.letters().begin(), b.letters().end());
    auto with = [&](std::size_t at, std::vector<int> insert) {
      std::vector<int> w = base;
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(at), insert.begin(), insert.end());
      return pj::BraidWord(6, w);
    };
    const std::size_t mid = base.size() / 2;
    EXPECT_EQ(pj::jones_oracle(with(mid, {3, -3})), v);
    EXPECT_EQ(pj::jones_oracle(with(mid, {-2, 2})), v);
    // σ₁σ₂σ₁ = σ₂σ₁σ₂ and far commutation.
    EXPECT_EQ(pj::jones_oracle(with(mid, {1, 2, 1})), pj::jones_oracle(with(mid, {2, 1, 2})));
    EXPECT_EQ(pj::jones_oracle(with(mid, {1, 4})), pj::jones_oracle(with(mid, {4, 1})));
  }
}

TEST(Skein, KinkResidualVanishes) {
  const auto r = pj::skein_residual(pj::parse_braid_word("1", 2), 0, 5);
  if (r.applicable) {
    EXPECT_TRUE(r.exact_residual.is_zero());
    EXPECT_LT(std::abs(r.residual), 1e-12);
  }
}

TEST(Skein, ResidualVanishesOnRandomBraids) {
  int applicable = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto b = pj::random_braid(4, 1 + seed % 6, seed);
    for (std::size_t site = 0; site < b.length(); ++site) {
      for (int k : {5, 7}) {
        const auto r = pj::skein_residual(b, site, k);
        if (!r.applicable) continue;
        ++applicable;
        EXPECT_TRUE(r.exact_residual.is_zero()) << pj::format_braid_word(b) << " @" << site;
        EXPECT_LT(std::abs(r.residual), 1e-9);
      }
    }
  }
  EXPECT_GT(applicable, 50);
}

TEST(Skein, RejectsBadSite) {
  EXPECT_THROW(pj::skein_residual(pj::parse_braid_word("1", 2), 1, 5), std::invalid_argument);
}

TEST(Oracle, BudgetEnforced) {
  const auto b = pj::random_braid(4, 30, 1);
  EXPECT_THROW(pj::kauffman_bracket(b, 24), pj::OracleBudgetError);
  EXPECT_NO_THROW(pj::kauffman_bracket(pj::random_braid(4, 12, 1), 24));
}
