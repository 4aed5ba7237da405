#include "platjones/skein.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "platjones/errors.hpp"
#include "platjones/root_of_unity.hpp"

namespace platjones {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) { reset(); }

  void reset() {
    std::iota(parent_.begin(), parent_.end(), 0);
    sets_ = parent_.size();
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[a] = b;
      --sets_;
    }
  }

  std::size_t sets() const { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t sets_ = 0;
};

/// counts[(exponent + length)·stride + loops] accumulated over a mask range.
void accumulate_states(const BraidWord& b, std::uint64_t first, std::uint64_t last,
                       std::size_t stride, std::vector<std::uint64_t>& counts) {
  const auto strands = static_cast<std::size_t>(b.strands());
  const std::size_t length = b.length();
  const std::size_t levels = length + 1;
  auto slot = [strands](std::size_t level, std::size_t position) {
    return level * strands + position;
  };
  DisjointSets sets(levels * strands);
  for (std::uint64_t mask = first; mask < last; ++mask) {
    sets.reset();
    for (std::size_t p = 0; p < strands; p += 2) {
      sets.unite(slot(0, p), slot(0, p + 1));
      sets.unite(slot(length, p), slot(length, p + 1));
    }
    int exponent = 0;
    for (std::size_t j = 0; j < length; ++j) {
      const int g = b[j];
      const auto a = static_cast<std::size_t>(std::abs(g) - 1);
      const int sign = g > 0 ? 1 : -1;
      for (std::size_t p = 0; p < strands; ++p) {
        if (p != a && p != a + 1) sets.unite(slot(j, p), slot(j + 1, p));
      }
      if ((mask >> j) & 1U) {
        // cup-cap smoothing
        sets.unite(slot(j, a), slot(j, a + 1));
        sets.unite(slot(j + 1, a), slot(j + 1, a + 1));
        exponent -= sign;
      } else {
        sets.unite(slot(j, a), slot(j + 1, a));
        sets.unite(slot(j, a + 1), slot(j + 1, a + 1));
        exponent += sign;
      }
    }
    const auto row = static_cast<std::size_t>(exponent + static_cast<int>(length));
    ++counts[row * stride + sets.sets()];
  }
}

}  // namespace

int default_oracle_budget() {
  if (const char* env = std::getenv("PLATJONES_ORACLE_BUDGET")) {
    try {
      const int value = std::stoi(env);
      if (value >= 0 && value < 63) return value;
    } catch (const std::exception&) {
    }
  }
  return kDefaultOracleBudget;
}

std::uint64_t state_sum_terms(const BraidWord& b) {
  if (b.length() >= 64) throw OracleBudgetError("state sum has more than 2^63 terms");
  return std::uint64_t{1} << b.length();
}

LaurentPolynomial loop_value() {
  return LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
}

LaurentPolynomial kauffman_bracket(const BraidWord& b, int budget) {
  if (budget < 0 || b.length() > static_cast<std::size_t>(budget)) {
    throw OracleBudgetError("oracle budget exceeded: word has " + std::to_string(b.length()) +
                            " crossings, budget is " + std::to_string(budget) +
                            " (raise --budget or PLATJONES_ORACLE_BUDGET)");
  }
  const std::size_t length = b.length();
  const std::size_t stride = (length + 1) * static_cast<std::size_t>(b.strands()) + 1;
  const std::size_t rows = 2 * length + 1;
  const std::uint64_t total = state_sum_terms(b);

  // Partial tables are integer counts, so the merge is exact and independent of
  // the split.
  const unsigned hardware = std::max(1U, std::thread::hardware_concurrency());
  const unsigned workers =
      total < (std::uint64_t{1} << 14) ? 1U : static_cast<unsigned>(std::min<std::uint64_t>(hardware, total));
  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>(rows * stride, 0));
  if (workers == 1) {
    accumulate_states(b, 0, total, stride, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t first = total * w / workers;
      const std::uint64_t last = total * (w + 1) / workers;
      pool.emplace_back([&, w, first, last] { accumulate_states(b, first, last, stride, partial[w]); });
    }
  }

  const LaurentPolynomial d = loop_value();
  std::vector<LaurentPolynomial> d_powers{LaurentPolynomial(1)};
  LaurentPolynomial bracket;
  for (std::size_t row = 0; row < rows; ++row) {
    const int exponent = static_cast<int>(row) - static_cast<int>(length);
    for (std::size_t loops = 1; loops < stride; ++loops) {
      std::uint64_t count = 0;
      for (const auto& table : partial) count += table[row * stride + loops];
      if (count == 0) continue;
      while (d_powers.size() < loops) d_powers.push_back(d_powers.back() * d);
      LaurentPolynomial term = d_powers[loops - 1].shifted(exponent);
      bracket += term * LaurentPolynomial::monomial(LaurentPolynomial::Coefficient(count), 0);
    }
  }
  return bracket;
}

LaurentPolynomial jones_from_bracket(const LaurentPolynomial& bracket, int writhe) {
  // (−A)^{−3w} = (−1)^w · A^{−3w}
  LaurentPolynomial out = bracket.shifted(-3 * writhe);
  return (writhe % 2 == 0) ? out : -out;
}

LaurentPolynomial jones_oracle(const BraidWord& b, int budget) {
  LaurentPolynomial bracket = kauffman_bracket(b, budget);
  return jones_from_bracket(bracket, writhe(b));
}

std::complex<double> evaluate_at(const LaurentPolynomial& poly, int k) {
  return poly.evaluate(RootOfUnity<double>(k).A);
}

SkeinResidual skein_residual(const BraidWord& b, std::size_t site, int k, int budget) {
  if (site >= b.length()) {
    throw BraidError("skein site " + std::to_string(site) + " is outside a word of length " +
                     std::to_string(b.length()));
  }
  SkeinResidual out;
  out.site = site;

  const int generator = std::abs(b[site]);
  std::vector<int> letters(b.letters().begin(), b.letters().end());
  letters[site] = generator;
  const BraidWord positive(b.strands(), letters);
  letters[site] = -generator;
  const BraidWord negative(b.strands(), letters);
  letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(site));
  const BraidWord smoothed(b.strands(), letters);

  const PlatDiagram diagram(positive);
  const int a = generator - 1;
  if (diagram.direction(site, a) != diagram.direction(site, a + 1)) return out;
  out.applicable = true;

  // L₊ and L₋ share their permutation, hence their traced orientation. L₀
  // inherits L₊'s orientation with segment levels site and site+1 merged.
  const auto strands = static_cast<std::size_t>(b.strands());
  const auto source = diagram.directions();
  std::vector<int> inherited;
  inherited.reserve(b.length() * strands);
  for (std::size_t level = 0; level <= b.length(); ++level) {
    if (level == site + 1) continue;
    inherited.insert(inherited.end(), source.begin() + static_cast<std::ptrdiff_t>(level * strands),
                     source.begin() + static_cast<std::ptrdiff_t>((level + 1) * strands));
  }
  const auto smoothed_signs = crossing_signs(smoothed, inherited);
  const int smoothed_writhe = std::accumulate(smoothed_signs.begin(), smoothed_signs.end(), 0);

  const LaurentPolynomial v_plus = jones_from_bracket(kauffman_bracket(positive, budget), diagram.writhe());
  const LaurentPolynomial v_minus =
      jones_from_bracket(kauffman_bracket(negative, budget), PlatDiagram(negative).writhe());
  const LaurentPolynomial v_zero = jones_from_bracket(kauffman_bracket(smoothed, budget), smoothed_writhe);

  const LaurentPolynomial sqrt_omega_gap =
      LaurentPolynomial::monomial(1, -2) - LaurentPolynomial::monomial(1, 2);
  out.exact_residual = sqrt_omega_gap * v_zero - v_plus.shifted(4) + v_minus.shifted(-4);
  out.residual = evaluate_at(out.exact_residual, k);
  return out;
}

}  // namespace platjones
