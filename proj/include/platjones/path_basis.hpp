#ifndef PLATJONES_PATH_BASIS_HPP
#define PLATJONES_PATH_BASIS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace platjones {

/// Walks of length 2n on the path graph G_k (k−1 vertices) that start and end
/// at the first vertex: Dyck paths of semilength n with height at most k−2.
/// Paths are ordered lexicographically with an up-step before a down-step.
class PathBasis {
 public:
  PathBasis(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  int steps_per_path() const noexcept { return 2 * n_; }
  std::size_t dim() const noexcept { return dim_; }

  /// ±1 steps of path `index`.
  std::span<const std::int8_t> steps(std::size_t index) const {
    return {steps_.data() + index * steps_per_path(), static_cast<std::size_t>(steps_per_path())};
  }
  /// Height after `j` steps, j ∈ [0, 2n]. The vertex of G_k is height + 1.
  int height(std::size_t index, int j) const {
    return heights_[index * (steps_per_path() + 1) + static_cast<std::size_t>(j)];
  }

  std::optional<std::size_t> index_of(std::span<const std::int8_t> steps) const;

  /// Position of the alternating path (+1,−1,+1,−1,…).
  std::size_t cap_index() const noexcept { return cap_index_; }

 private:
  static std::uint64_t encode(std::span<const std::int8_t> steps);

  int n_;
  int k_;
  std::size_t dim_ = 0;
  std::vector<std::int8_t> steps_;
  std::vector<std::uint8_t> heights_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::size_t cap_index_ = 0;
};

inline PathBasis enumerate_paths(int n, int k) { return PathBasis(n, k); }

/// C_n = binom(2n, n)/(n+1), exact.
boost::multiprecision::cpp_int catalan(int n);

}  // namespace platjones

#endif  // PLATJONES_PATH_BASIS_HPP
