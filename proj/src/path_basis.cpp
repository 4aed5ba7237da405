#include "platjones/path_basis.hpp"

#include <stdexcept>
#include <string>

namespace platjones {

PathBasis::PathBasis(int n, int k) : n_(n), k_(k) {
  if (n < 1) throw std::invalid_argument("path basis needs n >= 1");
  if (k < 3) throw std::invalid_argument("path basis needs k >= 3");
  if (n > 32) throw std::invalid_argument("path basis supports at most 64 steps");
  const int length = 2 * n;
  const int cap = k - 2;

  // Depth-first, trying the up-step first, yields lexicographic order.
  std::vector<std::int8_t> path(length);
  std::vector<int> height(length + 1, 0);
  auto emit = [&] {
    steps_.insert(steps_.end(), path.begin(), path.end());
    for (int h : height) heights_.push_back(static_cast<std::uint8_t>(h));
    index_.emplace(encode(path), dim_);
    ++dim_;
  };
  auto extend = [&](auto&& self, int j) -> void {
    if (j == length) {
      if (height[length] == 0) emit();
      return;
    }
    const int remaining = length - j;
    if (height[j] + 1 <= cap && height[j] + 1 <= remaining - 1) {
      path[j] = +1;
      height[j + 1] = height[j] + 1;
      self(self, j + 1);
    }
    if (height[j] >= 1) {
      path[j] = -1;
      height[j + 1] = height[j] - 1;
      self(self, j + 1);
    }
  };
  extend(extend, 0);

  std::vector<std::int8_t> alternating(length);
  for (int j = 0; j < length; ++j) alternating[j] = (j % 2 == 0) ? 1 : -1;
  cap_index_ = *index_of(alternating);
}

std::uint64_t PathBasis::encode(std::span<const std::int8_t> steps) {
  std::uint64_t code = 0;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    if (steps[j] > 0) code |= std::uint64_t{1} << j;
  }
  return code;
}

std::optional<std::size_t> PathBasis::index_of(std::span<const std::int8_t> steps) const {
  if (steps.size() != static_cast<std::size_t>(steps_per_path())) return std::nullopt;
  auto it = index_.find(encode(steps));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

boost::multiprecision::cpp_int catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan(n) needs n >= 0, got " + std::to_string(n));
  boost::multiprecision::cpp_int binom = 1;
  // binom(2n, n) built incrementally; each partial product is an integer.
  for (int i = 1; i <= n; ++i) {
    binom *= (n + i);
    binom /= i;
  }
  return binom / (n + 1);
}

}  // namespace platjones
