#ifndef PLATJONES_BRAID_HPP
#define PLATJONES_BRAID_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace platjones {

/// A word in the generators σ_1 … σ_{2n−1} of B_{2n}. Letter g > 0 is σ_g,
/// g < 0 is σ_{|g|}^{-1}. Always valid once constructed.
class BraidWord {
 public:
  /// Identity braid on `strands` strands.
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<int> letters);

  int strands() const noexcept { return strands_; }
  int half_strands() const noexcept { return strands_ / 2; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const int> letters() const noexcept { return letters_; }
  int operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

BraidWord parse_braid_word(std::string_view text, int strands);
std::string format_braid_word(const BraidWord& b);

/// b⁻¹: letters reversed and negated.
BraidWord inverse(const BraidWord& b);
BraidWord concat(const BraidWord& a, const BraidWord& b);

/// perm[p] is the (0-based) right-hand position reached by the strand that
/// starts at left position p. Letter signs are ignored.
std::vector<int> permutation(const BraidWord& b);

/// One strand segment of the plat diagram: the piece of strand at `position`
/// between letter `level−1` and letter `level` (level 0 touches the left caps,
/// level = length touches the right caps).
struct Segment {
  int level;
  int position;
  int direction;  // +1 traversed left-to-right, −1 right-to-left

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Plat closure of a braid with caps (1,2),(3,4),… on both sides, traced into
/// oriented components. Each component starts at its lowest free left-end
/// position heading right.
class PlatDiagram {
 public:
  explicit PlatDiagram(const BraidWord& b);

  int strands() const noexcept { return strands_; }
  std::size_t levels() const noexcept { return levels_; }
  std::size_t component_count() const noexcept { return components_.size(); }
  const std::vector<std::vector<Segment>>& components() const noexcept {
    return components_;
  }

  int direction(std::size_t level, int position) const {
    return directions_[level * strands_ + position];
  }
  int component_of(std::size_t level, int position) const {
    return component_ids_[level * strands_ + position];
  }
  /// Segment directions, row-major by level.
  std::span<const int> directions() const noexcept { return directions_; }

  std::span<const int> crossing_signs() const noexcept { return signs_; }
  int writhe() const noexcept { return writhe_; }

 private:
  int strands_;
  std::size_t levels_;
  std::vector<std::vector<Segment>> components_;
  std::vector<int> directions_;
  std::vector<int> component_ids_;
  std::vector<int> signs_;
  int writhe_ = 0;
};

inline PlatDiagram plat_components(const BraidWord& b) { return PlatDiagram(b); }

/// Signed crossings of `b` under an arbitrary segment orientation (row-major
/// by level, `strands` entries per level). A letter between strands running
/// the same way has the sign of the letter; antiparallel strands flip it.
std::vector<int> crossing_signs(const BraidWord& b, std::span<const int> directions);

int writhe(const BraidWord& b);

/// Uniform word over the 2(2n−1) signed generators; a pure function of its
/// arguments.
BraidWord random_braid(int strands, std::size_t length, std::uint64_t seed);

/// Random-braid length after which the path model forms an approximate
/// t-design. t = 2 uses ⌈λ·n·(n + ln(1/ε))⌉; general t uses
/// ⌈λ·n·⌈log_q(4t)⌉²·t⁵·t^{3.1/ln q}·(t·n·ln 4 + ln(1/ε))⌉ with q = local_dim.
std::int64_t design_length(int n, double epsilon, int t, double lambda, int local_dim = 2);

}  // namespace platjones

#endif  // PLATJONES_BRAID_HPP
