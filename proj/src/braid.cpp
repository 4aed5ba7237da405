#include "platjones/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "platjones/errors.hpp"
#include "platjones/rng.hpp"

namespace platjones {

namespace {

void check_strands(int strands) {
  if (strands < 2 || strands % 2 != 0) {
    throw BraidError("strand count must be even and at least 2, got " +
                     std::to_string(strands));
  }
}

void check_letter(int letter, int strands) {
  if (letter == 0) throw BraidError("braid letter 0 is not a generator");
  if (std::abs(letter) >= strands) {
    throw BraidError("generator index out of range: |" + std::to_string(letter) +
                     "| must be at most " + std::to_string(strands - 1));
  }
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands);
  for (int g : letters_) check_letter(g, strands);
}

BraidWord parse_braid_word(std::string_view text, int strands) {
  check_strands(strands);
  std::vector<int> letters;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    // from_chars rejects a leading '+', which we accept.
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw BraidError("not an integer braid letter: '" + std::string(token) + "'");
    }
    check_letter(value, strands);
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_braid_word(const BraidWord& b) {
  std::string out;
  for (std::size_t i = 0; i < b.length(); ++i) {
    if (i != 0) out.push_back(' ');
    out += std::to_string(b[i]);
  }
  return out;
}

BraidWord inverse(const BraidWord& b) {
  std::vector<int> letters(b.letters().rbegin(), b.letters().rend());
  for (int& g : letters) g = -g;
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw BraidError("cannot concatenate braids on different strand counts");
  }
  std::vector<int> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

std::vector<int> permutation(const BraidWord& b) {
  // at[q] = left position of the strand currently at position q.
  std::vector<int> at(b.strands());
  for (int p = 0; p < b.strands(); ++p) at[p] = p;
  for (int g : b.letters()) {
    const int a = std::abs(g) - 1;
    std::swap(at[a], at[a + 1]);
  }
  std::vector<int> perm(b.strands());
  for (int q = 0; q < b.strands(); ++q) perm[at[q]] = q;
  return perm;
}

PlatDiagram::PlatDiagram(const BraidWord& b)
    : strands_(b.strands()), levels_(b.length() + 1) {
  const std::size_t length = b.length();
  const std::size_t segments = levels_ * strands_;
  directions_.assign(segments, 0);
  component_ids_.assign(segments, -1);
  const auto letters = b.letters();

  for (int start = 0; start < strands_; ++start) {
    if (component_ids_[start] != -1) continue;
    const int id = static_cast<int>(components_.size());
    std::vector<Segment> loop;
    std::size_t level = 0;
    int position = start;
    int dir = +1;
    do {
      const std::size_t slot = level * strands_ + position;
      directions_[slot] = dir;
      component_ids_[slot] = id;
      loop.push_back({static_cast<int>(level), position, dir});
      if (dir > 0) {
        if (level < length) {
          const int a = std::abs(letters[level]) - 1;
          if (position == a) {
            position = a + 1;
          } else if (position == a + 1) {
            position = a;
          }
          ++level;
        } else {
          position ^= 1;  // right cap
          dir = -1;
        }
      } else {
        if (level > 0) {
          const int a = std::abs(letters[level - 1]) - 1;
          if (position == a) {
            position = a + 1;
          } else if (position == a + 1) {
            position = a;
          }
          --level;
        } else {
          position ^= 1;  // left cap
          dir = +1;
        }
      }
    } while (!(level == 0 && position == start && dir == +1));
    components_.push_back(std::move(loop));
  }

  signs_ = platjones::crossing_signs(b, directions_);
  for (int s : signs_) writhe_ += s;
}

std::vector<int> crossing_signs(const BraidWord& b, std::span<const int> directions) {
  const int strands = b.strands();
  if (directions.size() != (b.length() + 1) * static_cast<std::size_t>(strands)) {
    throw BraidError("orientation table does not match braid shape");
  }
  std::vector<int> signs(b.length());
  for (std::size_t j = 0; j < b.length(); ++j) {
    const int g = b[j];
    const int a = std::abs(g) - 1;
    const int base = g > 0 ? 1 : -1;
    signs[j] = base * directions[j * strands + a] * directions[j * strands + a + 1];
  }
  return signs;
}

int writhe(const BraidWord& b) { return PlatDiagram(b).writhe(); }

BraidWord random_braid(int strands, std::size_t length, std::uint64_t seed) {
  check_strands(strands);
  CounterRng rng(seed);
  const auto generators = static_cast<std::uint64_t>(strands - 1);
  std::vector<int> letters(length);
  for (auto& g : letters) {
    const auto draw = rng.below(2 * generators);
    const int index = static_cast<int>(draw / 2) + 1;
    g = (draw % 2 == 0) ? index : -index;
  }
  return BraidWord(strands, std::move(letters));
}

std::int64_t design_length(int n, double epsilon, int t, double lambda, int local_dim) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ConfigError("design accuracy epsilon must lie in (0, 1)");
  }
  if (n < 1) throw ConfigError("n must be at least 1");
  if (t < 1) throw ConfigError("design order t must be at least 1");
  if (!(lambda > 0.0)) throw ConfigError("lambda must be positive");
  if (local_dim < 2) throw ConfigError("local dimension must be at least 2");

  const double log_inv_eps = -std::log(epsilon);
  // Round-off in ln(1/ε) must not push an exact integer over the next ceiling.
  auto ceil_length = [](double value) {
    return static_cast<std::int64_t>(std::ceil(value - 1e-9 * std::max(1.0, value)));
  };
  const double nn = static_cast<double>(n);
  if (t == 2) {
    return ceil_length(lambda * nn * (nn + log_inv_eps));
  }
  // ⌈log_q(4t)⌉ computed in integers: smallest m with q^m ≥ 4t.
  int rounds = 0;
  for (long long power = 1; power < 4LL * t; power *= local_dim) ++rounds;
  const double tt = static_cast<double>(t);
  const double log_catalan_bound = nn * std::log(4.0);
  const double value = lambda * nn * rounds * rounds * std::pow(tt, 5.0) *
                       std::pow(tt, 3.1 / std::log(static_cast<double>(local_dim))) *
                       (tt * log_catalan_bound + log_inv_eps);
  return ceil_length(value);
}

}  // namespace platjones
