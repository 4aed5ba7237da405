#ifndef PLATJONES_ERRORS_HPP
#define PLATJONES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace platjones {

/// Malformed braid words, out-of-range generator indices, strand mismatches.
class BraidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The exponential state sum would exceed the configured crossing budget.
class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dense construction would exceed its dimension guard.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Experiment parameters outside their admissible ranges.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace platjones

#endif  // PLATJONES_ERRORS_HPP
