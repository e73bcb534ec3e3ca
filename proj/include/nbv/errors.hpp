#pragma once

#include <stdexcept>
#include <string>

namespace nbv {

// A denominator of an exact computation vanished. The message names the
// offending difference (and the permutation, when one is involved).
struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// Rejection sampling gave up before the avoidance predicate was satisfied.
struct ResampleExhausted : std::runtime_error {
  explicit ResampleExhausted(const std::string& what) : std::runtime_error(what) {}
};

// A vector mixed monomials of different weights; signals an internal bug,
// every operation here maps weight-homogeneous inputs to homogeneous outputs.
struct MixedWeightError : std::runtime_error {
  explicit MixedWeightError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidPlanError : std::runtime_error {
  explicit InvalidPlanError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidConfigError : std::runtime_error {
  explicit InvalidConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceededError : std::runtime_error {
  long long estimate;
  BudgetExceededError(const std::string& what, long long est)
      : std::runtime_error(what), estimate(est) {}
};

}  // namespace nbv
