#pragma once

#include <functional>

#include "nbv/rng.hpp"
#include "nbv/shape.hpp"

namespace nbv {

using Predicate = std::function<bool(const VarAssignment&)>;

struct SampleOptions {
  long long num_abs = 1000000;  // numerators uniform in [-num_abs, num_abs]
  long long den_max = 1000;     // denominators uniform in [1, den_max]
  int retries = 1000;           // rejection budget before ResampleExhausted
};

Rat random_rational(Rng& rng, const SampleOptions& opt = {});

// Draws a full assignment (all t^a_i, x, Lambda) and redraws until the
// predicate accepts. Deterministic for a fixed seed.
VarAssignment sample_assignment(const Shape& shape, std::uint64_t seed,
                                const Predicate& accept,
                                const SampleOptions& opt = {});

// Accepts when every pairwise difference within {t^a_i} + {x} avoids
// {0, +1, -1}. That clears every denominator the formulas can produce:
// plain differences, the +-1 shifted ones hit inside symmetrization orbits,
// and all t - x factors.
Predicate separated_predicate();

}  // namespace nbv
