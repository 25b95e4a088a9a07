#pragma once

#include <optional>
#include <vector>

#include "quasimap/rational.hpp"

namespace qm {

// Decides whether target = sum_i a_i * cols[i] has a solution with every
// a_i > 0, by exact-rational simplex (Bland's rule, no cycling). Strict
// positivity is handled by maximizing an auxiliary slack t subject to
// a_i >= t and t <= 1; a witness exists iff the optimum is positive.
//
// cols[i] is a column vector of length m; target has length m. Returns the
// witness coefficients on success.
std::optional<RatVec> positive_combination(
    const std::vector<RatVec>& cols, const RatVec& target);

}  // namespace qm
