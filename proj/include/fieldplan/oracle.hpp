#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fieldplan/model.hpp"

namespace fieldplan {

struct OracleLimits {
  std::int64_t max_states = 20'000'000;
};

// Thrown when the enumeration space exceeds limits.max_states; callers must
// shrink the instance, the oracle never samples.
struct OracleRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration-space size: product over clusters of
// (projects * (max_shift + 1) + 1), the +1 being "develop nothing". Saturates
// at max_states + 1.
std::int64_t oracle_state_count(const Instance& instance, const DiscountConfig& config,
                                std::int64_t cap);

// Exact optimum of the full problem (budget, one-per-cluster, capacity) over
// every project x shift choice. Deterministic: among optima, returns the
// lexicographically smallest selection (clusters in order; "none" sorts
// before any project, then project index, then shift).
Solution brute_force(const Instance& instance, const DiscountConfig& config,
                     const OracleLimits& limits = {});

// Same enumeration with the project per cluster frozen (only shifts and
// drops are free) and no budget constraint: the fixed-projects problem of
// stage two. `fixed[k]` < 0 leaves cluster k undeveloped.
Solution brute_force_fixed(const Instance& instance, const std::vector<int>& fixed,
                           const DiscountConfig& config, const OracleLimits& limits = {});

} // namespace fieldplan
