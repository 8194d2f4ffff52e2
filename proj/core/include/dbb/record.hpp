#pragma once

#include <cstddef>
#include <limits>

namespace dbb {

/// Metrics for the state after `round` rounds. Step statistics describe the steps that
/// produced this state; event counts are running totals.
struct IterationRecord {
    std::size_t round = 0;
    double consensus_err = 0.0;
    double opt_err = 0.0;
    double ratio = std::numeric_limits<double>::quiet_NaN();
    double grad_norm_avg = 0.0;
    double alpha_min = 0.0;
    double alpha_max = 0.0;
    std::size_t clamp_events = 0;
    std::size_t breach_events = 0;
    double bound_consensus = 0.0;
    double bound_ratio = 0.0;
    /// max_i ‖∇f_i(x_i)‖; not part of the CSV.
    double grad_norm_max = 0.0;
};

}  // namespace dbb
