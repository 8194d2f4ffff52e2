#pragma once

#include <cstddef>
#include <vector>

#include "dbb/numerics.hpp"
#include "dbb/objectives.hpp"
#include "dbb/step_rule.hpp"

namespace dbb {

/// iterates and grad_norms have K+1 entries (x(0)..x(K)); per-step fields have K.
struct SolverTrace {
    std::vector<Vector> iterates;
    std::vector<double> step_sizes;
    std::vector<double> grad_norms;
    /// Running totals after each step.
    std::vector<std::size_t> clamp_totals;
    std::vector<std::size_t> breach_totals;
    std::size_t clamp_events = 0;
    std::size_t curvature_breaches = 0;

    std::size_t steps() const noexcept { return step_sizes.size(); }
};

/// x(k+1) = x(k) − α(k)∇f(x(k)) until ‖∇f(x(k))‖ < eps or max_iter steps.
SolverTrace solve_centralized(const Objective& obj, const Vector& x0, const StepRule& rule,
                              double eps, std::size_t max_iter);

}  // namespace dbb
