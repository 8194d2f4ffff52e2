#include "dbb/centralized.hpp"

#include "dbb/error.hpp"

namespace dbb {

SolverTrace solve_centralized(const Objective& obj, const Vector& x0, const StepRule& rule,
                              double eps, std::size_t max_iter) {
    if (!(eps > 0.0)) throw ConfigError("eps must be positive", "eps");
    if (max_iter < 1) throw ConfigError("max_iter must be at least 1", "max_iter");
    if (x0.size() != obj.dim()) throw ConfigError("initial point has the wrong dimension", "p");
    if (!all_finite(x0)) throw ConfigError("initial point is not finite", "x0");

    SolverTrace trace;
    Vector x = x0;
    Vector g = obj.gradient(x);
    Vector s, y;
    double alpha = 0.0;
    trace.iterates.push_back(x);
    trace.grad_norms.push_back(norm(g));

    for (std::size_t k = 0; k < max_iter; ++k) {
        if (trace.grad_norms.back() < eps) break;
        const StepOutcome step = compute_step(rule, k, s, y, obj.mu(), obj.L(), alpha);
        alpha = step.alpha;
        trace.clamp_events += step.clamped;
        trace.curvature_breaches += step.breach;

        Vector next = x - alpha * g;
        if (!all_finite(next)) throw DivergenceError("iterate is not finite", k + 1);
        Vector g_next = obj.gradient(next);
        s = next - x;
        y = g_next - g;
        x = std::move(next);
        g = std::move(g_next);

        trace.iterates.push_back(x);
        trace.grad_norms.push_back(norm(g));
        trace.step_sizes.push_back(alpha);
        trace.clamp_totals.push_back(trace.clamp_events);
        trace.breach_totals.push_back(trace.curvature_breaches);
    }
    return trace;
}

}  // namespace dbb
