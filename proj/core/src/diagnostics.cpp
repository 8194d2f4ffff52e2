#include "dbb/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dbb/error.hpp"

namespace dbb {

namespace {

constexpr double kTerminatedFloor = 1e-14;
constexpr double kSuperlinearThreshold = 1e-3;
constexpr double kQLinearMargin = 1e-6;
constexpr double kBoundSlack = 1e-9;
constexpr double kCreepSlope = -0.5;

/// Ratios approaching 1 polynomially: strictly increasing with 1 − r shrinking like k^(−c).
bool creeping_to_one(const std::vector<std::pair<double, double>>& tail) {
    if (tail.size() < 3) return false;
    for (std::size_t i = 1; i < tail.size(); ++i)
        if (!(tail[i].second > tail[i - 1].second)) return false;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [k, r] : tail) {
        if (!(r < 1.0)) return false;
        const double lx = std::log(k), ly = std::log(1.0 - r);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double m = static_cast<double>(tail.size());
    const double denom = m * sxx - sx * sx;
    if (denom <= 0.0) return false;
    return (m * sxy - sx * sy) / denom <= kCreepSlope;
}

}  // namespace

double rate_c1(double mu, double L) noexcept { return 2.0 / (mu + L); }

double rate_c2(double mu, double L) noexcept { return 2.0 * mu * L / (mu + L); }

double centralized_rate_bound(double mu, double L) noexcept {
    return std::sqrt(std::max(0.0, (L - mu) / (L + mu)));
}

double distributed_rate_bound(double mu, double L, std::size_t n) noexcept {
    // 1 − c₂/(nL) = 1 − 2μ/(n(μ+L))
    const double v = 1.0 - 2.0 * mu / (static_cast<double>(n) * (mu + L));
    return std::sqrt(std::clamp(v, 0.0, 1.0));
}

double consensus_bound(double G, std::size_t k, double mu_min, double lambda) {
    if (!(lambda >= 0.0 && lambda < 1.0))
        throw InvalidSpectrumError("mixing spectrum must lie in [0, 1)");
    return G * std::sqrt(static_cast<double>(k)) / mu_min / std::sqrt(1.0 - lambda * lambda);
}

IterationRecord record_round(const NetworkState& state, const NetworkObjective& objective,
                             const Vector& x_star) {
    IterationRecord r;
    r.round = state.round;
    r.opt_err = norm(state.x_bar - x_star);
    r.grad_norm_avg = norm(state.g_bar);
    r.bound_ratio = distributed_rate_bound(objective.mu_bar(), objective.L_bar(), objective.size());
    r.alpha_min = std::numeric_limits<double>::infinity();
    r.alpha_max = -std::numeric_limits<double>::infinity();
    for (const auto& a : state.agents) {
        const double dev = norm(a.x - state.x_bar);
        r.consensus_err = std::max(r.consensus_err, dev);
        r.grad_norm_max = std::max(r.grad_norm_max, norm(a.grad));
        r.alpha_min = std::min(r.alpha_min, a.alpha);
        r.alpha_max = std::max(r.alpha_max, a.alpha);
        r.clamp_events += a.clamp_events;
        r.breach_events += a.breach_events;

        const double direct = norm(a.x - x_star);
        if (direct > dev + r.opt_err + 1e-12 * std::max(1.0, direct))
            throw NumericError("triangle inequality violated for agent " + std::to_string(a.id),
                               direct - dev - r.opt_err);
    }
    return r;
}

void link_ratios(std::vector<IterationRecord>& records) {
    for (std::size_t i = 0; i < records.size(); ++i) {
        const double prev = i == 0 ? 0.0 : records[i - 1].opt_err;
        records[i].ratio = (i == 0 || !(prev >= kTerminatedFloor))
                               ? std::numeric_limits<double>::quiet_NaN()
                               : records[i].opt_err / prev;
    }
}

void attach_consensus_bound(std::vector<IterationRecord>& records, double G, double mu_min,
                            double lambda) {
    for (auto& r : records) r.bound_consensus = consensus_bound(G, r.round, mu_min, lambda);
}

std::vector<IterationRecord> records_from_trace(const SolverTrace& trace, const Objective& obj,
                                                const Vector& x_star) {
    std::vector<IterationRecord> out;
    out.reserve(trace.iterates.size());
    double G = 0.0;
    for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
        IterationRecord r;
        r.round = k;
        r.opt_err = norm(trace.iterates[k] - x_star);
        r.grad_norm_avg = trace.grad_norms[k];
        r.grad_norm_max = trace.grad_norms[k];
        if (k > 0) {
            r.alpha_min = r.alpha_max = trace.step_sizes[k - 1];
            r.clamp_events = trace.clamp_totals[k - 1];
            r.breach_events = trace.breach_totals[k - 1];
        }
        r.bound_ratio = centralized_rate_bound(obj.mu(), obj.L());
        G = std::max(G, r.grad_norm_max);
        out.push_back(r);
    }
    link_ratios(out);
    attach_consensus_bound(out, G, obj.mu(), 0.0);
    return out;
}

BoundCheck check_consensus_bound(const std::vector<IterationRecord>& records, double G,
                                 double mu_min, double lambda) {
    if (!(lambda < 1.0)) throw InvalidSpectrumError("consensus bound needs lambda < 1");
    BoundCheck out;
    out.min_slack = std::numeric_limits<double>::infinity();
    for (const auto& r : records) {
        if (r.round < 1) continue;
        const double slack = consensus_bound(G, r.round, mu_min, lambda) + kBoundSlack - r.consensus_err;
        if (slack < out.min_slack) {
            out.min_slack = slack;
            out.worst_round = r.round;
        }
    }
    out.pass = !(out.min_slack < 0.0);
    return out;
}

std::string_view to_string(Convergence c) noexcept {
    switch (c) {
        case Convergence::q_linear: return "q_linear";
        case Convergence::superlinear: return "superlinear";
        case Convergence::sublinear: return "sublinear";
        case Convergence::diverged: return "diverged";
    }
    return "?";
}

ConvergenceVerdict classify_convergence(const std::vector<IterationRecord>& records,
                                        std::size_t window, double eps) {
    if (records.size() < 2) throw InsufficientDataError("need at least two records to classify");
    if (window < 1) window = 1;

    ConvergenceVerdict v;
    for (const auto& r : records)
        if (r.opt_err < eps) {
            v.rounds_to_eps = r.round;
            break;
        }

    std::vector<std::pair<double, double>> defined;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const double prev = records[i - 1].opt_err;
        if (!(prev >= kTerminatedFloor) || !std::isfinite(records[i].opt_err)) continue;
        const double r = records[i].opt_err / prev;
        defined.emplace_back(static_cast<double>(records[i].round), r);
        v.worst_ratio = std::max(v.worst_ratio, r);
    }

    const bool non_finite = std::any_of(records.begin(), records.end(),
                                        [](const IterationRecord& r) { return !std::isfinite(r.opt_err); });
    if (non_finite || records.back().opt_err > 10.0 * records.front().opt_err) {
        v.classification = Convergence::diverged;
        if (non_finite) v.worst_ratio = std::numeric_limits<double>::infinity();
        return v;
    }
    if (defined.empty()) {
        v.classification = Convergence::superlinear;
        return v;
    }

    const std::size_t take = std::min(window, defined.size());
    const std::vector<std::pair<double, double>> tail(defined.end() - static_cast<std::ptrdiff_t>(take),
                                                      defined.end());
    bool nonincreasing = true;
    double sup = 0.0;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        sup = std::max(sup, tail[i].second);
        if (i > 0 && tail[i].second > tail[i - 1].second) nonincreasing = false;
    }

    if (nonincreasing && tail.back().second < kSuperlinearThreshold)
        v.classification = Convergence::superlinear;
    else if (sup < 1.0 - kQLinearMargin && !creeping_to_one(tail))
        v.classification = Convergence::q_linear;
    else
        v.classification = Convergence::sublinear;
    return v;
}

}  // namespace dbb
