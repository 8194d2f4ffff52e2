#include "dbb/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dbb/centralized.hpp"
#include "dbb/diagnostics.hpp"
#include "dbb/dist_engine.hpp"
#include "dbb/experiment.hpp"
#include "dbb/presets.hpp"
#include "dbb/rng.hpp"

namespace dbb {

namespace {

constexpr std::size_t kDim = 10;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

StepRule bb_rule(StepVariant v, ClampMode clamp = ClampMode::raw) {
    StepRule r;
    r.variant = v;
    r.clamp = clamp;
    return r;
}

double max_trajectory_gap(const std::vector<Vector>& a, const std::vector<Vector>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double gap = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) gap = std::max(gap, norm(a[k] - b[k]));
    return gap;
}

}  // namespace

CheckResult check_superlinear(std::uint64_t seed) {
    CheckResult out{"superlinear", true, {}};
    const auto f = identity_objective(kDim);
    const Vector x0 = initial_point(kDim, seed);
    StepRule rule = bb_rule(StepVariant::bb1);
    rule.alpha0 = 0.5;

    const SolverTrace trace = solve_centralized(*f, x0, rule, 1e-8, 50);
    const double central = norm(trace.iterates[std::min<std::size_t>(2, trace.iterates.size() - 1)]);
    if (!(central < 1e-12)) out.pass = false;

    const std::size_t n = 10;
    const NetworkObjective net(std::vector(n, f));
    const DistributedResult run = run_distributed(net, uniform_weights(n), rule,
                                                  std::vector(n, x0), 1e-8, 5);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : run.records) best = std::min(best, r.opt_err);
    if (!(best < 1e-10)) out.pass = false;

    out.detail = "centralized error at round 2 = " + fmt(central) +
                 ", distributed best error within 5 rounds = " + fmt(best);
    return out;
}

CheckResult check_step_sandwich(std::uint64_t seed) {
    CheckResult out{"step_sandwich", true, {}};
    auto rng = make_stream(seed, Stream::verify);
    std::uniform_real_distribution<double> logu(-3.0, 3.0);

    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 1000; ++i) {
        const double mu = std::pow(10.0, logu(rng));
        const double L = i % 10 == 0 ? mu : mu * std::pow(10.0, std::abs(logu(rng)));
        const double h = harmonic_step(mu, L);
        worst = std::min({worst, h - 1.0 / L, 1.0 / mu - h});
    }
    if (worst < -1e-15) out.pass = false;

    std::size_t steps = 0, outside = 0;
    std::normal_distribution<double> z(0.0, 1.0);
    for (int i = 0; i < 40; ++i) {
        const double cap = 1.0 + 99.0 * (i / 39.0);
        const NetworkObjective net = random_network_objective(1, 2 + i % 9, cap, seed + 1000 + i);
        const Objective& f = net.agent(0);
        auto inside = [&](double a) {
            ++steps;
            if (a < 1.0 / f.L() - 1e-10 || a > 1.0 / f.mu() + 1e-10) ++outside;
        };
        for (int t = 0; t < 10; ++t) {
            Vector s(f.dim());
            for (auto& v : s) v = z(rng);
            const Vector y = matvec(f.hessian(), s);
            inside(bb1_step(s, y).alpha);
            inside(bb2_step(s, y).alpha);
        }
        const QuadraticObjective centered(f.hessian().to_matrix(), Vector(f.dim(), 0.0));
        for (StepVariant v : {StepVariant::bb1, StepVariant::bb2}) {
            const SolverTrace trace = solve_centralized(centered, initial_point(f.dim(), seed + i),
                                                        bb_rule(v), 1e-12, 200);
            for (std::size_t k = 1; k < trace.steps(); ++k) inside(trace.step_sizes[k]);
        }
    }
    if (outside > 0) out.pass = false;
    out.detail = "min sandwich slack " + fmt(worst) + ", " + std::to_string(outside) + " of " +
                 std::to_string(steps) + " BB steps outside [1/L, 1/mu]";
    return out;
}

CheckResult check_centralized_qlinear(std::uint64_t seed) {
    CheckResult out{"qlinear_centralized", true, {}};
    double worst_excess = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 20; ++i) {
        const double cap = 2.0 + 5.0 * i;
        const NetworkObjective net = random_network_objective(1, kDim, cap, seed + 2000 + i);
        const Objective& f = net.agent(0);
        const double bound = centralized_rate_bound(f.mu(), f.L());
        const SolverTrace trace = solve_centralized(f, initial_point(kDim, seed + i),
                                                    bb_rule(StepVariant::bb1, ClampMode::lemma_range),
                                                    1e-8, 2000);
        const auto records = records_from_trace(trace, f, optimal_point(f));
        for (const auto& r : records)
            if (r.round >= 2 && std::isfinite(r.ratio)) worst_excess = std::max(worst_excess, r.ratio - bound);
    }
    if (worst_excess > 1e-9) out.pass = false;

    const double c = 3.0;
    Vector b(kDim);
    const Vector x0 = initial_point(kDim, seed);
    for (std::size_t i = 0; i < kDim; ++i) b[i] = 0.1 * x0[i];
    const QuadraticObjective iso(Matrix::diagonal(Vector(kDim, c)), b);
    const double zero = centralized_rate_bound(iso.mu(), iso.L());
    const SolverTrace trace = solve_centralized(iso, x0, bb_rule(StepVariant::bb1, ClampMode::lemma_range),
                                                1e-8, 50);
    const bool terminated = trace.grad_norms.back() < 1e-8 && trace.steps() < 50;
    if (zero != 0.0 || !terminated) out.pass = false;

    out.detail = "largest ratio minus bound " + fmt(worst_excess) + "; mu = L bound " + fmt(zero) +
                 (terminated ? ", terminated after " + std::to_string(trace.steps()) + " steps"
                             : ", did not terminate");
    return out;
}

CheckResult check_consensus_deviation(std::uint64_t seed) {
    CheckResult out{"consensus_bound", true, {}};
    ExperimentConfig cfg = fig2_config(StepVariant::bb1, seed);
    cfg.rule.clamp = ClampMode::bb_range;
    const Instance inst = build_instance(cfg);
    const DistributedResult run =
        run_distributed(inst.objective, inst.W, cfg.rule, inst.x0, cfg.eps, cfg.max_iter);
    const BoundCheck check =
        check_consensus_bound(run.records, run.grad_bound, inst.objective.mu_min(), inst.W.lambda2);
    out.pass = check.pass;
    out.detail = "lambda " + fmt(inst.W.lambda2) + ", G " + fmt(run.grad_bound) + ", min slack " +
                 fmt(check.min_slack) + " at round " + std::to_string(check.worst_round);
    return out;
}

CheckResult check_reduction(std::uint64_t seed) {
    CheckResult out{"reduction", true, {}};
    const NetworkObjective single = random_network_objective(1, kDim, 20.0, seed + 3000);
    const Objective& f = single.agent(0);
    const Vector x0 = initial_point(kDim, seed);
    const StepRule rule = bb_rule(StepVariant::bb1);

    const SolverTrace trace = solve_centralized(f, x0, rule, 1e-8, 200);
    const DistributedResult one = run_distributed(single, uniform_weights(1), rule, {x0}, 1e-8, 200);
    const double gap_single = max_trajectory_gap(trace.iterates, one.x_bar);

    const std::size_t n = 8;
    const NetworkObjective same(std::vector(n, single.agents().front()));
    const DistributedResult many = run_distributed(same, uniform_weights(n), rule,
                                                   std::vector(n, x0), 1e-8, 200);
    const double gap_many = max_trajectory_gap(trace.iterates, many.x_bar);

    out.pass = gap_single <= 1e-12 && gap_many <= 1e-12;
    out.detail = "n = 1 gap " + fmt(gap_single) + ", identical agents gap " + fmt(gap_many);
    return out;
}

std::vector<CheckResult> run_verification(std::uint64_t seed) {
    return {check_superlinear(seed), check_step_sandwich(seed), check_centralized_qlinear(seed),
            check_consensus_deviation(seed), check_reduction(seed)};
}

}  // namespace dbb
