#include "dbb/dist_engine.hpp"

#include <algorithm>
#include <thread>

#include "dbb/diagnostics.hpp"
#include "dbb/error.hpp"

namespace dbb {

namespace {

Vector mean_of(const std::vector<AgentState>& agents, Vector AgentState::*field) {
    Vector m((agents.front().*field).size(), 0.0);
    for (const auto& a : agents)
        for (std::size_t d = 0; d < m.size(); ++d) m[d] += (a.*field)[d];
    const double inv = 1.0 / static_cast<double>(agents.size());
    for (auto& v : m) v *= inv;
    return m;
}

void refresh_means(NetworkState& state) {
    state.x_bar = mean_of(state.agents, &AgentState::x);
    state.g_bar = mean_of(state.agents, &AgentState::grad);
}

template <typename Fn>
void for_each_agent(std::size_t n, unsigned threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

NetworkState init_network(const NetworkObjective& objective, const std::vector<Vector>& x0) {
    if (x0.size() != objective.size())
        throw ConfigError("need one initial point per agent", "n");
    NetworkState state;
    state.agents.resize(objective.size());
    for (std::size_t i = 0; i < objective.size(); ++i) {
        if (x0[i].size() != objective.dim())
            throw ConfigError("initial point has the wrong dimension", "p");
        if (!all_finite(x0[i])) throw ConfigError("initial point is not finite", "x0");
        AgentState& a = state.agents[i];
        a.id = i;
        a.x = x0[i];
        a.grad = objective.agent(i).gradient(a.x);
    }
    refresh_means(state);
    return state;
}

StepOutcome local_bb_step(const AgentState& agent, StepVariant variant, double mu, double L,
                          ClampMode mode) {
    if (!is_bb(variant)) throw ConfigError("local_bb_step needs a BB variant", "rule");
    if (agent.s.empty()) throw ConfigError("secant pair not populated before round 1", "rule");
    StepRule rule;
    rule.variant = variant;
    rule.clamp = mode;
    return compute_step(rule, 1, agent.s, agent.y, mu, L, agent.alpha);
}

void consensus_round(NetworkState& state, const MixingMatrix& W, const NetworkObjective& objective,
                     const StepRule& rule, unsigned threads) {
    const std::size_t n = state.agents.size();
    if (W.W.dim() != n) throw ConfigError("mixing matrix size differs from agent count", "n");
    if (objective.size() != n) throw ConfigError("objective size differs from agent count", "n");
    const std::size_t p = objective.dim();
    const std::size_t k = state.round;

    std::vector<Vector> next(n, Vector(p));
    std::vector<StepOutcome> steps(n, StepOutcome{0.0});

    for_each_agent(n, threads, [&](std::size_t i) {
        const AgentState& a = state.agents[i];
        const Objective& f = objective.agent(i);
        steps[i] = compute_step(rule, k, a.s, a.y, f.mu(), f.L(), a.alpha);
        Vector& out = next[i];
        out = a.x;
        for (std::size_t j = 0; j < n; ++j) {
            const double w = W.W(i, j);
            if (j == i || w == 0.0) continue;
            const Vector& xj = state.agents[j].x;
            for (std::size_t d = 0; d < p; ++d) out[d] += w * (xj[d] - a.x[d]);
        }
        const double alpha = steps[i].alpha;
        for (std::size_t d = 0; d < p; ++d) out[d] -= alpha * a.grad[d];
    });

    for (std::size_t i = 0; i < n; ++i)
        if (!all_finite(next[i]))
            throw DivergenceError("agent iterate is not finite", k + 1, static_cast<std::ptrdiff_t>(i));

    for_each_agent(n, threads, [&](std::size_t i) {
        AgentState& a = state.agents[i];
        a.x_prev = std::move(a.x);
        a.x = std::move(next[i]);
        a.grad_prev = std::move(a.grad);
        a.grad = objective.agent(i).gradient(a.x);
        a.s = a.x - a.x_prev;
        a.y = a.grad - a.grad_prev;
        a.alpha = steps[i].alpha;
        a.clamp_events += steps[i].clamped;
        a.breach_events += steps[i].breach;
    });

    ++state.round;
    refresh_means(state);
}

DistributedResult run_distributed(const NetworkObjective& objective, const MixingMatrix& W,
                                  const StepRule& rule, const std::vector<Vector>& x0, double eps,
                                  std::size_t max_iter, DistributedOptions options) {
    if (!(eps > 0.0)) throw ConfigError("eps must be positive", "eps");
    if (max_iter < 1) throw ConfigError("max_iter must be at least 1", "max_iter");
    if (W.W.dim() != objective.size())
        throw ConfigError("mixing matrix size differs from agent count", "n");

    DistributedResult result;
    result.x_star = optimal_point(objective);
    NetworkState state = init_network(objective, x0);
    result.records.push_back(record_round(state, objective, result.x_star));
    result.x_bar.push_back(state.x_bar);

    for (std::size_t k = 0; k < max_iter; ++k) {
        if (norm(state.g_bar) < eps) break;
        consensus_round(state, W, objective, rule, options.threads);
        result.records.push_back(record_round(state, objective, result.x_star));
        result.x_bar.push_back(state.x_bar);
    }

    link_ratios(result.records);
    for (const auto& r : result.records) result.grad_bound = std::max(result.grad_bound, r.grad_norm_max);
    attach_consensus_bound(result.records, result.grad_bound, objective.mu_min(), W.lambda2);
    result.final_state = std::move(state);
    return result;
}

}  // namespace dbb
