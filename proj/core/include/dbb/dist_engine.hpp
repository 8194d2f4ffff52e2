#pragma once

#include <cstddef>
#include <vector>

#include "dbb/numerics.hpp"
#include "dbb/objectives.hpp"
#include "dbb/record.hpp"
#include "dbb/step_rule.hpp"
#include "dbb/topology.hpp"

namespace dbb {

struct AgentState {
    std::size_t id = 0;
    Vector x, x_prev;
    Vector grad, grad_prev;
    /// x − x_prev and grad − grad_prev; empty before the first round.
    Vector s, y;
    /// Step used in the most recent round (0 before any round).
    double alpha = 0.0;
    std::size_t clamp_events = 0;
    std::size_t breach_events = 0;
};

struct NetworkState {
    std::vector<AgentState> agents;
    std::size_t round = 0;
    Vector x_bar;
    /// (1/n) Σ_i ∇f_i(x_i)
    Vector g_bar;
};

NetworkState init_network(const NetworkObjective& objective, const std::vector<Vector>& x0);

/// BB step for round ≥ 1 with local safeguards; breach falls back to 2/(μ_i+L_i).
StepOutcome local_bb_step(const AgentState& agent, StepVariant variant, double mu, double L,
                          ClampMode mode);

/// One synchronous round. `threads` > 1 splits agents across worker threads; the result
/// is bit-identical for every thread count.
void consensus_round(NetworkState& state, const MixingMatrix& W, const NetworkObjective& objective,
                     const StepRule& rule, unsigned threads = 1);

struct DistributedOptions {
    unsigned threads = 1;
};

struct DistributedResult {
    /// Rounds 0..K.
    std::vector<IterationRecord> records;
    /// x̄(0)..x̄(K)
    std::vector<Vector> x_bar;
    NetworkState final_state;
    Vector x_star;
    /// Largest local gradient norm seen over the run.
    double grad_bound = 0.0;
};

DistributedResult run_distributed(const NetworkObjective& objective, const MixingMatrix& W,
                                  const StepRule& rule, const std::vector<Vector>& x0, double eps,
                                  std::size_t max_iter, DistributedOptions options = {});

}  // namespace dbb
