#include "dbb/experiment.hpp"

#include <json.hpp>

#include "dbb/centralized.hpp"
#include "dbb/csv.hpp"
#include "dbb/dist_engine.hpp"
#include "dbb/error.hpp"
#include "dbb/rng.hpp"

namespace dbb {

namespace {

NetworkObjective make_objective(const ExperimentConfig& cfg) {
    switch (cfg.objective) {
        case ObjectiveKind::quadratic_network:
            return random_network_objective(cfg.n, cfg.p, cfg.condition_cap, cfg.seed,
                                            {cfg.spectrum, cfg.shared_hessian, cfg.common_minimizer});
        case ObjectiveKind::least_squares: {
            auto rng = make_stream(cfg.seed, Stream::objective);
            std::vector<std::shared_ptr<const Objective>> agents;
            for (std::size_t i = 0; i < cfg.n; ++i)
                agents.push_back(std::make_shared<LeastSquaresObjective>(
                    random_least_squares(cfg.rows(), cfg.p, cfg.condition_cap, rng)));
            return NetworkObjective(std::move(agents));
        }
        case ObjectiveKind::identity:
            return NetworkObjective(std::vector(cfg.n, identity_objective(cfg.p)));
    }
    throw ConfigError("unknown objective", "objective");
}

MixingMatrix make_weights(const ExperimentConfig& cfg) {
    const Graph g = cfg.n == 1 ? Graph{1, {}} : make_graph(cfg.topology, cfg.n, cfg.seed, cfg.edge_prob);
    switch (cfg.weights) {
        case WeightsKind::metropolis:
            return metropolis_weights(g);
        case WeightsKind::sinkhorn:
            return sinkhorn_random_weights(g, cfg.seed);
        case WeightsKind::lazy_sinkhorn:
            return lazy_weights(sinkhorn_random_weights(g, cfg.seed));
    }
    throw ConfigError("unknown weights", "weights");
}

}  // namespace

Vector initial_point(std::size_t p, std::uint64_t seed) {
    auto rng = make_stream(seed, Stream::initial_point);
    std::normal_distribution<double> z(0.0, 1.0);
    Vector x(p);
    double len = 0.0;
    while (len == 0.0) {
        for (auto& v : x) v = z(rng);
        len = norm(x);
    }
    return (kInitialNorm / len) * x;
}

Instance build_instance(const ExperimentConfig& cfg) {
    if (cfg.mode == Mode::centralized && cfg.n != 1)
        throw ConfigError("centralized mode runs a single agent", "n");
    NetworkObjective objective = make_objective(cfg);
    MixingMatrix W = cfg.mode == Mode::distributed ? make_weights(cfg) : uniform_weights(1);
    std::vector<Vector> x0(cfg.n, initial_point(cfg.p, cfg.seed));
    return {std::move(objective), std::move(W), std::move(x0)};
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    Instance inst = build_instance(cfg);
    ExperimentResult out;
    out.config = cfg;
    out.lambda = inst.W.lambda2;
    out.mu_min = inst.objective.mu_min();

    if (cfg.mode == Mode::centralized) {
        const Objective& f = inst.objective.agent(0);
        const SolverTrace trace = solve_centralized(f, inst.x0[0], cfg.rule, cfg.eps, cfg.max_iter);
        out.records = records_from_trace(trace, f, optimal_point(f));
        for (double g : trace.grad_norms) out.grad_bound = std::max(out.grad_bound, g);
    } else {
        DistributedResult run = run_distributed(inst.objective, inst.W, cfg.rule, inst.x0, cfg.eps, cfg.max_iter);
        out.records = std::move(run.records);
        out.grad_bound = run.grad_bound;
    }
    if (out.records.size() >= 2) out.verdict = classify_convergence(out.records);
    return out;
}

std::vector<IterationRecord> csv_rows(const std::vector<IterationRecord>& records) {
    if (records.size() <= 1) return records;
    return {records.begin() + 1, records.end()};
}

void write_outputs(const ExperimentResult& result, const std::filesystem::path& csv_path) {
    emit_csv(csv_rows(result.records), csv_path);

    nlohmann::ordered_json meta;
    meta["config"] = nlohmann::json::parse(serialize_config(result.config));
    meta["seed"] = result.config.seed;
    meta["initial_opt_err"] = result.records.front().opt_err;
    meta["rounds"] = result.records.back().round;
    meta["lambda"] = result.lambda;
    meta["grad_bound"] = result.grad_bound;
    meta["mu_min"] = result.mu_min;
    meta["classification"] = result.verdict ? nlohmann::ordered_json(std::string(to_string(result.verdict->classification)))
                                            : nlohmann::ordered_json(nullptr);
    std::filesystem::path sidecar = csv_path;
    sidecar.replace_extension(".json");
    write_text(sidecar, meta.dump(2) + "\n");
}

}  // namespace dbb
