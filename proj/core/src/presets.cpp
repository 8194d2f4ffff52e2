#include "dbb/presets.hpp"

#include <limits>

#include "dbb/csv.hpp"
#include "dbb/error.hpp"
#include "dbb/experiment.hpp"

namespace dbb {

namespace {

constexpr double kFullRunEps = std::numeric_limits<double>::min();
constexpr std::size_t kFigureIterations = 50;

std::string label_for(std::string_view preset, std::string_view suffix) {
    return std::string(preset) + "_" + std::string(suffix);
}

ExperimentConfig superlinear_config(Mode mode, std::uint64_t seed) {
    ExperimentConfig c;
    c.mode = mode;
    c.n = mode == Mode::centralized ? 1 : 10;
    c.p = 10;
    c.objective = ObjectiveKind::identity;
    c.topology = GraphKind::complete;
    c.weights = WeightsKind::metropolis;
    c.rule.variant = StepVariant::bb1;
    c.rule.alpha0 = 0.5;
    c.max_iter = kFigureIterations;
    c.seed = seed;
    return c;
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig1_centralized", "fig2_distributed", "superlinear"};
    return names;
}

ExperimentConfig fig1_config(StepVariant rule, std::uint64_t seed) {
    ExperimentConfig c;
    c.mode = Mode::centralized;
    c.objective = ObjectiveKind::least_squares;
    c.p = 10;
    c.m = 10;
    c.condition_cap = 20.0;
    c.rule.variant = rule;
    c.eps = kFullRunEps;
    c.max_iter = kFigureIterations;
    c.seed = seed;
    return c;
}

ExperimentConfig fig2_config(StepVariant rule, std::uint64_t seed) {
    ExperimentConfig c;
    c.mode = Mode::distributed;
    c.n = 100;
    c.p = 10;
    c.topology = GraphKind::complete;
    c.weights = WeightsKind::lazy_sinkhorn;
    c.objective = ObjectiveKind::quadratic_network;
    c.condition_cap = 10.0;
    c.spectrum = Spectrum::geometric;
    c.common_minimizer = true;
    c.rule.variant = rule;
    c.eps = kFullRunEps;
    c.max_iter = kFigureIterations;
    c.seed = seed;
    return c;
}

std::vector<PresetRun> preset_runs(std::string_view name, std::uint64_t seed) {
    std::vector<PresetRun> runs;
    if (name == "fig1_centralized") {
        for (StepVariant v : {StepVariant::bb1, StepVariant::decay})
            runs.push_back({label_for(name, to_string(v)), fig1_config(v, seed)});
    } else if (name == "fig2_distributed") {
        for (StepVariant v : {StepVariant::const_inv_l, StepVariant::const_inv_mu,
                              StepVariant::const_harmonic, StepVariant::bb1})
            runs.push_back({label_for(name, to_string(v)), fig2_config(v, seed)});
    } else if (name == "superlinear") {
        runs.push_back({label_for(name, "centralized_bb1"), superlinear_config(Mode::centralized, seed)});
        runs.push_back({label_for(name, "distributed_bb1"), superlinear_config(Mode::distributed, seed)});
    } else {
        throw ConfigError("unknown preset \"" + std::string(name) + "\"", "preset");
    }
    for (auto& r : runs) r.config.output = r.label + ".csv";
    return runs;
}

PresetReport run_preset(std::string_view name, const std::filesystem::path& out_dir, std::uint64_t seed) {
    const auto runs = preset_runs(name, seed);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

    PresetReport report;
    for (const auto& run : runs) {
        const ExperimentResult result = run_experiment(run.config);
        const auto path = out_dir / run.config.output;
        write_outputs(result, path);
        report.files.push_back(path);

        if (name == "superlinear") {
            const bool central = run.config.mode == Mode::centralized;
            const std::size_t by = central ? 2 : 5;
            const double tol = central ? 1e-12 : 1e-10;
            bool hit = false;
            for (const auto& r : result.records)
                if (r.round <= by && r.opt_err < tol) hit = true;
            if (!hit) {
                report.ok = false;
                report.message += run.label + ": error did not reach " + format_double(tol) +
                                  " by round " + std::to_string(by) + "\n";
            }
        }
    }
    return report;
}

}  // namespace dbb
