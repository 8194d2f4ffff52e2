#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dbb/objectives.hpp"
#include "dbb/step_rule.hpp"
#include "dbb/topology.hpp"

namespace dbb {

enum class Mode { centralized, distributed };
enum class ObjectiveKind { quadratic_network, least_squares, identity };
enum class WeightsKind { metropolis, sinkhorn, lazy_sinkhorn };

struct ExperimentConfig {
    Mode mode = Mode::centralized;
    std::size_t n = 1;
    std::size_t p = 10;
    GraphKind topology = GraphKind::complete;
    double edge_prob = 0.5;
    WeightsKind weights = WeightsKind::metropolis;
    ObjectiveKind objective = ObjectiveKind::quadratic_network;
    double condition_cap = 10.0;
    /// Rows of the least-squares matrix; unset means p.
    std::optional<std::size_t> m;
    Spectrum spectrum = Spectrum::uniform;
    bool shared_hessian = false;
    bool common_minimizer = false;
    StepRule rule;
    double eps = 1e-8;
    std::size_t max_iter = 50;
    std::uint64_t seed = 0;
    std::string output = "run.csv";

    std::size_t rows() const noexcept { return m.value_or(p); }
};

/// Flat JSON object. Required: mode, objective, max_iter. Throws ConfigError naming the key.
ExperimentConfig parse_config(std::string_view text);
/// Canonical form: every key present, keys sorted, two-space indent, trailing newline.
std::string serialize_config(const ExperimentConfig& cfg);
std::string normalize_config(std::string_view text);

}  // namespace dbb
