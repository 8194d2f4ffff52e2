#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "dbb/config.hpp"
#include "dbb/diagnostics.hpp"
#include "dbb/objectives.hpp"
#include "dbb/record.hpp"
#include "dbb/topology.hpp"

namespace dbb {

inline constexpr double kInitialNorm = 10.0;

/// Standard-normal draw from the seed's initial-point stream, scaled to norm 10.
Vector initial_point(std::size_t p, std::uint64_t seed);

struct Instance {
    NetworkObjective objective;
    MixingMatrix W;
    std::vector<Vector> x0;
};

/// Objective, mixing matrix and common starting point, all derived from cfg.seed.
Instance build_instance(const ExperimentConfig& cfg);

struct ExperimentResult {
    ExperimentConfig config;
    /// Rounds 0..K.
    std::vector<IterationRecord> records;
    double lambda = 0.0;
    double grad_bound = 0.0;
    double mu_min = 0.0;
    /// Absent when the run stopped at round 0.
    std::optional<ConvergenceVerdict> verdict;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Rounds 1..K, or just round 0 when the run stopped before the first step.
std::vector<IterationRecord> csv_rows(const std::vector<IterationRecord>& records);

/// Writes the CSV and a same-basename .json sidecar with the normalized config and seed.
void write_outputs(const ExperimentResult& result, const std::filesystem::path& csv_path);

}  // namespace dbb
