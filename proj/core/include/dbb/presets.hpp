#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dbb/config.hpp"

namespace dbb {

inline constexpr std::uint64_t kDefaultPresetSeed = 20;

struct PresetRun {
    /// File stem, e.g. "fig2_distributed_bb1".
    std::string label;
    ExperimentConfig config;
};

struct PresetReport {
    std::vector<std::filesystem::path> files;
    bool ok = true;
    std::string message;
};

const std::vector<std::string>& preset_names();

/// Throws ConfigError (key "preset") for unknown names.
std::vector<PresetRun> preset_runs(std::string_view name, std::uint64_t seed = kDefaultPresetSeed);

/// Runs every configuration of the preset and writes <label>.csv and <label>.json into out_dir.
PresetReport run_preset(std::string_view name, const std::filesystem::path& out_dir,
                        std::uint64_t seed = kDefaultPresetSeed);

/// The 100-agent, dimension-10 configuration used by fig2_distributed.
ExperimentConfig fig2_config(StepVariant rule, std::uint64_t seed = kDefaultPresetSeed);
/// The least-squares configuration used by fig1_centralized.
ExperimentConfig fig1_config(StepVariant rule, std::uint64_t seed = kDefaultPresetSeed);

}  // namespace dbb
