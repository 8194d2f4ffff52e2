#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dbb/certify.hpp"
#include "dbb/config.hpp"
#include "dbb/csv.hpp"
#include "dbb/error.hpp"
#include "dbb/experiment.hpp"
#include "dbb/presets.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dbb::ConfigError("cannot read config file " + path, "config");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_run(const std::string& config_path) {
    const dbb::ExperimentConfig cfg = dbb::parse_config(slurp(config_path));
    const dbb::ExperimentResult result = dbb::run_experiment(cfg);
    dbb::write_outputs(result, cfg.output);
    const auto& last = result.records.back();
    std::cout << cfg.output << ": " << last.round << " rounds, opt_err "
              << dbb::format_double(last.opt_err) << ", consensus_err "
              << dbb::format_double(last.consensus_err);
    if (result.verdict) std::cout << ", " << dbb::to_string(result.verdict->classification);
    std::cout << "\n";
    return kOk;
}

int cmd_preset(const std::string& name, const std::string& out_dir, std::uint64_t seed) {
    const dbb::PresetReport report = dbb::run_preset(name, out_dir, seed);
    for (const auto& f : report.files) std::cout << f.string() << "\n";
    if (!report.ok) {
        std::cerr << report.message;
        return kFailed;
    }
    return kOk;
}

int cmd_verify(std::uint64_t seed) {
    bool all = true;
    for (const auto& r : dbb::run_verification(seed)) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        all = all && r.pass;
    }
    return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distributed Barzilai-Borwein experiments"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "Run one experiment described by a JSON config");
    run->add_option("--config", config_path, "Config file")->required();

    std::string preset_name, out_dir;
    std::uint64_t preset_seed = dbb::kDefaultPresetSeed;
    auto* preset = app.add_subcommand("preset", "Reproduce a named experiment into a directory");
    preset->add_option("name", preset_name, "Preset name")
        ->required()
        ->check(CLI::IsMember(dbb::preset_names()));
    preset->add_option("--out", out_dir, "Output directory")->required();
    preset->add_option("--seed", preset_seed, "Seed for every random choice");

    std::uint64_t verify_seed = dbb::kDefaultPresetSeed;
    auto* verify = app.add_subcommand("verify", "Check the convergence bounds numerically");
    verify->add_option("--seed", verify_seed, "Seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*run) return cmd_run(config_path);
        if (*preset) return cmd_preset(preset_name, out_dir, preset_seed);
        if (*verify) return cmd_verify(verify_seed);
    } catch (const dbb::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const dbb::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const dbb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
