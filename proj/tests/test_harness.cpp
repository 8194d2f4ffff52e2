#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dbb/config.hpp"
#include "dbb/csv.hpp"
#include "dbb/error.hpp"
#include "dbb/experiment.hpp"
#include "dbb/presets.hpp"
#include "dbb/rng.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("dbb_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("double formatting") {
    CHECK(dbb::format_double(0.1) == "0.1");
    CHECK(dbb::format_double(1.0) == "1");
    CHECK(dbb::format_double(1e-300) == "1e-300");
    CHECK(dbb::format_double(std::nan("")) == "nan");
    CHECK(dbb::format_double(INFINITY) == "inf");
    CHECK(dbb::format_double(-INFINITY) == "-inf");
    const double x = 0.1 + 0.2;
    CHECK(std::stod(dbb::format_double(x)) == x);
}

TEST_CASE("csv layout") {
    std::vector<dbb::IterationRecord> one(1);
    one[0].round = 3;
    one[0].opt_err = 0.25;
    const std::string csv = dbb::render_csv(one);
    CHECK(count_lines(csv) == 2);
    CHECK(csv.rfind(std::string(dbb::kCsvHeader) + "\n", 0) == 0);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.substr(dbb::kCsvHeader.size() + 1) == "3,0,0.25,nan,0,0,0,0,0,0,0\n");
    CHECK(dbb::render_csv(std::vector<dbb::IterationRecord>(50)).size() > 0);
    CHECK(count_lines(dbb::render_csv(std::vector<dbb::IterationRecord>(50))) == 51);
}

TEST_CASE("csv emission errors") {
    CHECK_THROWS_AS(dbb::emit_csv({}, scratch("empty") / "x.csv"), dbb::ConfigError);
    CHECK_THROWS_AS(dbb::emit_csv(std::vector<dbb::IterationRecord>(1), "/nonexistent_dir_dbb/x.csv"), dbb::IoError);
}

TEST_CASE("initial point has norm ten and depends on the seed") {
    for (std::uint64_t s = 0; s < 10; ++s) CHECK(dbb::norm(dbb::initial_point(7, s)) == doctest::Approx(10.0));
    CHECK(dbb::initial_point(7, 1) == dbb::initial_point(7, 1));
    CHECK(dbb::initial_point(7, 1) != dbb::initial_point(7, 2));
}

TEST_CASE("random streams are independent") {
    auto a = dbb::make_stream(5, dbb::Stream::graph);
    auto b = dbb::make_stream(5, dbb::Stream::weights);
    auto c = dbb::make_stream(5, dbb::Stream::graph);
    const auto x = a();
    CHECK(x != b());
    CHECK(x == c());
    auto d = dbb::make_stream(5, dbb::Stream::graph);
    for (int i = 0; i < 1000; ++i) {
        const double u = dbb::uniform_open_closed(d);
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
    }
}

TEST_CASE("experiments are deterministic") {
    auto cfg = dbb::parse_config(R"({"mode": "distributed", "objective": "quadratic_network", "max_iter": 30,
        "n": 15, "p": 4, "topology": "erdos_renyi", "edge_prob": 0.3, "weights": "sinkhorn", "seed": 11})");
    const auto a = dbb::run_experiment(cfg);
    const auto b = dbb::run_experiment(cfg);
    CHECK(dbb::render_csv(dbb::csv_rows(a.records)) == dbb::render_csv(dbb::csv_rows(b.records)));
    cfg.seed = 12;
    CHECK(dbb::render_csv(dbb::run_experiment(cfg).records) != dbb::render_csv(a.records));
}

TEST_CASE("csv rows skip the initial state") {
    const auto cfg = dbb::fig1_config(dbb::StepVariant::decay);
    const auto res = dbb::run_experiment(cfg);
    const auto rows = dbb::csv_rows(res.records);
    REQUIRE(rows.size() == 50);
    CHECK(rows.front().round == 1);
    CHECK(rows.back().round == 50);

    std::vector<dbb::IterationRecord> only(1);
    CHECK(dbb::csv_rows(only).size() == 1);
}

TEST_CASE("outputs include a sidecar") {
    auto cfg = dbb::parse_config(R"({"mode": "centralized", "objective": "least_squares", "max_iter": 20, "seed": 4})");
    const auto dir = scratch("sidecar");
    dbb::write_outputs(dbb::run_experiment(cfg), dir / "run.csv");
    CHECK(count_lines(slurp(dir / "run.csv")) == 21);
    const std::string meta = slurp(dir / "run.json");
    CHECK(meta.find("\"seed\": 4") != std::string::npos);
    CHECK(meta.find("\"classification\"") != std::string::npos);
    CHECK(meta.find("\"max_iter\": 20") != std::string::npos);
}

TEST_CASE("preset file layout") {
    const auto dir = scratch("presets");
    const auto fig1 = dbb::run_preset("fig1_centralized", dir);
    CHECK(fig1.ok);
    REQUIRE(fig1.files.size() == 2);
    for (const auto& f : fig1.files) {
        CHECK(count_lines(slurp(f)) == 51);
        CHECK(fs::exists(fs::path(f).replace_extension(".json")));
    }
    const auto sup = dbb::run_preset("superlinear", dir);
    CHECK(sup.ok);
    CHECK(sup.files.size() == 2);
    CHECK(dbb::preset_runs("fig2_distributed").size() == 4);
    CHECK_THROWS_AS(dbb::preset_runs("nope"), dbb::ConfigError);
}

TEST_CASE("preset output is reproducible byte for byte") {
    const auto a = scratch("repro_a"), b = scratch("repro_b");
    dbb::run_preset("fig1_centralized", a, 3);
    dbb::run_preset("fig1_centralized", b, 3);
    for (const auto& e : fs::directory_iterator(a)) CHECK(slurp(e.path()) == slurp(b / e.path().filename()));
}

TEST_CASE("centralized mode with several agents is rejected") {
    dbb::ExperimentConfig cfg;
    cfg.n = 3;
    CHECK_THROWS_AS(dbb::run_experiment(cfg), dbb::ConfigError);
}
