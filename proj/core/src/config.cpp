#include "dbb/config.hpp"

#include <array>
#include <cmath>
#include <utility>

#include <json.hpp>

#include "dbb/error.hpp"

namespace dbb {

namespace {

using json = nlohmann::json;

template <typename E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

constexpr NameTable<Mode, 2> kModes{{{Mode::centralized, "centralized"}, {Mode::distributed, "distributed"}}};
constexpr NameTable<ObjectiveKind, 3> kObjectives{{{ObjectiveKind::quadratic_network, "quadratic_network"},
                                                   {ObjectiveKind::least_squares, "least_squares"},
                                                   {ObjectiveKind::identity, "identity"}}};
constexpr NameTable<GraphKind, 3> kTopologies{{{GraphKind::complete, "complete"},
                                               {GraphKind::ring, "ring"},
                                               {GraphKind::erdos_renyi, "erdos_renyi"}}};
constexpr NameTable<WeightsKind, 3> kWeights{{{WeightsKind::metropolis, "metropolis"},
                                              {WeightsKind::sinkhorn, "sinkhorn"},
                                              {WeightsKind::lazy_sinkhorn, "lazy_sinkhorn"}}};
constexpr NameTable<Spectrum, 2> kSpectra{{{Spectrum::uniform, "uniform"}, {Spectrum::geometric, "geometric"}}};

constexpr std::array<std::string_view, 20> kKeys{
    "alpha0", "alternation_period", "clamp", "common_minimizer", "condition_cap", "edge_prob", "eps", "m",
    "max_iter", "mode", "n", "objective", "output", "p", "rule", "seed", "shared_hessian",
    "spectrum", "topology", "weights"};

template <typename E, std::size_t N>
std::string_view name_of(const NameTable<E, N>& table, E value) {
    for (auto [k, name] : table)
        if (k == value) return name;
    return "?";
}

class Reader {
public:
    explicit Reader(const json& j) : j_(j) {}

    bool has(const char* key) const { return j_.contains(key); }

    std::string text(const char* key) const {
        const json& v = j_.at(key);
        if (!v.is_string()) fail(key, "must be a string");
        return v.get<std::string>();
    }

    template <typename E, std::size_t N>
    E choice(const char* key, const NameTable<E, N>& table) const {
        const std::string s = text(key);
        for (auto [k, name] : table)
            if (name == s) return k;
        fail(key, "has unknown value \"" + s + "\"");
    }

    std::uint64_t count(const char* key, std::uint64_t min) const {
        const json& v = j_.at(key);
        if (!v.is_number_integer()) fail(key, "must be an integer");
        if (v.is_number_unsigned()) {
            const auto u = v.get<std::uint64_t>();
            if (u < min) fail(key, "must be at least " + std::to_string(min));
            return u;
        }
        const auto s = v.get<std::int64_t>();
        if (s < 0 || static_cast<std::uint64_t>(s) < min) fail(key, "must be at least " + std::to_string(min));
        return static_cast<std::uint64_t>(s);
    }

    double real(const char* key) const {
        const json& v = j_.at(key);
        if (!v.is_number()) fail(key, "must be a number");
        const double d = v.get<double>();
        if (!std::isfinite(d)) fail(key, "must be finite");
        return d;
    }

    bool flag(const char* key) const {
        const json& v = j_.at(key);
        if (!v.is_boolean()) fail(key, "must be true or false");
        return v.get<bool>();
    }

    bool is_null(const char* key) const { return j_.at(key).is_null(); }

    [[noreturn]] static void fail(const std::string& key, const std::string& what) {
        throw ConfigError("config key \"" + key + "\" " + what, key);
    }

private:
    const json& j_;
};

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (auto k : kKeys) known = known || k == item.key();
        if (!known) Reader::fail(item.key(), "is not recognized");
    }
    for (const char* key : {"mode", "objective", "max_iter"})
        if (!j.contains(key)) Reader::fail(key, "is required");

    const Reader r(j);
    ExperimentConfig c;
    c.mode = r.choice("mode", kModes);
    c.objective = r.choice("objective", kObjectives);
    c.max_iter = r.count("max_iter", 1);

    c.n = c.mode == Mode::centralized ? 1 : 10;
    if (r.has("n")) {
        c.n = r.count("n", 1);
        if (c.mode == Mode::centralized && c.n != 1) Reader::fail("n", "must be 1 in centralized mode");
    }
    if (r.has("p")) c.p = r.count("p", 1);
    if (r.has("topology")) c.topology = r.choice("topology", kTopologies);
    if (r.has("edge_prob")) {
        c.edge_prob = r.real("edge_prob");
        if (!(c.edge_prob > 0.0 && c.edge_prob <= 1.0)) Reader::fail("edge_prob", "must lie in (0, 1]");
    }
    if (r.has("weights")) c.weights = r.choice("weights", kWeights);
    if (r.has("condition_cap")) {
        c.condition_cap = r.real("condition_cap");
        if (!(c.condition_cap >= 1.0)) Reader::fail("condition_cap", "must be at least 1");
    }
    if (r.has("m") && !r.is_null("m")) c.m = r.count("m", 1);
    if (c.objective == ObjectiveKind::least_squares && c.rows() < c.p)
        Reader::fail("m", "must be at least p for least squares");
    if (r.has("spectrum")) c.spectrum = r.choice("spectrum", kSpectra);
    if (r.has("shared_hessian")) c.shared_hessian = r.flag("shared_hessian");
    if (r.has("common_minimizer")) c.common_minimizer = r.flag("common_minimizer");

    if (r.has("rule")) {
        const auto v = parse_step_variant(r.text("rule"));
        if (!v) Reader::fail("rule", "has unknown value \"" + r.text("rule") + "\"");
        c.rule.variant = *v;
    }
    if (r.has("alpha0") && !r.is_null("alpha0")) {
        const double a = r.real("alpha0");
        if (!(a > 0.0)) Reader::fail("alpha0", "must be positive");
        c.rule.alpha0 = a;
    }
    if (r.has("clamp")) {
        const auto m = parse_clamp_mode(r.text("clamp"));
        if (!m) Reader::fail("clamp", "has unknown value \"" + r.text("clamp") + "\"");
        c.rule.clamp = *m;
    }
    if (r.has("alternation_period")) c.rule.alternation_period = r.count("alternation_period", 0);
    if (c.rule.alternation_period > 0 && !is_bb(c.rule.variant))
        Reader::fail("alternation_period", "only applies to bb1 or bb2");

    if (r.has("eps")) {
        c.eps = r.real("eps");
        if (!(c.eps > 0.0)) Reader::fail("eps", "must be positive");
    }
    if (r.has("seed")) c.seed = r.count("seed", 0);
    if (r.has("output")) {
        c.output = r.text("output");
        if (c.output.empty()) Reader::fail("output", "must not be empty");
    }
    return c;
}

std::string serialize_config(const ExperimentConfig& c) {
    json j;
    j["mode"] = name_of(kModes, c.mode);
    j["n"] = c.n;
    j["p"] = c.p;
    j["topology"] = name_of(kTopologies, c.topology);
    j["edge_prob"] = c.edge_prob;
    j["weights"] = name_of(kWeights, c.weights);
    j["objective"] = name_of(kObjectives, c.objective);
    j["condition_cap"] = c.condition_cap;
    j["m"] = c.m ? json(*c.m) : json(nullptr);
    j["spectrum"] = name_of(kSpectra, c.spectrum);
    j["shared_hessian"] = c.shared_hessian;
    j["common_minimizer"] = c.common_minimizer;
    j["rule"] = to_string(c.rule.variant);
    j["alpha0"] = c.rule.alpha0 ? json(*c.rule.alpha0) : json(nullptr);
    j["clamp"] = to_string(c.rule.clamp);
    j["alternation_period"] = c.rule.alternation_period;
    j["eps"] = c.eps;
    j["max_iter"] = c.max_iter;
    j["seed"] = c.seed;
    j["output"] = c.output;
    return j.dump(2) + "\n";
}

std::string normalize_config(std::string_view text) { return serialize_config(parse_config(text)); }

}  // namespace dbb
