#include "dbb/step_rule.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "dbb/error.hpp"

namespace dbb {

namespace {

constexpr std::array<std::pair<StepVariant, std::string_view>, 6> kVariantNames{{
    {StepVariant::bb1, "bb1"},
    {StepVariant::bb2, "bb2"},
    {StepVariant::const_inv_l, "const_inv_l"},
    {StepVariant::const_inv_mu, "const_inv_mu"},
    {StepVariant::const_harmonic, "const_harmonic"},
    {StepVariant::decay, "decay"},
}};

constexpr std::array<std::pair<ClampMode, std::string_view>, 3> kClampNames{{
    {ClampMode::raw, "raw"},
    {ClampMode::bb_range, "bb_range"},
    {ClampMode::lemma_range, "lemma_range"},
}};

bool breached(double sy, const Vector& s, const Vector& y) {
    return sy <= kCurvatureBreachDelta * norm(s) * norm(y);
}

}  // namespace

bool is_bb(StepVariant v) noexcept { return v == StepVariant::bb1 || v == StepVariant::bb2; }

std::string_view to_string(StepVariant v) noexcept {
    for (auto [k, name] : kVariantNames)
        if (k == v) return name;
    return "?";
}

std::string_view to_string(ClampMode m) noexcept {
    for (auto [k, name] : kClampNames)
        if (k == m) return name;
    return "?";
}

std::optional<StepVariant> parse_step_variant(std::string_view s) {
    for (auto [k, name] : kVariantNames)
        if (name == s) return k;
    return std::nullopt;
}

std::optional<ClampMode> parse_clamp_mode(std::string_view s) {
    for (auto [k, name] : kClampNames)
        if (name == s) return k;
    return std::nullopt;
}

SecantStep bb1_step(const Vector& s, const Vector& y) {
    if (s.size() != y.size()) throw ConfigError("secant pair dimension mismatch");
    const double ss = dot(s, s);
    if (ss == 0.0) return {SecantStatus::converged, 0.0};
    const double sy = dot(s, y);
    if (breached(sy, s, y)) return {SecantStatus::breach, 0.0};
    return {SecantStatus::ok, ss / sy};
}

SecantStep bb2_step(const Vector& s, const Vector& y) {
    if (s.size() != y.size()) throw ConfigError("secant pair dimension mismatch");
    const double yy = dot(y, y);
    if (yy == 0.0 || dot(s, s) == 0.0) return {SecantStatus::converged, 0.0};
    const double sy = dot(s, y);
    if (breached(sy, s, y)) return {SecantStatus::breach, 0.0};
    return {SecantStatus::ok, sy / yy};
}

double harmonic_step(double mu, double L) noexcept { return 2.0 / (mu + L); }

Safeguarded safeguard(double alpha, double mu, double L, ClampMode mode) {
    double lo = 1.0 / L, hi = alpha;
    switch (mode) {
        case ClampMode::raw:
            return {alpha, false};
        case ClampMode::bb_range:
            hi = 1.0 / mu;
            break;
        case ClampMode::lemma_range:
            hi = harmonic_step(mu, L);
            break;
    }
    const double out = std::clamp(alpha, lo, hi);
    return {out, out != alpha};
}

StepVariant active_bb_variant(const StepRule& rule, std::size_t k) noexcept {
    if (rule.alternation_period == 0 || k == 0) return rule.variant;
    const bool flip = ((k - 1) / rule.alternation_period) % 2 == 1;
    if (!flip) return rule.variant;
    return rule.variant == StepVariant::bb1 ? StepVariant::bb2 : StepVariant::bb1;
}

StepOutcome compute_step(const StepRule& rule, std::size_t k, const Vector& s, const Vector& y,
                         double mu, double L, double previous) {
    switch (rule.variant) {
        case StepVariant::const_inv_l:
            return {1.0 / L};
        case StepVariant::const_inv_mu:
            return {1.0 / mu};
        case StepVariant::const_harmonic:
            return {harmonic_step(mu, L)};
        case StepVariant::decay:
            return {1.0 / static_cast<double>(k + 1)};
        case StepVariant::bb1:
        case StepVariant::bb2:
            break;
    }
    if (k == 0) return {rule.alpha0.value_or(1.0 / L)};

    const SecantStep raw = active_bb_variant(rule, k) == StepVariant::bb1 ? bb1_step(s, y)
                                                                          : bb2_step(s, y);
    switch (raw.status) {
        case SecantStatus::converged:
            return {previous};
        case SecantStatus::breach:
            return {harmonic_step(mu, L), false, true};
        case SecantStatus::ok:
            break;
    }
    const Safeguarded g = safeguard(raw.alpha, mu, L, rule.clamp);
    return {g.alpha, g.clamped, false};
}

}  // namespace dbb
