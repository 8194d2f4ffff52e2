#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "dbb/numerics.hpp"

namespace dbb {

enum class StepVariant { bb1, bb2, const_inv_l, const_inv_mu, const_harmonic, decay };
enum class ClampMode { raw, bb_range, lemma_range };

struct StepRule {
    StepVariant variant = StepVariant::bb1;
    /// Warm-up step for the BB variants; unset means 1/L.
    std::optional<double> alpha0;
    ClampMode clamp = ClampMode::raw;
    /// When > 0, BB rounds switch between the two formulas every this many rounds.
    std::size_t alternation_period = 0;
};

bool is_bb(StepVariant v) noexcept;

std::string_view to_string(StepVariant v) noexcept;
std::string_view to_string(ClampMode m) noexcept;
std::optional<StepVariant> parse_step_variant(std::string_view s);
std::optional<ClampMode> parse_clamp_mode(std::string_view s);

enum class SecantStatus { ok, breach, converged };

struct SecantStep {
    SecantStatus status;
    /// Meaningful only when status == ok.
    double alpha;
};

inline constexpr double kCurvatureBreachDelta = 1e-12;

/// sᵀs / sᵀy
SecantStep bb1_step(const Vector& s, const Vector& y);
/// sᵀy / yᵀy
SecantStep bb2_step(const Vector& s, const Vector& y);

struct Safeguarded {
    double alpha;
    bool clamped;
};

Safeguarded safeguard(double alpha, double mu, double L, ClampMode mode);

/// 2/(μ+L)
double harmonic_step(double mu, double L) noexcept;

/// Formula in effect for BB round `k` (k ≥ 1) once alternation is taken into account.
StepVariant active_bb_variant(const StepRule& rule, std::size_t k) noexcept;

struct StepOutcome {
    double alpha;
    bool clamped = false;
    bool breach = false;
};

/// Step for iteration k (0-based). s and y are ignored at k = 0 and for non-BB rules;
/// `previous` is reused when the secant pair signals convergence.
StepOutcome compute_step(const StepRule& rule, std::size_t k, const Vector& s, const Vector& y,
                         double mu, double L, double previous);

}  // namespace dbb
