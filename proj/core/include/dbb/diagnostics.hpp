#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "dbb/centralized.hpp"
#include "dbb/dist_engine.hpp"
#include "dbb/objectives.hpp"
#include "dbb/record.hpp"

namespace dbb {

/// 2/(μ+L)
double rate_c1(double mu, double L) noexcept;
/// 2μL/(μ+L)
double rate_c2(double mu, double L) noexcept;
/// √(1 − c₂/L), exactly 0 when μ = L.
double centralized_rate_bound(double mu, double L) noexcept;
/// √(1 − c₂/(nL)); reduces to the centralized bound at n = 1.
double distributed_rate_bound(double mu, double L, std::size_t n) noexcept;
/// G·√k/μ_min·1/√(1−λ²)
double consensus_bound(double G, std::size_t k, double mu_min, double lambda);

/// Everything except `ratio` and `bound_consensus`, which need the whole run.
IterationRecord record_round(const NetworkState& state, const NetworkObjective& objective,
                             const Vector& x_star);

/// ratio(k) = opt_err(k)/opt_err(k−1); NaN at k = 0 and when opt_err(k−1) < 1e-14.
void link_ratios(std::vector<IterationRecord>& records);
void attach_consensus_bound(std::vector<IterationRecord>& records, double G, double mu_min,
                            double lambda);

/// Records for a centralized trace (consensus_err ≡ 0, n = 1).
std::vector<IterationRecord> records_from_trace(const SolverTrace& trace, const Objective& obj,
                                                const Vector& x_star);

struct BoundCheck {
    bool pass = true;
    /// min over k ≥ 1 of bound + 1e-9 − consensus_err
    double min_slack = 0.0;
    std::size_t worst_round = 0;
};

BoundCheck check_consensus_bound(const std::vector<IterationRecord>& records, double G,
                                 double mu_min, double lambda);

enum class Convergence { q_linear, superlinear, sublinear, diverged };

std::string_view to_string(Convergence c) noexcept;

struct ConvergenceVerdict {
    Convergence classification = Convergence::q_linear;
    double worst_ratio = 0.0;
    std::optional<std::size_t> rounds_to_eps;
};

inline constexpr std::size_t kDefaultWindow = 5;

ConvergenceVerdict classify_convergence(const std::vector<IterationRecord>& records,
                                        std::size_t window = kDefaultWindow, double eps = 1e-8);

}  // namespace dbb
