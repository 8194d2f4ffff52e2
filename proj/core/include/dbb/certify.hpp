#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dbb {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Exact termination on ½xᵀx: centralized by round 2, distributed within 5 rounds.
CheckResult check_superlinear(std::uint64_t seed);
/// 1/L ≤ 2/(μ+L) ≤ 1/μ on random pairs; raw BB steps inside [1/L, 1/μ] on random quadratics.
CheckResult check_step_sandwich(std::uint64_t seed);
/// lemma_range ratios under √(1 − c₂/L) on 20 quadratics, plus the μ = L case.
CheckResult check_centralized_qlinear(std::uint64_t seed);
/// Consensus deviation under G·√k/μ_min/√(1−λ²) on the 100-agent instance.
CheckResult check_consensus_deviation(std::uint64_t seed);
/// Distributed runs that must collapse onto the centralized trajectory.
CheckResult check_reduction(std::uint64_t seed);

std::vector<CheckResult> run_verification(std::uint64_t seed);

}  // namespace dbb
