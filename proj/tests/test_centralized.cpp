#include <doctest.h>

#include <memory>

#include "dbb/centralized.hpp"
#include "dbb/diagnostics.hpp"
#include "dbb/error.hpp"
#include "dbb/objectives.hpp"
#include "oracles.hpp"

using dbb::Matrix;
using dbb::StepRule;
using dbb::StepVariant;
using dbb::Vector;

TEST_CASE("identity objective terminates after one bb step") {
    const auto f = dbb::identity_objective(2);
    StepRule r;
    r.alpha0 = 0.5;
    const auto t = dbb::solve_centralized(*f, {3, -4}, r, 1e-300, 10);
    REQUIRE(t.iterates.size() >= 3);
    CHECK(t.step_sizes[0] == 0.5);
    CHECK(t.step_sizes[1] == doctest::Approx(1.0));
    CHECK(dbb::norm(t.iterates[2]) < 1e-12);
}

TEST_CASE("starting at the optimum stops immediately") {
    const auto net = dbb::random_network_objective(1, 5, 20.0, 4);
    const Vector xs = dbb::optimal_point(net);
    for (auto v : {StepVariant::bb1, StepVariant::decay, StepVariant::const_inv_mu}) {
        StepRule r;
        r.variant = v;
        const auto t = dbb::solve_centralized(net.agent(0), xs, r, 1e-8, 50);
        CHECK(t.steps() == 0);
        CHECK(t.iterates.size() == 1);
        CHECK(t.grad_norms[0] < 1e-8);
    }
}

TEST_CASE("scalar quadratic with inverse lipschitz step") {
    const dbb::QuadraticObjective f(Matrix{{2}}, {0});
    StepRule r;
    r.variant = StepVariant::const_inv_l;
    const auto t = dbb::solve_centralized(f, {1}, r, 1e-12, 5);
    CHECK(t.iterates[1][0] == 0.0);
    CHECK(t.steps() == 1);
}

TEST_CASE("trace lengths are consistent") {
    const auto net = dbb::random_network_objective(1, 6, 30.0, 1);
    StepRule r;
    r.clamp = dbb::ClampMode::lemma_range;
    const auto t = dbb::solve_centralized(net.agent(0), Vector(6, 1.0), r, 1e-10, 40);
    CHECK(t.iterates.size() == t.steps() + 1);
    CHECK(t.grad_norms.size() == t.steps() + 1);
    CHECK(t.clamp_totals.size() == t.steps());
    CHECK(t.breach_totals.size() == t.steps());
    CHECK(t.clamp_totals.back() == t.clamp_events);
    CHECK(t.clamp_events > 0);
}

TEST_CASE("invalid arguments") {
    const auto f = dbb::identity_objective(2);
    CHECK_THROWS_AS(dbb::solve_centralized(*f, {1, 1}, {}, 0.0, 5), dbb::ConfigError);
    CHECK_THROWS_AS(dbb::solve_centralized(*f, {1, 1}, {}, 1e-8, 0), dbb::ConfigError);
    CHECK_THROWS_AS(dbb::solve_centralized(*f, {1, 1, 1}, {}, 1e-8, 5), dbb::ConfigError);
}

TEST_CASE("divergence reports the iteration") {
    const dbb::QuadraticObjective f(Matrix::diagonal({1, 1e6}), {0, 0});
    StepRule r;
    r.variant = StepVariant::const_inv_mu;
    try {
        dbb::solve_centralized(f, {1, 1}, r, 1e-12, 1000);
        FAIL("expected divergence");
    } catch (const dbb::DivergenceError& e) {
        CHECK(e.iteration() > 1);
        CHECK(e.agent() == -1);
    }
}

TEST_CASE("q-linear contraction in lemma range") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto net = dbb::random_network_objective(1, 8, 3.0 + 4.0 * static_cast<double>(seed), seed);
        const auto& f = net.agent(0);
        const Vector xs = dbb::optimal_point(net);
        StepRule r;
        r.clamp = dbb::ClampMode::lemma_range;
        const auto t = dbb::solve_centralized(f, Vector(8, 2.0), r, 1e-9, 200);
        const double bound = dbb::centralized_rate_bound(f.mu(), f.L());
        for (std::size_t k = 1; k + 1 < t.iterates.size(); ++k) {
            const double prev = dbb::norm(t.iterates[k] - xs);
            if (prev < 1e-12) break;
            CHECK(dbb::norm(t.iterates[k + 1] - xs) / prev <= bound + 1e-9);
        }
    }
}

TEST_CASE("breach falls back to the harmonic step") {
    const StepRule r;
    const auto out = dbb::compute_step(r, 1, {1, 0}, {0, 1}, 1, 3, 0.4);
    CHECK(out.breach);
    CHECK(out.alpha == doctest::Approx(0.5));
}

TEST_CASE("bb steps converge on random quadratics") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto net = dbb::random_network_objective(1, 10, 100.0, seed);
        for (auto v : {StepVariant::bb1, StepVariant::bb2}) {
            StepRule r;
            r.variant = v;
            const auto t = dbb::solve_centralized(net.agent(0), Vector(10, 1.0), r, 1e-8, 2000);
            CHECK(t.grad_norms.back() < 1e-8);
            CHECK(t.curvature_breaches == 0);
        }
    }
}
