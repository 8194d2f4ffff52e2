#include <doctest.h>

#include "dbb/step_rule.hpp"
#include "oracles.hpp"

using dbb::ClampMode;
using dbb::SecantStatus;
using dbb::StepVariant;
using dbb::Vector;

TEST_CASE("bb1 examples") {
    CHECK(dbb::bb1_step({1, 1}, {1, 1}).alpha == doctest::Approx(1.0));
    CHECK(dbb::bb1_step({1, 0}, {2, 0}).alpha == doctest::Approx(0.5));
    CHECK(dbb::bb1_step({1, 2}, {3, 1}).alpha == doctest::Approx(1.0));
}

TEST_CASE("bb2 examples") {
    CHECK(dbb::bb2_step({1, 1}, {1, 1}).alpha == doctest::Approx(1.0));
    CHECK(dbb::bb2_step({1, 2}, {3, 1}).alpha == doctest::Approx(0.5));
    CHECK(dbb::bb2_step({2, 0}, {1, 0}).alpha == doctest::Approx(2.0));
}

TEST_CASE("secant edge cases") {
    CHECK(dbb::bb1_step({1, 0}, {-1, 0}).status == SecantStatus::breach);
    CHECK(dbb::bb1_step({1, 0}, {0, 1}).status == SecantStatus::breach);
    CHECK(dbb::bb2_step({1, 0}, {-2, 0}).status == SecantStatus::breach);
    CHECK(dbb::bb1_step({0, 0}, {1, 1}).status == SecantStatus::converged);
    CHECK(dbb::bb2_step({1, 1}, {0, 0}).status == SecantStatus::converged);
    CHECK(dbb::bb1_step({1, 1}, {1, 1}).status == SecantStatus::ok);
}

TEST_CASE("safeguard examples") {
    CHECK(dbb::safeguard(0.9, 2, 10, ClampMode::bb_range).alpha == doctest::Approx(0.5));
    CHECK(dbb::safeguard(0.9, 2, 10, ClampMode::bb_range).clamped);
    CHECK(dbb::safeguard(0.05, 2, 10, ClampMode::lemma_range).alpha == doctest::Approx(0.1));
    const auto inside = dbb::safeguard(0.15, 2, 10, ClampMode::lemma_range);
    CHECK(inside.alpha == 0.15);
    CHECK_FALSE(inside.clamped);
    CHECK(dbb::safeguard(123.0, 2, 10, ClampMode::raw).alpha == 123.0);
    CHECK(dbb::safeguard(0.3, 2, 10, ClampMode::lemma_range).alpha == doctest::Approx(1.0 / 6));
}

TEST_CASE("step sandwich on random curvature pairs") {
    auto rng = oracle::rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double mu = std::exp(oracle::uniform(rng, -6, 6));
        const double L = mu * std::exp(oracle::uniform(rng, 0, 8));
        const double h = dbb::harmonic_step(mu, L);
        CHECK(h - 1.0 / L >= -1e-15);
        CHECK(1.0 / mu - h >= -1e-15);
    }
}

TEST_CASE("bb2 never exceeds bb1") {
    auto rng = oracle::rng(12);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + i % 6;
        const Vector s = oracle::random_vector(rng, n);
        const Vector y = oracle::random_vector(rng, n);
        const auto a1 = dbb::bb1_step(s, y), a2 = dbb::bb2_step(s, y);
        if (a1.status != SecantStatus::ok || a2.status != SecantStatus::ok) continue;
        CHECK(a2.alpha <= a1.alpha * (1 + 1e-12));
    }
    CHECK(dbb::bb2_step({1, 2}, {2, 4}).alpha == doctest::Approx(dbb::bb1_step({1, 2}, {2, 4}).alpha));
}

TEST_CASE("bb steps on quadratics lie in the inverse curvature range") {
    auto rng = oracle::rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 9;
        const Vector d = oracle::random_vector(rng, n, 0.5, 80.0);
        const dbb::SymMatrix h = oracle::with_spectrum(rng, d);
        const auto eb = dbb::sym_eig_bounds(h);
        const Vector s = oracle::random_vector(rng, n);
        const Vector y = dbb::matvec(h, s);
        for (const auto& st : {dbb::bb1_step(s, y), dbb::bb2_step(s, y)}) {
            REQUIRE(st.status == SecantStatus::ok);
            CHECK(st.alpha >= 1.0 / eb.lambda_max - 1e-10);
            CHECK(st.alpha <= 1.0 / eb.lambda_min + 1e-10);
        }
    }
}

TEST_CASE("bb steps are scale covariant") {
    auto rng = oracle::rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const Vector s = oracle::random_vector(rng, 5);
        const Vector y = s + 0.3 * oracle::random_vector(rng, 5);
        const double c = oracle::uniform(rng, 0.1, 50);
        const auto a = dbb::bb1_step(s, y), b = dbb::bb1_step(s, c * y);
        if (a.status != SecantStatus::ok) continue;
        CHECK(std::abs(b.alpha * c - a.alpha) <= 1e-12 * a.alpha);
        CHECK(std::abs(dbb::bb2_step(s, c * y).alpha * c - dbb::bb2_step(s, y).alpha) <=
              1e-12 * dbb::bb2_step(s, y).alpha);
    }
}

TEST_CASE("compute step for every rule") {
    const double mu = 2, L = 10;
    dbb::StepRule r;
    r.variant = StepVariant::const_inv_l;
    CHECK(dbb::compute_step(r, 3, {}, {}, mu, L, 0).alpha == doctest::Approx(0.1));
    r.variant = StepVariant::const_inv_mu;
    CHECK(dbb::compute_step(r, 3, {}, {}, mu, L, 0).alpha == doctest::Approx(0.5));
    r.variant = StepVariant::const_harmonic;
    CHECK(dbb::compute_step(r, 3, {}, {}, mu, L, 0).alpha == doctest::Approx(1.0 / 6));
    r.variant = StepVariant::decay;
    CHECK(dbb::compute_step(r, 0, {}, {}, mu, L, 0).alpha == doctest::Approx(1.0));
    CHECK(dbb::compute_step(r, 3, {}, {}, mu, L, 0).alpha == doctest::Approx(0.25));

    r.variant = StepVariant::bb1;
    CHECK(dbb::compute_step(r, 0, {}, {}, mu, L, 0).alpha == doctest::Approx(0.1));
    r.alpha0 = 7.0;
    r.clamp = ClampMode::lemma_range;
    CHECK(dbb::compute_step(r, 0, {}, {}, mu, L, 0).alpha == 7.0);
    const auto clamped = dbb::compute_step(r, 1, {1, 0}, {1, 0}, mu, L, 0);
    CHECK(clamped.alpha == doctest::Approx(1.0 / 6));
    CHECK(clamped.clamped);
    const auto breach = dbb::compute_step(r, 1, {1, 0}, {-1, 0}, mu, L, 0);
    CHECK(breach.breach);
    CHECK(breach.alpha == doctest::Approx(1.0 / 6));
    const auto converged = dbb::compute_step(r, 2, {0, 0}, {0, 0}, mu, L, 0.13);
    CHECK(converged.alpha == 0.13);
    CHECK_FALSE(converged.breach);
}

TEST_CASE("alternation schedule") {
    dbb::StepRule r;
    CHECK(dbb::active_bb_variant(r, 5) == StepVariant::bb1);
    r.alternation_period = 2;
    CHECK(dbb::active_bb_variant(r, 1) == StepVariant::bb1);
    CHECK(dbb::active_bb_variant(r, 2) == StepVariant::bb1);
    CHECK(dbb::active_bb_variant(r, 3) == StepVariant::bb2);
    CHECK(dbb::active_bb_variant(r, 4) == StepVariant::bb2);
    CHECK(dbb::active_bb_variant(r, 5) == StepVariant::bb1);
    r.variant = StepVariant::bb2;
    CHECK(dbb::active_bb_variant(r, 1) == StepVariant::bb2);
    CHECK(dbb::active_bb_variant(r, 3) == StepVariant::bb1);
}

TEST_CASE("names round trip") {
    for (auto v : {StepVariant::bb1, StepVariant::bb2, StepVariant::const_inv_l, StepVariant::const_inv_mu,
                   StepVariant::const_harmonic, StepVariant::decay})
        CHECK(dbb::parse_step_variant(dbb::to_string(v)) == v);
    for (auto m : {ClampMode::raw, ClampMode::bb_range, ClampMode::lemma_range})
        CHECK(dbb::parse_clamp_mode(dbb::to_string(m)) == m);
    CHECK_FALSE(dbb::parse_step_variant("bb3").has_value());
    CHECK(dbb::is_bb(StepVariant::bb2));
    CHECK_FALSE(dbb::is_bb(StepVariant::decay));
}
