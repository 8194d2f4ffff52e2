#include <doctest.h>

#include "dbb/error.hpp"
#include "dbb/numerics.hpp"
#include "oracles.hpp"

using dbb::SymMatrix;
using dbb::Vector;

TEST_CASE("matvec examples") {
    CHECK(dbb::matvec(SymMatrix::identity(2), Vector{3, 4}) == Vector{3, 4});
    CHECK(dbb::matvec(SymMatrix::diagonal({2, 5}), Vector{1, 1}) == Vector{2, 5});
    CHECK(dbb::matvec(SymMatrix{{2, 1}, {1, 2}}, Vector{1, -1}) == Vector{1, -1});
}

TEST_CASE("matvec rejects mismatched dimensions") {
    CHECK_THROWS_AS(dbb::matvec(SymMatrix::identity(2), Vector{1, 2, 3}), dbb::ConfigError);
}

TEST_CASE("construction symmetrizes") {
    const SymMatrix m(dbb::Matrix{{1, 2}, {4, 3}});
    CHECK(m(0, 1) == 3.0);
    CHECK(m(1, 0) == m(0, 1));
}

TEST_CASE("eig bounds examples") {
    auto e = dbb::sym_eig_bounds(SymMatrix::diagonal({2, 5}));
    CHECK(e.lambda_min == doctest::Approx(2).epsilon(1e-12));
    CHECK(e.lambda_max == doctest::Approx(5).epsilon(1e-12));
    e = dbb::sym_eig_bounds(SymMatrix::identity(3));
    CHECK(e.lambda_min == doctest::Approx(1));
    CHECK(e.lambda_max == doctest::Approx(1));
    e = dbb::sym_eig_bounds(SymMatrix{{2, 1}, {1, 2}});
    CHECK(std::abs(e.lambda_min - 1) < 1e-10);
    CHECK(std::abs(e.lambda_max - 3) < 1e-10);
}

TEST_CASE("eigenvalues agree with the bisection oracle") {
    auto g = oracle::rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const SymMatrix m = oracle::random_symmetric(g, n);
        const Vector ev = dbb::sym_eigenvalues(m);
        REQUIRE(ev.size() == n);
        for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(ev[k] - oracle::bisect_eigenvalue(m, k)) < 1e-8);
        const auto b = dbb::sym_eig_bounds(m);
        CHECK(b.lambda_min <= b.lambda_max);
    }
}

TEST_CASE("eig bounds are homogeneous") {
    auto g = oracle::rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const SymMatrix m = oracle::random_symmetric(g, 2 + trial % 7);
        const double c = oracle::uniform(g, 0.01, 100.0);
        const auto a = dbb::sym_eig_bounds(m);
        const auto b = dbb::sym_eig_bounds(m.scaled(c));
        const double scale = std::max(std::abs(a.lambda_min), std::abs(a.lambda_max));
        CHECK(std::abs(b.lambda_min - c * a.lambda_min) <= 1e-10 * c * scale);
        CHECK(std::abs(b.lambda_max - c * a.lambda_max) <= 1e-10 * c * scale);
    }
}

TEST_CASE("spd solve examples") {
    CHECK(oracle::max_abs_diff(dbb::spd_solve(SymMatrix::identity(2), {7, -3}), {7, -3}) < 1e-14);
    CHECK(oracle::max_abs_diff(dbb::spd_solve(SymMatrix::diagonal({2, 4}), {2, 4}), {1, 1}) < 1e-14);
    CHECK(oracle::max_abs_diff(dbb::spd_solve(SymMatrix{{2, 1}, {1, 2}}, {3, 3}), {1, 1}) < 1e-12);
}

TEST_CASE("spd solve residual on known spectra") {
    auto g = oracle::rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 20;
        const Vector d = oracle::random_vector(g, n, 0.1, 50.0);
        const SymMatrix m = oracle::with_spectrum(g, d);
        const Vector rhs = oracle::random_vector(g, n);
        const Vector z = dbb::spd_solve(m, rhs);
        CHECK(dbb::norm(dbb::matvec(m, z) - rhs) <= 1e-8 * dbb::norm(rhs));
    }
}

TEST_CASE("spd solve rejects indefinite and singular matrices") {
    CHECK_THROWS_AS(dbb::spd_solve(SymMatrix{{1, 2}, {2, 1}}, {1, 1}), dbb::SingularityError);
    CHECK_THROWS_AS(dbb::spd_solve(SymMatrix::diagonal({1, 0}), {1, 1}), dbb::SingularityError);
    try {
        dbb::spd_solve(SymMatrix::diagonal({1, -2}), {1, 1});
        FAIL("expected throw");
    } catch (const dbb::SingularityError& e) {
        CHECK(e.lambda_min() == doctest::Approx(-2));
    }
}

TEST_CASE("norm flags non-finite input") {
    CHECK(dbb::norm({3, 4}) == doctest::Approx(5));
    CHECK(std::isinf(dbb::norm({1, std::nan("")})));
    CHECK_FALSE(dbb::all_finite({1, INFINITY}));
}
