#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "dbb/numerics.hpp"

using dbb::operator+;
using dbb::operator-;
using dbb::operator*;

namespace oracle {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed * 7919 + 17); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline dbb::Vector random_vector(std::mt19937_64& g, std::size_t n, double lo = -1.0, double hi = 1.0) {
    dbb::Vector v(n);
    for (auto& x : v) x = uniform(g, lo, hi);
    return v;
}

inline dbb::SymMatrix random_symmetric(std::mt19937_64& g, std::size_t n) {
    dbb::SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m.set(i, j, uniform(g, -5.0, 5.0));
    return m;
}

// Number of eigenvalues below t, from the inertia of M − tI (LDLᵀ without pivoting).
inline std::size_t count_below(const dbb::SymMatrix& m, double t) {
    const std::size_t n = m.dim();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j) - (i == j ? t : 0.0);
    std::size_t neg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double d = a[k * n + k];
        if (d == 0.0) d = 1e-300;
        if (d < 0) ++neg;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a[i * n + k] / d;
            for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    return neg;
}

// k-th smallest eigenvalue (0-based) by bisection on the inertia count.
inline double bisect_eigenvalue(const dbb::SymMatrix& m, std::size_t k) {
    double r = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.dim(); ++j) s += std::abs(m(i, j));
        r = std::max(r, s);
    }
    double lo = -r - 1.0, hi = r + 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (count_below(m, mid) > k) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Orthogonal Q from Gram-Schmidt on a random matrix.
inline dbb::Matrix random_orthogonal(std::mt19937_64& g, std::size_t n) {
    std::normal_distribution<double> nd;
    std::vector<dbb::Vector> cols;
    while (cols.size() < n) {
        dbb::Vector v(n);
        for (auto& x : v) x = nd(g);
        for (const auto& c : cols) v = v - dbb::dot(v, c) * c;
        const double len = dbb::norm(v);
        if (len < 1e-8) continue;
        cols.push_back((1.0 / len) * v);
    }
    dbb::Matrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j) = cols[j][i];
    return q;
}

// Q diag(d) Qᵀ with the given spectrum.
inline dbb::SymMatrix with_spectrum(std::mt19937_64& g, const dbb::Vector& d) {
    const dbb::Matrix q = random_orthogonal(g, d.size());
    return dbb::SymMatrix(q * dbb::Matrix::diagonal(d) * q.transpose());
}

inline double max_abs_diff(const dbb::Vector& a, const dbb::Vector& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace oracle
