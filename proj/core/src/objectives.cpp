#include "dbb/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dbb/error.hpp"

namespace dbb {

namespace {

constexpr double kStrongConvexityFloor = 1e-12;
constexpr int kRotationPasses = 2;

SymMatrix gram_twice(const Matrix& a) {
    Matrix g = a.transpose() * a;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= 2.0;
    return SymMatrix(g);
}

Matrix spectral_matrix(const Matrix& q, const Vector& d) {
    return q * Matrix::diagonal(d) * q.transpose();
}

Vector draw_spectrum(std::size_t p, double cap, Spectrum spectrum, std::mt19937_64& rng) {
    Vector d(p);
    if (spectrum == Spectrum::geometric) {
        for (std::size_t k = 0; k < p; ++k) {
            const double t = p == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(p - 1);
            d[k] = std::pow(cap, t);
        }
        if (p > 1) d[p - 1] = cap;
        return d;
    }
    std::uniform_real_distribution<double> u(1.0, cap);
    for (auto& v : d) v = cap == 1.0 ? 1.0 : u(rng);
    return d;
}

Vector draw_uniform(std::size_t m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vector b(m);
    for (auto& v : b) v = u(rng);
    return b;
}

}  // namespace

void Objective::init_curvature() {
    const EigBounds eb = sym_eig_bounds(hessian());
    if (!(eb.lambda_min > kStrongConvexityFloor))
        throw NotStronglyConvexError("objective is not strongly convex", eb.lambda_min);
    mu_ = eb.lambda_min;
    L_ = eb.lambda_max;
}

QuadraticObjective::QuadraticObjective(Matrix A, Vector b) : A_(std::move(A)), b_(std::move(b)) {
    if (A_.rows() != A_.cols() || A_.rows() != b_.size())
        throw ConfigError("quadratic objective needs square A matching b", "p");
    if (b_.empty()) throw ConfigError("objective dimension must be positive", "p");
    H_ = SymMatrix(A_);
    init_curvature();
}

double QuadraticObjective::value(const Vector& x) const {
    return 0.5 * dot(x, matvec(A_, x)) + dot(b_, x);
}

Vector QuadraticObjective::gradient(const Vector& x) const { return matvec(H_, x) + b_; }

LeastSquaresObjective::LeastSquaresObjective(Matrix A, Vector b) : A_(std::move(A)), b_(std::move(b)) {
    if (A_.rows() != b_.size()) throw ConfigError("least squares needs rows(A) == size(b)", "m");
    if (A_.cols() == 0) throw ConfigError("objective dimension must be positive", "p");
    H_ = gram_twice(A_);
    init_curvature();
}

double LeastSquaresObjective::value(const Vector& x) const {
    const Vector r = matvec(A_, x) - b_;
    return dot(r, r);
}

Vector LeastSquaresObjective::gradient(const Vector& x) const {
    return 2.0 * matvec_transposed(A_, matvec(A_, x) - b_);
}

CurvatureConstants curvature_constants(const Objective& obj) { return {obj.mu(), obj.L()}; }

Vector optimal_point(const Objective& obj) {
    const Vector g0 = obj.gradient(Vector(obj.dim(), 0.0));
    return spd_solve(obj.hessian(), -1.0 * g0);
}

NetworkObjective::NetworkObjective(std::vector<std::shared_ptr<const Objective>> agents)
    : agents_(std::move(agents)) {
    if (agents_.empty()) throw ConfigError("network needs at least one agent", "n");
    dim_ = agents_.front()->dim();
    mu_min_ = agents_.front()->mu();
    for (const auto& a : agents_) {
        if (a->dim() != dim_) throw ConfigError("agents disagree on dimension", "p");
        mu_bar_ += a->mu();
        L_bar_ += a->L();
        mu_min_ = std::min(mu_min_, a->mu());
    }
    mu_bar_ /= static_cast<double>(agents_.size());
    L_bar_ /= static_cast<double>(agents_.size());
}

double NetworkObjective::value(const Vector& x) const {
    double v = 0.0;
    for (const auto& a : agents_) v += a->value(x);
    return v;
}

Vector NetworkObjective::gradient(const Vector& x) const {
    Vector g(dim_, 0.0);
    for (const auto& a : agents_) g = g + a->gradient(x);
    return g;
}

Vector optimal_point(const NetworkObjective& net) {
    const std::size_t p = net.dim();
    Matrix h(p, p);
    for (const auto& a : net.agents()) {
        const SymMatrix& hi = a->hessian();
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) h(i, j) += hi(i, j);
    }
    const Vector g0 = net.gradient(Vector(p, 0.0));
    return spd_solve(SymMatrix(h), -1.0 * g0);
}

Matrix random_orthogonal(std::size_t p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    Matrix q = Matrix::identity(p);
    for (int pass = 0; pass < kRotationPasses; ++pass)
        for (std::size_t i = 0; i + 1 < p; ++i)
            for (std::size_t j = i + 1; j < p; ++j) {
                const double t = angle(rng);
                const double c = std::cos(t), s = std::sin(t);
                for (std::size_t k = 0; k < p; ++k) {
                    const double qi = q(k, i), qj = q(k, j);
                    q(k, i) = c * qi - s * qj;
                    q(k, j) = s * qi + c * qj;
                }
            }
    return q;
}

NetworkObjective random_network_objective(std::size_t n, std::size_t p, double condition_cap,
                                          std::uint64_t seed, NetworkOptions options) {
    if (n < 1) throw ConfigError("agent count must be positive", "n");
    if (p < 1) throw ConfigError("dimension must be positive", "p");
    if (!(condition_cap >= 1.0)) throw ConfigError("condition cap must be at least 1", "condition_cap");

    auto rng = make_stream(seed, Stream::objective);
    std::vector<std::shared_ptr<const Objective>> agents;
    agents.reserve(n);
    Matrix shared;
    const Vector centre = options.common_minimizer ? draw_uniform(p, rng) : Vector{};
    for (std::size_t i = 0; i < n; ++i) {
        Matrix a;
        if (options.shared_hessian && i > 0) {
            a = shared;
        } else {
            const Vector d = draw_spectrum(p, condition_cap, options.spectrum, rng);
            const Matrix q = random_orthogonal(p, rng);
            a = SymMatrix(spectral_matrix(q, d)).to_matrix();
            shared = a;
        }
        Vector b = options.common_minimizer ? -1.0 * matvec(SymMatrix(a), centre) : draw_uniform(p, rng);
        agents.push_back(std::make_shared<QuadraticObjective>(std::move(a), std::move(b)));
    }
    return NetworkObjective(std::move(agents));
}

LeastSquaresObjective random_least_squares(std::size_t m, std::size_t p, double condition_cap,
                                           std::uint64_t seed) {
    auto rng = make_stream(seed, Stream::objective);
    return random_least_squares(m, p, condition_cap, rng);
}

LeastSquaresObjective random_least_squares(std::size_t m, std::size_t p, double condition_cap,
                                           std::mt19937_64& rng) {
    if (p < 1) throw ConfigError("dimension must be positive", "p");
    if (m < p) throw ConfigError("least squares needs m >= p for a positive definite AᵀA", "m");
    if (!(condition_cap >= 1.0)) throw ConfigError("condition cap must be at least 1", "condition_cap");

    std::uniform_real_distribution<double> u(1.0 / condition_cap, 1.0);
    Vector h(p);
    for (auto& v : h) v = condition_cap == 1.0 ? 1.0 : u(rng);
    h[0] = 1.0;
    if (p > 1) h[p - 1] = 1.0 / condition_cap;

    const Matrix um = random_orthogonal(m, rng);
    const Matrix v = random_orthogonal(p, rng);
    Matrix us(m, p);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < p; ++j) us(i, j) = um(i, j) * std::sqrt(h[j] / 2.0);
    Matrix a = us * v.transpose();
    return LeastSquaresObjective(std::move(a), draw_uniform(m, rng));
}

std::shared_ptr<const Objective> identity_objective(std::size_t p) {
    return std::make_shared<QuadraticObjective>(Matrix::identity(p), Vector(p, 0.0));
}

}  // namespace dbb
