#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "dbb/numerics.hpp"
#include "dbb/rng.hpp"

namespace dbb {

/// Smooth strongly convex function with a constant Hessian.
class Objective {
public:
    virtual ~Objective() = default;

    virtual std::size_t dim() const = 0;
    virtual double value(const Vector& x) const = 0;
    virtual Vector gradient(const Vector& x) const = 0;
    virtual const SymMatrix& hessian() const = 0;

    double mu() const noexcept { return mu_; }
    double L() const noexcept { return L_; }

protected:
    /// Fills mu/L from the Hessian; throws NotStronglyConvexError when mu ≤ 1e-12.
    void init_curvature();

private:
    double mu_ = 0.0;
    double L_ = 0.0;
};

/// f(x) = ½ xᵀA x + bᵀx, A stored as given; Hessian (A + Aᵀ)/2.
class QuadraticObjective final : public Objective {
public:
    QuadraticObjective(Matrix A, Vector b);

    std::size_t dim() const override { return b_.size(); }
    double value(const Vector& x) const override;
    Vector gradient(const Vector& x) const override;
    const SymMatrix& hessian() const override { return H_; }

    const Matrix& A() const noexcept { return A_; }
    const Vector& b() const noexcept { return b_; }

private:
    Matrix A_;
    Vector b_;
    SymMatrix H_;
};

/// f(x) = ‖Ax − b‖², Hessian 2AᵀA.
class LeastSquaresObjective final : public Objective {
public:
    LeastSquaresObjective(Matrix A, Vector b);

    std::size_t dim() const override { return A_.cols(); }
    double value(const Vector& x) const override;
    Vector gradient(const Vector& x) const override;
    const SymMatrix& hessian() const override { return H_; }

    const Matrix& A() const noexcept { return A_; }
    const Vector& b() const noexcept { return b_; }

private:
    Matrix A_;
    Vector b_;
    SymMatrix H_;
};

struct CurvatureConstants {
    double mu;
    double L;
};

CurvatureConstants curvature_constants(const Objective& obj);

/// Minimizer of a single objective: solves H x = −∇f(0).
Vector optimal_point(const Objective& obj);

/// Sum of per-agent objectives sharing one dimension.
class NetworkObjective {
public:
    explicit NetworkObjective(std::vector<std::shared_ptr<const Objective>> agents);

    std::size_t size() const noexcept { return agents_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    const Objective& agent(std::size_t i) const { return *agents_[i]; }
    const std::vector<std::shared_ptr<const Objective>>& agents() const noexcept { return agents_; }

    double mu_bar() const noexcept { return mu_bar_; }
    double L_bar() const noexcept { return L_bar_; }
    double mu_min() const noexcept { return mu_min_; }

    double value(const Vector& x) const;
    /// Σ_i ∇f_i(x)
    Vector gradient(const Vector& x) const;

private:
    std::vector<std::shared_ptr<const Objective>> agents_;
    std::size_t dim_ = 0;
    double mu_bar_ = 0.0;
    double L_bar_ = 0.0;
    double mu_min_ = 0.0;
};

/// Solves Σ_i H_i x = −Σ_i ∇f_i(0).
Vector optimal_point(const NetworkObjective& net);

enum class Spectrum { uniform, geometric };

struct NetworkOptions {
    /// uniform: eigenvalues drawn from U[1, cap]; geometric: 1, …, cap evenly in log scale.
    Spectrum spectrum = Spectrum::uniform;
    /// All agents use the same A (one rotation, one spectrum); b_i still differ.
    bool shared_hessian = false;
    /// b_i = −H_i x_c for one random x_c ~ U[−1, 1]^p, so every agent is minimized at x_c.
    bool common_minimizer = false;
};

/// Agents with A_i = Q_i diag(d_i) Q_iᵀ, spectrum in [1, condition_cap], b_i ~ U[−1, 1]^p.
NetworkObjective random_network_objective(std::size_t n, std::size_t p, double condition_cap,
                                          std::uint64_t seed, NetworkOptions options = {});

/// A = U diag(σ) Vᵀ (m × p) with 2σ² spread over [1/cap, 1] and both ends attained, so L = 1
/// and μ = 1/cap (p ≥ 2). b ~ U[−1, 1]^m.
LeastSquaresObjective random_least_squares(std::size_t m, std::size_t p, double condition_cap,
                                           std::uint64_t seed);
LeastSquaresObjective random_least_squares(std::size_t m, std::size_t p, double condition_cap,
                                           std::mt19937_64& rng);

/// p × p orthogonal matrix built from seeded Givens rotations.
Matrix random_orthogonal(std::size_t p, std::mt19937_64& rng);

/// ½ xᵀx
std::shared_ptr<const Objective> identity_objective(std::size_t p);

}  // namespace dbb
