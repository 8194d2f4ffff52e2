#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace dbb {

using Vector = std::vector<double>;

/// Dense row-major rectangular matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vector& d);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const noexcept { return data_; }

    Matrix transpose() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Square symmetric matrix. Any input is replaced by (M + Mᵀ)/2, so
/// (i,j) and (j,i) are bit-identical.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t dim);
    explicit SymMatrix(const Matrix& m);
    SymMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static SymMatrix identity(std::size_t n);
    static SymMatrix diagonal(const Vector& d);

    std::size_t dim() const noexcept { return dim_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    /// Writes both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, double v);

    SymMatrix scaled(double c) const;
    Matrix to_matrix() const;

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

Vector matvec(const SymMatrix& m, const Vector& v);
Vector matvec(const Matrix& m, const Vector& v);
/// mᵀ v
Vector matvec_transposed(const Matrix& m, const Vector& v);

double dot(const Vector& a, const Vector& b);
double norm(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double c, const Vector& v);
bool all_finite(const Vector& v);

struct EigBounds {
    double lambda_min;
    double lambda_max;
};

/// Full spectrum, ascending, via cyclic Jacobi rotations.
Vector sym_eigenvalues(const SymMatrix& m);
EigBounds sym_eig_bounds(const SymMatrix& m);

/// Cholesky solve. Throws SingularityError when m is not safely positive definite.
Vector spd_solve(const SymMatrix& m, const Vector& rhs);

}  // namespace dbb
