#include "dbb/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dbb/error.hpp"

namespace dbb {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw ConfigError(std::string("dimension mismatch in ") + what + ": " + std::to_string(a) +
                          " vs " + std::to_string(b));
}

constexpr int kJacobiSweepCap = 100;

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require_same(r.size(), cols_, "matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(const Vector& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same(a.cols(), b.rows(), "matrix product");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

SymMatrix::SymMatrix(const Matrix& m) : SymMatrix(m.rows()) {
    require_same(m.rows(), m.cols(), "symmetric matrix construction");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j) set(i, j, 0.5 * (m(i, j) + m(j, i)));
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : SymMatrix(Matrix(rows)) {}

SymMatrix SymMatrix::identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }

SymMatrix SymMatrix::diagonal(const Vector& d) { return SymMatrix(Matrix::diagonal(d)); }

void SymMatrix::set(std::size_t i, std::size_t j, double v) {
    data_[i * dim_ + j] = v;
    data_[j * dim_ + i] = v;
}

SymMatrix SymMatrix::scaled(double c) const {
    SymMatrix out(*this);
    for (auto& v : out.data_) v *= c;
    return out;
}

Matrix SymMatrix::to_matrix() const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

Vector matvec(const SymMatrix& m, const Vector& v) {
    require_same(m.dim(), v.size(), "matvec");
    Vector out(m.dim(), 0.0);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m.dim(); ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Vector matvec(const Matrix& m, const Vector& v) {
    require_same(m.cols(), v.size(), "matvec");
    Vector out(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Vector matvec_transposed(const Matrix& m, const Vector& v) {
    require_same(m.rows(), v.size(), "transposed matvec");
    Vector out(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += m(i, j) * v[i];
    return out;
}

double dot(const Vector& a, const Vector& b) {
    require_same(a.size(), b.size(), "dot");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm(const Vector& v) {
    double scale = 0.0;
    for (double x : v) {
        if (!std::isfinite(x)) return std::numeric_limits<double>::infinity();
        scale = std::max(scale, std::abs(x));
    }
    if (scale == 0.0) return scale;
    double acc = 0.0;
    for (double x : v) {
        const double t = x / scale;
        acc += t * t;
    }
    return scale * std::sqrt(acc);
}

Vector operator+(const Vector& a, const Vector& b) {
    require_same(a.size(), b.size(), "vector sum");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    require_same(a.size(), b.size(), "vector difference");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vector operator*(double c, const Vector& v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

bool all_finite(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

Vector sym_eigenvalues(const SymMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) throw ConfigError("eigenvalues of an empty matrix");
    Matrix a = m.to_matrix();

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
        return std::sqrt(2.0 * s);
    };
    double total = 0.0;
    for (double x : a.data()) total += x * x;
    const double target = 1e-15 * std::sqrt(total);

    int sweep = 0;
    for (; sweep < kJacobiSweepCap; ++sweep) {
        if (off_norm() <= target) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }
    const double residual = off_norm();
    if (sweep == kJacobiSweepCap && residual > target)
        throw NumericError("Jacobi eigensolver did not converge", residual);

    Vector ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

EigBounds sym_eig_bounds(const SymMatrix& m) {
    const Vector ev = sym_eigenvalues(m);
    return {ev.front(), ev.back()};
}

Vector spd_solve(const SymMatrix& m, const Vector& rhs) {
    require_same(m.dim(), rhs.size(), "spd_solve");
    const std::size_t n = m.dim();
    const EigBounds eb = sym_eig_bounds(m);
    if (!(eb.lambda_min > 1e-12 * std::abs(eb.lambda_max)))
        throw SingularityError("matrix is not positive definite", eb.lambda_min);

    Matrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = m(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > 0.0)) throw SingularityError("Cholesky pivot is not positive", eb.lambda_min);
        l(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double v = m(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
            l(i, j) = v / l(j, j);
        }
    }
    Vector z(rhs);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) z[i] -= l(i, k) * z[k];
        z[i] /= l(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) z[i] -= l(k, i) * z[k];
        z[i] /= l(i, i);
    }
    return z;
}

}  // namespace dbb
