#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qwalk {

/// Compensated (Kahan) accumulator. Sums that feed tight tolerance checks
/// (overlaps, norms) go through this instead of a bare double.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("matrix dimensions must be non-negative");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }
    double operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// y = A x
    std::vector<double> multiply(std::span<const double> x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw std::invalid_argument("matrix-vector size mismatch");
        std::vector<double> y(rows_, 0.0);
        for (int i = 0; i < rows_; ++i) {
            KahanSum acc;
            for (int j = 0; j < cols_; ++j) acc.add((*this)(i, j) * x[j]);
            y[i] = acc.value();
        }
        return y;
    }

    /// y = A^T x
    std::vector<double> multiply_transposed(std::span<const double> x) const {
        if (static_cast<int>(x.size()) != rows_)
            throw std::invalid_argument("matrix-vector size mismatch");
        std::vector<double> y(cols_, 0.0);
        for (int j = 0; j < cols_; ++j) {
            KahanSum acc;
            for (int i = 0; i < rows_; ++i) acc.add((*this)(i, j) * x[i]);
            y[j] = acc.value();
        }
        return y;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul size mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

/// Householder QR with column pivoting: A P = Q R.
struct QrPivoted {
    Matrix q;               // m x m orthogonal
    Matrix r;               // m x n upper triangular
    std::vector<int> perm;  // column j of R corresponds to column perm[j] of A

    /// Numerical rank: count of diagonal entries of R above the threshold.
    int rank(double tol) const {
        int n = std::min(r.rows(), r.cols());
        int rk = 0;
        for (int i = 0; i < n; ++i)
            if (std::abs(r(i, i)) > tol) ++rk;
        return rk;
    }
};

inline QrPivoted qr_decompose_pivoted(Matrix a) {
    const int m = a.rows();
    const int n = a.cols();
    const int steps = std::min(m, n);

    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) perm[j] = j;

    // Householder vectors stored per step for the final accumulation of Q.
    std::vector<std::vector<double>> reflectors;
    reflectors.reserve(steps);

    for (int k = 0; k < steps; ++k) {
        // Column pivot: move the remaining column with the largest tail norm up front.
        int pivot = k;
        double best = -1.0;
        for (int j = k; j < n; ++j) {
            double norm2 = 0.0;
            for (int i = k; i < m; ++i) norm2 += a(i, j) * a(i, j);
            if (norm2 > best) {
                best = norm2;
                pivot = j;
            }
        }
        if (pivot != k) {
            for (int i = 0; i < m; ++i) std::swap(a(i, k), a(i, pivot));
            std::swap(perm[k], perm[pivot]);
        }

        // Householder reflector annihilating a(k+1..m-1, k).
        double alpha = 0.0;
        for (int i = k; i < m; ++i) alpha += a(i, k) * a(i, k);
        alpha = std::sqrt(alpha);
        std::vector<double> v(m - k, 0.0);
        if (alpha > 0.0) {
            if (a(k, k) > 0.0) alpha = -alpha;
            for (int i = k; i < m; ++i) v[i - k] = a(i, k);
            v[0] -= alpha;
            double vnorm2 = 0.0;
            for (double x : v) vnorm2 += x * x;
            if (vnorm2 > 0.0) {
                // Apply H = I - 2 v v^T / (v^T v) to the trailing block.
                for (int j = k; j < n; ++j) {
                    double dot = 0.0;
                    for (int i = k; i < m; ++i) dot += v[i - k] * a(i, j);
                    double scale = 2.0 * dot / vnorm2;
                    for (int i = k; i < m; ++i) a(i, j) -= scale * v[i - k];
                }
                a(k, k) = alpha;  // exact by construction
                for (int i = k + 1; i < m; ++i) a(i, k) = 0.0;
            }
        }
        reflectors.push_back(std::move(v));
    }

    // Accumulate Q by applying the reflectors to the identity in reverse.
    Matrix q = Matrix::identity(m);
    for (int k = steps - 1; k >= 0; --k) {
        const auto& v = reflectors[k];
        double vnorm2 = 0.0;
        for (double x : v) vnorm2 += x * x;
        if (vnorm2 == 0.0) continue;
        for (int j = 0; j < m; ++j) {
            double dot = 0.0;
            for (int i = k; i < m; ++i) dot += v[i - k] * q(i, j);
            double scale = 2.0 * dot / vnorm2;
            for (int i = k; i < m; ++i) q(i, j) -= scale * v[i - k];
        }
    }

    QrPivoted out;
    out.q = std::move(q);
    out.r = std::move(a);
    out.perm = std::move(perm);
    return out;
}

/// Orthonormal basis of { x : A x = 0 }.
///
/// The row space of A is the column space of A^T; a pivoted QR of A^T exposes
/// an orthonormal basis for it in the leading columns of Q, and the trailing
/// columns span its orthogonal complement, the null space. Diagonal entries of
/// R with magnitude at most `tol` are treated as zero when counting the rank.
inline Matrix null_space(const Matrix& a, double tol) {
    Matrix at = a.transposed();
    QrPivoted f = qr_decompose_pivoted(at);
    int rank = f.rank(tol);
    int n = at.rows();
    Matrix basis(n, n - rank);
    for (int j = rank; j < n; ++j)
        for (int i = 0; i < n; ++i) basis(i, j - rank) = f.q(i, j);
    return basis;
}

}  // namespace qwalk
