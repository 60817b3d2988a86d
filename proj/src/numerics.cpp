#include "grovercorr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "grovercorr/error.hpp"

namespace grovercorr {

namespace {

constexpr std::size_t kMaxEighDim = 4096;
constexpr double kSymmetryTolerance = 1e-12;
constexpr int kMaxSweeps = 100;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

} // namespace

Matrix multiply(const Matrix &lhs, const Matrix &rhs) {
    if (lhs.cols() != rhs.rows()) throw Error(ErrorKind::Shape, "multiply: inner dimensions differ");
    Matrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const double l = lhs(i, k);
            if (l == 0.0) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += l * rhs(k, j);
        }
    }
    return out;
}

Matrix transpose(const Matrix &m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

double max_abs_diff(const Matrix &lhs, const Matrix &rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw Error(ErrorKind::Shape, "max_abs_diff: shapes differ");
    double worst = 0.0;
    auto l = lhs.data();
    auto r = rhs.data();
    for (std::size_t i = 0; i < l.size(); ++i) worst = std::max(worst, std::abs(l[i] - r[i]));
    return worst;
}

EighResult eigh_small(const Matrix &matrix) {
    if (!matrix.square()) throw Error(ErrorKind::Shape, "eigh_small: matrix is not square");
    const std::size_t n = matrix.rows();
    if (n == 0) throw Error(ErrorKind::Shape, "eigh_small: empty matrix");
    if (n > kMaxEighDim)
        throw Error(ErrorKind::Capacity, "eigh_small: dimension " + std::to_string(n) + " exceeds 4096");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!std::isfinite(matrix(i, j)) || std::abs(matrix(i, j) - matrix(j, i)) > kSymmetryTolerance)
                throw Error(ErrorKind::Shape, "eigh_small: matrix is not symmetric");
        }
    }

    Matrix a = matrix;
    Matrix v = Matrix::identity(n);

    double frob2 = 0.0;
    for (double x : a.data()) frob2 += x * x;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off == 0.0 || off <= 1e-36 * frob2) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                // Once the sweep has settled, drop elements below the diagonal's resolution.
                const double g = 100.0 * std::abs(apq);
                if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }

                const double h = aqq - app;
                double t;
                if (std::abs(h) + g == std::abs(h)) {
                    t = apq / h;
                } else {
                    const double theta = 0.5 * h / apq;
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = a(p, k) = c * akp - s * akq;
                    a(k, q) = a(q, k) = s * akp + c * akq;
                }
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;

                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    EighResult result;
    result.eigenvalues.resize(n);
    result.eigenvectors = Matrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        result.eigenvalues[col] = a(order[col], order[col]);
        for (std::size_t k = 0; k < n; ++k) result.eigenvectors(k, col) = v(k, order[col]);
    }
    return result;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix &matrix) {
    if (!matrix.square()) throw Error(ErrorKind::Shape, "eigvals_hermitian: matrix is not square");
    const std::size_t n = matrix.rows();
    Matrix embedded(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cplx z = matrix(i, j);
            embedded(i, j) = z.real();
            embedded(i + n, j + n) = z.real();
            embedded(i, j + n) = -z.imag();
            embedded(i + n, j) = z.imag();
        }
    }
    const auto doubled = eigh_small(embedded).eigenvalues;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return out;
}

double shannon_entropy(std::span<const double> p) {
    double total = 0.0;
    double h = 0.0;
    for (double x : p) {
        if (!std::isfinite(x) || x < -kClampTolerance)
            throw Error(ErrorKind::NumericDomain, "shannon_entropy: negative probability " + std::to_string(x));
        total += x;
        h -= xlog2x(std::max(x, 0.0));
    }
    if (std::abs(total - 1.0) > 1e-8)
        throw Error(ErrorKind::NumericDomain, "shannon_entropy: probabilities sum to " + std::to_string(total));
    return h;
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw Error(ErrorKind::NumericDomain, "binary_entropy: argument outside [0, 1]");
    return -xlog2x(x) - xlog2x(1.0 - x);
}

const char *to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidConfig: return "invalid-config";
    case ErrorKind::Partition: return "partition";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::NumericDomain: return "numeric-domain";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::InvalidResolution: return "invalid-resolution";
    case ErrorKind::UnsupportedMeasurement: return "unsupported-measurement";
    case ErrorKind::InvalidState: return "invalid-state";
    }
    return "unknown";
}

} // namespace grovercorr
