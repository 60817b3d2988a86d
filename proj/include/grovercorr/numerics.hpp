#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace grovercorr {

using cplx = std::complex<double>;

/// Eigenvalues in (-kClampTolerance, 0) are treated as roundoff and set to 0;
/// anything more negative is reported as an invalid input.
inline constexpr double kClampTolerance = 1e-10;

/// Dense row-major matrix. Used for density matrices, eigenvector sets and
/// scratch work; dimensions in this library stay small (<= 4096).
template <typename T>
class BasicMatrix {
  public:
    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static BasicMatrix identity(std::size_t dim) {
        BasicMatrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::span<const T> data() const noexcept { return data_; }
    std::span<T> data() noexcept { return data_; }

    T trace() const {
        T t{};
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    bool operator==(const BasicMatrix &) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using Matrix = BasicMatrix<double>;
using ComplexMatrix = BasicMatrix<cplx>;

Matrix multiply(const Matrix &lhs, const Matrix &rhs);
Matrix transpose(const Matrix &m);

/// Largest |lhs(i,j) - rhs(i,j)|; shapes must agree.
double max_abs_diff(const Matrix &lhs, const Matrix &rhs);

struct EighResult {
    std::vector<double> eigenvalues; // decreasing
    Matrix eigenvectors;             // column i pairs with eigenvalues[i]
};

/// Full eigendecomposition of a real symmetric matrix by cyclic Jacobi
/// rotations (row-cyclic sweep order, so results are bit-stable run to run).
/// Throws Shape for non-square or asymmetric (> 1e-12) input and Capacity above
/// dimension 4096.
EighResult eigh_small(const Matrix &matrix);

/// Eigenvalues of a complex Hermitian matrix, decreasing. Uses the real
/// embedding [[Re, -Im], [Im, Re]], whose spectrum is that of the input with
/// every eigenvalue doubled.
std::vector<double> eigvals_hermitian(const ComplexMatrix &matrix);

/// -sum p log2 p in bits. Entries in [-1e-10, 0) count as 0; a more negative
/// entry or |sum p - 1| > 1e-8 throws NumericDomain.
double shannon_entropy(std::span<const double> p);

/// h(x) = -x log2 x - (1-x) log2 (1-x); x outside [0, 1] throws NumericDomain.
double binary_entropy(double x);

} // namespace grovercorr
