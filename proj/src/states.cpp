#include "grovercorr/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "grovercorr/error.hpp"

namespace grovercorr {

namespace {

constexpr int kMaxDenseQubits = 14;

// Full-register index offsets contributed by each label of a qubit subset.
std::vector<std::uint64_t> scatter_offsets(int n, std::span<const int> qubits) {
    const int k = static_cast<int>(qubits.size());
    std::vector<std::uint64_t> offsets(std::size_t{1} << k, 0);
    for (std::size_t label = 0; label < offsets.size(); ++label) {
        std::uint64_t full = 0;
        for (int m = 0; m < k; ++m) {
            if ((label >> (k - 1 - m)) & 1u) full |= std::uint64_t{1} << (n - 1 - qubits[m]);
        }
        offsets[label] = full;
    }
    return offsets;
}

void check_keep(int n, std::span<const int> keep) {
    if (keep.empty()) throw Error(ErrorKind::Partition, "keep set is empty");
    for (std::size_t m = 0; m < keep.size(); ++m) {
        if (keep[m] < 0 || keep[m] >= n)
            throw Error(ErrorKind::Partition, "qubit index " + std::to_string(keep[m]) + " out of range");
        if (m > 0 && keep[m] <= keep[m - 1])
            throw Error(ErrorKind::Partition, "keep set must be strictly increasing");
    }
}

ReducedClosedForm closed_form_entries(const GroverConfig &config, std::int64_t r, int k) {
    const auto point = iteration_point(config, r);
    const double rest = std::ldexp(1.0, config.n() - k); // N / 2^k
    ReducedClosedForm form;
    form.k = k;
    form.n = config.n();
    form.a = point.a;
    form.b = point.b;
    const double b2 = point.b * point.b;
    form.diag0 = point.a * point.a + (rest - 1.0) * b2;
    form.offdiag0 = point.a * point.b + (rest - 1.0) * b2;
    form.bulk = rest * b2;
    return form;
}

} // namespace

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (!entries_.square() || entries_.rows() < 2)
        throw Error(ErrorKind::Shape, "density matrix must be square with dimension >= 2");
}

int DensityMatrix::qubits() const {
    const std::size_t d = dim();
    if (!std::has_single_bit(d)) throw Error(ErrorKind::Partition, "dimension is not a power of two");
    return std::countr_zero(d);
}

double DensityMatrix::purity() const {
    double sum = 0.0;
    for (double x : entries_.data()) sum += x * x;
    return sum;
}

void DensityMatrix::validate(double tolerance) const {
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (std::abs(entries_(i, j) - entries_(j, i)) > tolerance)
                throw Error(ErrorKind::InvalidState, "density matrix is not symmetric");
    if (std::abs(trace() - 1.0) > tolerance)
        throw Error(ErrorKind::InvalidState, "density matrix trace is " + std::to_string(trace()));
    const auto eig = eigh_small(entries_);
    if (eig.eigenvalues.back() < -tolerance)
        throw Error(ErrorKind::InvalidState, "density matrix is not positive semidefinite");
}

double ReducedClosedForm::purity() const {
    const double m = static_cast<double>(kept_dim()) - 1.0;
    return diag0 * diag0 + 2.0 * m * offdiag0 * offdiag0 + m * m * bulk * bulk;
}

double ReducedClosedForm::eigenvalue_product() const {
    const double gap = a - b;
    const double rest = std::ldexp(1.0, n - k);
    return gap * gap * b * b * (static_cast<double>(kept_dim()) - 1.0) * (rest - 1.0);
}

DensityMatrix full_density_matrix(const GroverConfig &config, std::int64_t r) {
    config.require_single_target("full_density_matrix");
    if (config.n() > kMaxDenseQubits)
        throw Error(ErrorKind::Capacity, "dense density matrix limited to n <= 14");
    const auto point = iteration_point(config, r);
    const std::size_t dim = config.dim();
    const std::size_t t = config.target();
    Matrix m(dim, dim, point.b * point.b);
    for (std::size_t x = 0; x < dim; ++x) {
        m(t, x) = point.a * point.b;
        m(x, t) = point.a * point.b;
    }
    m(t, t) = point.a * point.a;
    return DensityMatrix(std::move(m));
}

ReducedClosedForm reduced_closed_form(const GroverConfig &config, std::int64_t r, int k) {
    config.require_single_target("reduced_closed_form");
    if (k < 1 || k > config.n() - 1)
        throw Error(ErrorKind::Partition,
                    "kept qubit count " + std::to_string(k) + " outside [1, " + std::to_string(config.n() - 1) + "]");
    return closed_form_entries(config, r, k);
}

DensityMatrix materialize(const ReducedClosedForm &form, std::uint64_t flip_mask) {
    if (form.k > kMaxDenseQubits) throw Error(ErrorKind::Capacity, "materialize limited to k <= 14");
    const std::size_t dim = form.kept_dim();
    if (flip_mask >= dim) throw Error(ErrorKind::Partition, "flip mask has bits outside the kept qubits");
    Matrix m(dim, dim, form.bulk);
    for (std::size_t x = 0; x < dim; ++x) {
        m(flip_mask, x ^ flip_mask) = form.offdiag0;
        m(x ^ flip_mask, flip_mask) = form.offdiag0;
    }
    m(flip_mask, flip_mask) = form.diag0;
    return DensityMatrix(std::move(m));
}

std::uint64_t target_flip_mask(const GroverConfig &config, std::span<const int> keep) {
    check_keep(config.n(), keep);
    const int k = static_cast<int>(keep.size());
    std::uint64_t mask = 0;
    for (int m = 0; m < k; ++m) {
        if ((config.target() >> (config.n() - 1 - keep[m])) & 1u) mask |= std::uint64_t{1} << (k - 1 - m);
    }
    return mask;
}

Spectrum rank2_spectrum(const ReducedClosedForm &form) {
    const double product = form.eigenvalue_product();
    const double purity = 1.0 - 2.0 * product;
    const double floor = 1.0 / static_cast<double>(form.kept_dim());
    if (!std::isfinite(purity) || purity < floor - 1e-10 || purity > 1.0 + 1e-10)
        throw Error(ErrorKind::NumericDomain, "closed-form purity outside [1/2^k, 1]");

    const double lambda_plus = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - 4.0 * product)));
    Spectrum s;
    s.eigenvalues = {lambda_plus, product / lambda_plus};
    s.zero_count = form.kept_dim() - 2;
    return s;
}

DensityMatrix pair_state(const GroverConfig &config, std::int64_t r) {
    if (config.n() < 2) throw Error(ErrorKind::Partition, "a qubit pair needs n >= 2");
    if (config.n() == 2) return full_density_matrix(GroverConfig(2, 1, 0), r);
    return materialize(reduced_closed_form(config, r, 2));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep) {
    const int n = rho.qubits();
    check_keep(n, keep);
    std::vector<int> traced;
    for (int q = 0, m = 0; q < n; ++q) {
        if (m < static_cast<int>(keep.size()) && keep[m] == q)
            ++m;
        else
            traced.push_back(q);
    }
    const auto kept_offsets = scatter_offsets(n, keep);
    const auto traced_offsets = scatter_offsets(n, traced);
    const std::size_t kd = kept_offsets.size();

    Matrix out(kd, kd);
    for (std::size_t i = 0; i < kd; ++i) {
        for (std::size_t j = 0; j < kd; ++j) {
            double sum = 0.0;
            for (std::uint64_t t : traced_offsets) sum += rho(kept_offsets[i] | t, kept_offsets[j] | t);
            out(i, j) = sum;
        }
    }
    return DensityMatrix(std::move(out));
}

} // namespace grovercorr
