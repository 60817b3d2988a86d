#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grovercorr/grover_core.hpp"
#include "grovercorr/numerics.hpp"

namespace grovercorr {

// Qubit q of an n-qubit register is bit (n - 1 - q) of the basis index, so
// qubit 0 is the most significant.

/// Real symmetric density matrix. Every Grover-state matrix is real because
/// the amplitudes a and b are real for all iterations.
class DensityMatrix {
  public:
    DensityMatrix() = default;
    /// Throws Shape unless `entries` is square with dimension >= 2.
    explicit DensityMatrix(Matrix entries);

    std::size_t dim() const noexcept { return entries_.rows(); }
    /// log2(dim); throws Partition when dim is not a power of two.
    int qubits() const;

    double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const Matrix &entries() const noexcept { return entries_; }

    double trace() const { return entries_.trace(); }
    /// Tr rho^2 from the entries (Frobenius norm squared).
    double purity() const;

    /// Throws InvalidState unless symmetric, unit trace within `tolerance`
    /// and smallest eigenvalue >= -tolerance.
    void validate(double tolerance = 1e-10) const;

  private:
    Matrix entries_;
};

/// Reduced state of k qubits of the iterated Grover state, target at index 0.
/// The matrix has diag0 at [0][0], offdiag0 on the rest of row/column 0 and
/// bulk everywhere else.
struct ReducedClosedForm {
    int k = 0;
    int n = 0;
    double diag0 = 0.0;    // a^2 + (N/2^k - 1) b^2
    double offdiag0 = 0.0; // ab + (N/2^k - 1) b^2
    double bulk = 0.0;     // (N/2^k) b^2
    double a = 0.0;
    double b = 0.0;

    std::uint64_t kept_dim() const noexcept { return std::uint64_t{1} << k; }
    /// diag0^2 + 2(2^k - 1) offdiag0^2 + (2^k - 1)^2 bulk^2
    double purity() const;
    /// lambda_+ * lambda_- of the rank-2 spectrum, (a - b)^2 b^2 (2^k - 1)(N/2^k - 1),
    /// free of the cancellation in 1 - purity.
    double eigenvalue_product() const;
};

/// Nonzero part of a spectrum; `zero_count` further eigenvalues are exactly 0.
struct Spectrum {
    std::vector<double> eigenvalues; // decreasing
    std::uint64_t zero_count = 0;
};

/// The 2^n x 2^n pure-state density matrix after r iterations.
/// Requires j == 1; throws Capacity for n > 14.
DensityMatrix full_density_matrix(const GroverConfig &config, std::int64_t r);

/// Throws Partition unless 1 <= k <= n - 1; requires j == 1. The result is
/// written for target 0; see `target_flip_mask` for other targets.
ReducedClosedForm reduced_closed_form(const GroverConfig &config, std::int64_t r, int k);

/// Dense 2^k matrix of a closed form. A nonzero `flip_mask` relabels basis
/// states i -> i ^ flip_mask, which moves the target entry to index flip_mask
/// (a local bit flip on each kept qubit with a set bit). Capacity above k = 14.
DensityMatrix materialize(const ReducedClosedForm &form, std::uint64_t flip_mask = 0);

/// Bits of the target index on the given kept qubits, packed in `keep` order.
std::uint64_t target_flip_mask(const GroverConfig &config, std::span<const int> keep);

/// Two nonzero eigenvalues from unit trace and the closed-form purity; no
/// diagonalization. Throws NumericDomain if the purity is outside
/// [1/2^k - 1e-10, 1 + 1e-10].
Spectrum rank2_spectrum(const ReducedClosedForm &form);

/// Reduced state of any two qubits. For n == 2 this is the full state.
DensityMatrix pair_state(const GroverConfig &config, std::int64_t r);

/// Partial trace of a density matrix onto the qubits in `keep` (strictly
/// increasing, each in [0, qubits)). Throws Partition for an empty keep set,
/// out-of-range or unsorted indices.
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep);

} // namespace grovercorr
