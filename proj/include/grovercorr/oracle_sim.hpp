#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grovercorr/correlations.hpp"
#include "grovercorr/grover_core.hpp"
#include "grovercorr/states.hpp"

namespace grovercorr::oracle {

// Brute-force statevector simulation. Nothing in here uses the closed forms;
// it is the reference the closed forms are checked against.

inline constexpr int kMaxStateQubits = 14;
inline constexpr int kMaxRecordQubits = 12;

/// Amplitudes of an n-qubit register. Grover's gates (Hadamard layer, sign
/// oracle, reflection about the mean) are real, so amplitudes are stored real.
class StateVector {
  public:
    explicit StateVector(int n);

    int n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::span<const double> amplitudes() const noexcept { return amplitudes_; }
    std::span<double> amplitudes() noexcept { return amplitudes_; }
    double norm() const;

  private:
    int n_;
    std::vector<double> amplitudes_;
};

/// Uniform superposition; Capacity for n > 14.
StateVector init_uniform(int n);

/// Sign flip on `target`, then reflection about the uniform superposition
/// (amplitude -> 2 mean - amplitude).
void grover_step(StateVector &state, std::uint64_t target);

/// init_uniform(n) followed by r Grover steps on config.target().
StateVector run(const GroverConfig &config, std::int64_t r);

/// rho_keep[i][j] = sum_t psi[i|t] psi[j|t]. Throws Partition for an empty or
/// full keep set.
DensityMatrix partial_trace(const StateVector &state, std::span<const int> keep);

/// |psi><psi|.
DensityMatrix outer_product(const StateVector &state);

/// Spectrum of the reduced state on `keep` by dense diagonalization. When the
/// traced side is smaller, the complementary reduced state is diagonalized
/// instead (same nonzero spectrum). `keep` may cover the whole register.
Spectrum reduced_spectrum(const StateVector &state, std::span<const int> keep);

/// Correlation record from simulation, partial traces and dense
/// eigendecomposition only. Pair keeps the last two qubits; OneRest measures
/// the last qubit. Capacity for n > 12.
CorrelationRecord brute_force_record(const GroverConfig &config, std::int64_t r, Partition partition, int grid = 256);

} // namespace grovercorr::oracle
