#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grovercorr/grover_core.hpp"
#include "grovercorr/numerics.hpp"
#include "grovercorr/states.hpp"

namespace grovercorr {

/// Eigenvalues at or below this are dropped when a state is factored into
/// weighted eigenvectors. Double-precision eigensolvers leave ~1e-17 residue in
/// exactly-zero eigenvalues; keeping it would inject sqrt(1e-17) ~ 3e-9 into
/// every concurrence.
inline constexpr double kRankTolerance = 1e-14;

/// Projective measurement on one qubit:
///   {cos t |0> + e^{i p} sin t |1>,  e^{-i p} sin t |0> - cos t |1>}.
struct MeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;

    /// Components <0|e_i>, <1|e_i> for outcomes i = 0, 1.
    std::array<std::array<cplx, 2>, 2> vectors() const;
};

struct ConditionalOutcome {
    double probability;
    ComplexMatrix state; // rho_{A|i}; maximally mixed placeholder when probability is 0
};

struct ConditionalEnsemble {
    std::vector<ConditionalOutcome> outcomes;
};

/// Entropies in bits.
double von_neumann_entropy(const DensityMatrix &rho);
double von_neumann_entropy(const ComplexMatrix &rho);
double spectrum_entropy(const Spectrum &spectrum);

/// S(rho_A) + S(rho_B) - S(rho_AB) with A the listed qubits and B the rest.
/// Throws Partition if A is empty, covers every qubit, or is not increasing.
double mutual_information(const DensityMatrix &rho_ab, std::span<const int> side_a);

/// Measures the last qubit of rho_ab (B) and returns the post-measurement
/// states of the remaining qubits (A). Outcomes with p < 1e-14 get weight 0.
/// Throws UnsupportedMeasurement unless measured_qubits == 1.
ConditionalEnsemble conditional_ensemble(const DensityMatrix &rho_ab, const MeasurementBasis &basis,
                                         int measured_qubits = 1);

/// A bipartite state rho_AB = sum_k |v_k><v_k| reduced to what a projective
/// measurement on the single qubit B can see: the Gram tensor
///   T[(k,b),(l,b')] = sum_a v_k[a,b] v_l[a,b'].
/// After projecting B on e_i, the unnormalized state of A has the same nonzero
/// spectrum as the r x r matrix G_kl = sum_{b,b'} e_i[b] conj(e_i[b']) T[(k,b),(l,b')],
/// so each basis evaluation costs O(r^2) regardless of the size of A. The
/// nonzero spectrum of rho_A is that of T.
class MeasurementProblem {
  public:
    /// Factors rho through its eigendecomposition. Throws InvalidState for an
    /// eigenvalue below -1e-10.
    static MeasurementProblem from_density(const DensityMatrix &rho_ab);
    /// Pure state on A (x) B, B the least significant qubit of the index.
    static MeasurementProblem from_pure(std::span<const double> amplitudes);

    std::size_t rank() const noexcept { return rank_; }

    /// S(rho_A).
    double marginal_entropy() const;
    /// sum_i p_i S(rho_{A|i}).
    double conditional_entropy(const MeasurementBasis &basis) const;

  private:
    explicit MeasurementProblem(std::vector<std::vector<double>> factors);

    std::size_t rank_ = 0;
    Matrix gram_; // (2 rank) x (2 rank), index 2k + b
};

struct SearchOptions {
    int grid = 256;
    bool refine = true;
};

struct MeasurementSearch {
    double marginal_entropy = 0.0;      // S(rho_A)
    double lattice_min = 0.0;           // best sum p_i S(rho_{A|i}) on the grid
    double refined_min = 0.0;           // after coordinate descent (== lattice_min if disabled)
    MeasurementBasis lattice_best;
    MeasurementBasis refined_best;

    double lattice_value() const { return marginal_entropy - lattice_min; }
    double value() const { return marginal_entropy - refined_min; }
};

/// Minimizes the conditional entropy over the grid x grid lattice of
/// (theta, phi) in [0, 2 pi)^2, ties going to the smallest (theta, phi) index,
/// then refines with coordinate descent: steps start at the lattice spacing and
/// are halved 20 times. Throws InvalidResolution for grid < 2.
MeasurementSearch optimize_measurement(const MeasurementProblem &problem, const SearchOptions &options = {});

/// max over projective measurements on B of S(rho_A) - sum p_i S(rho_{A|i}).
double classical_correlation(const DensityMatrix &rho_ab, int grid = 256);

/// mutual_information - classical_correlation, with B the last qubit.
double quantum_discord(const DensityMatrix &rho_ab, int grid = 256);

/// Wootters concurrence of a real two-qubit state, via the singular values of
/// tau_kl = v_k^T (sigma_y x sigma_y) v_l over the weighted eigenvectors
/// v_k (these equal the square roots of the eigenvalues of rho rho~).
/// Throws Shape unless 4x4, InvalidState if not PSD within 1e-10.
double wootters_concurrence(const DensityMatrix &rho);

/// max{0, 2 (a - b) b}: the pairwise concurrence of the iterated state.
double pairwise_concurrence_closed(const GroverConfig &config, std::int64_t r);

/// sqrt(d/(d-1) (1 - Tr rho_k^2)) for k kept qubits, d = 2^k, 1 <= k <= n/2,
/// with 1 - Tr rho_k^2 = 2 lambda_+ lambda_- taken from the closed form.
double bipartite_concurrence_pure(const GroverConfig &config, std::int64_t r, int k);

/// sqrt(d/(d-1) (1 - purity)), clamped at 0 (roundoff can push 1 - purity slightly negative).
double pure_state_concurrence(double purity, std::uint64_t d);

/// Same quantity from a reduced spectrum, using 1 - sum l^2 = 2 sum_{i<j} l_i l_j
/// and ignoring eigenvalues <= kRankTolerance.
double pure_state_concurrence(const Spectrum &spectrum, std::uint64_t d);

/// h((1 + sqrt(1 - C^2)) / 2); C outside [0, 1] throws NumericDomain.
double entanglement_of_formation(double concurrence);

enum class Partition {
    Pair,    // two qubits, the rest traced out
    OneRest, // one qubit against the other n - 1
};

std::string to_string(Partition partition);

struct CorrelationRecord {
    std::int64_t r = 0;
    Partition partition = Partition::Pair;
    double concurrence = 0.0;
    double eof = 0.0;
    double mutual_info = 0.0;
    double classical_corr = 0.0;
    double discord = 0.0;
};

/// Record built from the closed-form reduced states. Pair uses the two-qubit
/// closed form; OneRest uses the purification of the one-qubit closed form,
/// which carries every correlation of the pure n-qubit state with B measured.
CorrelationRecord closed_form_record(const GroverConfig &config, std::int64_t r, Partition partition,
                                     int grid = 256);

} // namespace grovercorr
