#include "grovercorr/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "grovercorr/error.hpp"

namespace grovercorr {

namespace {

constexpr double kNegligibleProbability = 1e-14;
constexpr int kRefineHalvings = 20;
constexpr int kMaxMovesPerStep = 64;

double normalized_entropy(std::vector<double> eigenvalues) {
    double total = 0.0;
    for (double x : eigenvalues) total += x;
    if (!(total > 0.0)) throw Error(ErrorKind::NumericDomain, "entropy of a zero matrix");
    for (double &x : eigenvalues) x /= total;
    return shannon_entropy(eigenvalues);
}

// Eigenvalues of a 2x2 Hermitian matrix [[g00, g01], [conj(g01), g11]].
std::vector<double> hermitian2_eigenvalues(double g00, double g11, cplx g01) {
    const double half_sum = 0.5 * (g00 + g11);
    const double spread = std::hypot(0.5 * (g00 - g11), std::abs(g01));
    const double upper = half_sum + spread;
    const double det = g00 * g11 - std::norm(g01);
    const double lower = upper > 0.0 ? det / upper : half_sum - spread;
    return {upper, lower};
}

std::vector<int> complement(int n, std::span<const int> side) {
    std::vector<int> rest;
    std::size_t m = 0;
    for (int q = 0; q < n; ++q) {
        if (m < side.size() && side[m] == q)
            ++m;
        else
            rest.push_back(q);
    }
    return rest;
}

std::vector<std::vector<double>> weighted_eigenvectors(const EighResult &eig) {
    std::vector<std::vector<double>> factors;
    const std::size_t dim = eig.eigenvalues.size();
    for (std::size_t c = 0; c < dim; ++c) {
        const double lambda = eig.eigenvalues[c];
        if (lambda < -kClampTolerance) throw Error(ErrorKind::InvalidState, "state has a negative eigenvalue");
        if (lambda <= kRankTolerance) continue;
        const double scale = std::sqrt(lambda);
        std::vector<double> v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = scale * eig.eigenvectors(i, c);
        factors.push_back(std::move(v));
    }
    return factors;
}

} // namespace

std::array<std::array<cplx, 2>, 2> MeasurementBasis::vectors() const {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const cplx phase = std::polar(1.0, phi);
    return {{{c, phase * s}, {std::conj(phase) * s, -c}}};
}

double von_neumann_entropy(const DensityMatrix &rho) { return shannon_entropy(eigh_small(rho.entries()).eigenvalues); }

double von_neumann_entropy(const ComplexMatrix &rho) { return shannon_entropy(eigvals_hermitian(rho)); }

double spectrum_entropy(const Spectrum &spectrum) { return shannon_entropy(spectrum.eigenvalues); }

double mutual_information(const DensityMatrix &rho_ab, std::span<const int> side_a) {
    const int n = rho_ab.qubits();
    if (side_a.empty() || static_cast<int>(side_a.size()) >= n)
        throw Error(ErrorKind::Partition, "both sides of the split must be nonempty");
    const auto side_b = complement(n, side_a);
    const double s_a = von_neumann_entropy(partial_trace(rho_ab, side_a));
    const double s_b = von_neumann_entropy(partial_trace(rho_ab, side_b));
    return s_a + s_b - von_neumann_entropy(rho_ab);
}

ConditionalEnsemble conditional_ensemble(const DensityMatrix &rho_ab, const MeasurementBasis &basis,
                                         int measured_qubits) {
    if (measured_qubits != 1)
        throw Error(ErrorKind::UnsupportedMeasurement, "only a single measured qubit is supported");
    if (rho_ab.qubits() < 2) throw Error(ErrorKind::Partition, "the unmeasured side is empty");
    const std::size_t dim_a = rho_ab.dim() / 2;
    const auto e = basis.vectors();

    ConditionalEnsemble ensemble;
    for (const auto &ei : e) {
        ComplexMatrix m(dim_a, dim_a);
        for (std::size_t a = 0; a < dim_a; ++a)
            for (std::size_t a2 = 0; a2 < dim_a; ++a2) {
                cplx sum = 0.0;
                for (int b = 0; b < 2; ++b)
                    for (int b2 = 0; b2 < 2; ++b2) sum += std::conj(ei[b]) * rho_ab(2 * a + b, 2 * a2 + b2) * ei[b2];
                m(a, a2) = sum;
            }
        const double p = m.trace().real();
        if (p < kNegligibleProbability) {
            ComplexMatrix mixed(dim_a, dim_a);
            for (std::size_t a = 0; a < dim_a; ++a) mixed(a, a) = 1.0 / static_cast<double>(dim_a);
            ensemble.outcomes.push_back({0.0, std::move(mixed)});
            continue;
        }
        for (auto &z : m.data()) z /= p;
        ensemble.outcomes.push_back({p, std::move(m)});
    }
    return ensemble;
}

MeasurementProblem::MeasurementProblem(std::vector<std::vector<double>> factors) : rank_(factors.size()) {
    if (rank_ == 0) throw Error(ErrorKind::InvalidState, "state has no support");
    const std::size_t len = factors.front().size();
    if (len < 4 || len % 2 != 0) throw Error(ErrorKind::Partition, "state must span at least two qubits");
    gram_ = Matrix(2 * rank_, 2 * rank_);
    for (std::size_t k = 0; k < rank_; ++k)
        for (std::size_t l = 0; l < rank_; ++l)
            for (int b = 0; b < 2; ++b)
                for (int b2 = 0; b2 < 2; ++b2) {
                    double sum = 0.0;
                    for (std::size_t a = 0; a < len / 2; ++a) sum += factors[k][2 * a + b] * factors[l][2 * a + b2];
                    gram_(2 * k + b, 2 * l + b2) = sum;
                }
}

MeasurementProblem MeasurementProblem::from_density(const DensityMatrix &rho_ab) {
    if (rho_ab.qubits() < 2) throw Error(ErrorKind::Partition, "state must span at least two qubits");
    return MeasurementProblem(weighted_eigenvectors(eigh_small(rho_ab.entries())));
}

MeasurementProblem MeasurementProblem::from_pure(std::span<const double> amplitudes) {
    return MeasurementProblem({std::vector<double>(amplitudes.begin(), amplitudes.end())});
}

double MeasurementProblem::marginal_entropy() const {
    // rho_A = sum_{k,b} |v_k[., b]><v_k[., b]|, whose Gram matrix is T itself.
    return normalized_entropy(eigh_small(gram_).eigenvalues);
}

double MeasurementProblem::conditional_entropy(const MeasurementBasis &basis) const {
    if (rank_ == 1) return 0.0; // projecting a pure state leaves A pure
    const auto e = basis.vectors();
    double total = 0.0;
    for (const auto &ei : e) {
        cplx weight[2][2];
        for (int b = 0; b < 2; ++b)
            for (int b2 = 0; b2 < 2; ++b2) weight[b][b2] = ei[b] * std::conj(ei[b2]);
        auto element = [&](std::size_t k, std::size_t l) {
            cplx sum = 0.0;
            for (int b = 0; b < 2; ++b)
                for (int b2 = 0; b2 < 2; ++b2) sum += weight[b][b2] * gram_(2 * k + b, 2 * l + b2);
            return sum;
        };

        double p = 0.0;
        for (std::size_t k = 0; k < rank_; ++k) p += element(k, k).real();
        if (p < kNegligibleProbability) continue;

        std::vector<double> eigenvalues;
        if (rank_ == 2) {
            eigenvalues = hermitian2_eigenvalues(element(0, 0).real(), element(1, 1).real(), element(0, 1));
        } else {
            ComplexMatrix g(rank_, rank_);
            for (std::size_t k = 0; k < rank_; ++k)
                for (std::size_t l = 0; l < rank_; ++l) g(k, l) = element(k, l);
            eigenvalues = eigvals_hermitian(g);
        }
        // Roundoff in the Gram tensor is absolute; for an unlikely outcome it
        // turns into sizable negative eigenvalues once divided by p.
        for (double &x : eigenvalues)
            if (x < 0.0 && x > -kClampTolerance) x = 0.0;
        total += p * normalized_entropy(std::move(eigenvalues));
    }
    return total;
}

MeasurementSearch optimize_measurement(const MeasurementProblem &problem, const SearchOptions &options) {
    if (options.grid < 2) throw Error(ErrorKind::InvalidResolution, "grid resolution must be >= 2");
    const int grid = options.grid;
    const double two_pi = 2.0 * std::numbers::pi;

    MeasurementSearch search;
    search.marginal_entropy = problem.marginal_entropy();

    bool first = true;
    for (int t = 0; t < grid; ++t) {
        const double theta = two_pi * t / grid;
        for (int s = 0; s < grid; ++s) {
            const MeasurementBasis basis{theta, two_pi * s / grid};
            const double value = problem.conditional_entropy(basis);
            if (first || value < search.lattice_min) {
                search.lattice_min = value;
                search.lattice_best = basis;
                first = false;
            }
        }
    }

    search.refined_min = search.lattice_min;
    search.refined_best = search.lattice_best;
    if (!options.refine) return search;

    double step = two_pi / grid;
    for (int level = 0; level <= kRefineHalvings; ++level, step *= 0.5) {
        for (int move = 0; move < kMaxMovesPerStep; ++move) {
            const MeasurementBasis &at = search.refined_best;
            const MeasurementBasis candidates[4] = {
                {at.theta + step, at.phi}, {at.theta - step, at.phi}, {at.theta, at.phi + step}, {at.theta, at.phi - step}};
            bool improved = false;
            for (const auto &candidate : candidates) {
                const double value = problem.conditional_entropy(candidate);
                if (value < search.refined_min) {
                    search.refined_min = value;
                    search.refined_best = candidate;
                    improved = true;
                    break;
                }
            }
            if (!improved) break;
        }
    }
    return search;
}

double classical_correlation(const DensityMatrix &rho_ab, int grid) {
    if (grid < 2) throw Error(ErrorKind::InvalidResolution, "grid resolution must be >= 2");
    return optimize_measurement(MeasurementProblem::from_density(rho_ab), {grid, true}).value();
}

double quantum_discord(const DensityMatrix &rho_ab, int grid) {
    if (grid < 2) throw Error(ErrorKind::InvalidResolution, "grid resolution must be >= 2");
    std::vector<int> side_a(static_cast<std::size_t>(rho_ab.qubits() - 1));
    for (std::size_t q = 0; q < side_a.size(); ++q) side_a[q] = static_cast<int>(q);
    return mutual_information(rho_ab, side_a) - classical_correlation(rho_ab, grid);
}

double wootters_concurrence(const DensityMatrix &rho) {
    if (rho.dim() != 4) throw Error(ErrorKind::Shape, "Wootters concurrence needs a 4x4 two-qubit state");
    const auto eig = eigh_small(rho.entries());
    if (eig.eigenvalues.back() < -kClampTolerance)
        throw Error(ErrorKind::InvalidState, "state is not positive semidefinite");
    const auto factors = weighted_eigenvectors(eig);
    const std::size_t rank = factors.size();
    if (rank == 0) return 0.0;

    // sigma_y (x) sigma_y; rho is real so rho* = rho.
    auto flip = [](const std::vector<double> &v, const std::vector<double> &w) {
        return -v[0] * w[3] + v[1] * w[2] + v[2] * w[1] - v[3] * w[0];
    };
    Matrix tau(rank, rank);
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t l = k; l < rank; ++l) tau(k, l) = tau(l, k) = flip(factors[k], factors[l]);

    std::vector<double> lambdas;
    if (rank == 1) {
        lambdas = {std::abs(tau(0, 0))};
    } else {
        lambdas = eigh_small(tau).eigenvalues;
        for (double &x : lambdas) x = std::abs(x);
        std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    }
    double c = lambdas[0];
    for (std::size_t i = 1; i < lambdas.size(); ++i) c -= lambdas[i];
    return std::max(0.0, c);
}

double pairwise_concurrence_closed(const GroverConfig &config, std::int64_t r) {
    config.require_single_target("pairwise_concurrence_closed");
    if (config.n() < 2) throw Error(ErrorKind::Partition, "a qubit pair needs n >= 2");
    const auto p = iteration_point(config, r);
    return std::max(0.0, 2.0 * (p.a - p.b) * p.b);
}

double bipartite_concurrence_pure(const GroverConfig &config, std::int64_t r, int k) {
    if (k < 1 || 2 * k > config.n())
        throw Error(ErrorKind::Partition, "k must satisfy 1 <= k <= n/2");
    const auto form = reduced_closed_form(config, r, k);
    const double d = static_cast<double>(form.kept_dim());
    return std::sqrt(d / (d - 1.0) * 2.0 * form.eigenvalue_product());
}

double pure_state_concurrence(double purity, std::uint64_t d) {
    if (d < 2) throw Error(ErrorKind::Partition, "dimension must be >= 2");
    const double dd = static_cast<double>(d);
    return std::sqrt(std::max(0.0, dd / (dd - 1.0) * (1.0 - purity)));
}

double pure_state_concurrence(const Spectrum &spectrum, std::uint64_t d) {
    if (d < 2) throw Error(ErrorKind::Partition, "dimension must be >= 2");
    std::vector<double> kept;
    for (double x : spectrum.eigenvalues)
        if (x > kRankTolerance) kept.push_back(x);
    double pairs = 0.0;
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j) pairs += kept[i] * kept[j];
    const double dd = static_cast<double>(d);
    return std::sqrt(dd / (dd - 1.0) * 2.0 * pairs);
}

double entanglement_of_formation(double concurrence) {
    if (!(concurrence >= 0.0 && concurrence <= 1.0))
        throw Error(ErrorKind::NumericDomain, "concurrence outside [0, 1]");
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - concurrence * concurrence)));
}

std::string to_string(Partition partition) { return partition == Partition::Pair ? "1:1" : "1:rest"; }

CorrelationRecord closed_form_record(const GroverConfig &config, std::int64_t r, Partition partition, int grid) {
    if (grid < 2) throw Error(ErrorKind::InvalidResolution, "grid resolution must be >= 2");
    CorrelationRecord rec;
    rec.r = r;
    rec.partition = partition;
    constexpr int first_qubit[] = {0};

    if (partition == Partition::Pair) {
        const auto rho = pair_state(config, r);
        rec.concurrence = pairwise_concurrence_closed(config, r);
        rec.mutual_info = mutual_information(rho, first_qubit);
        rec.classical_corr = optimize_measurement(MeasurementProblem::from_density(rho), {grid, true}).value();
    } else {
        // |psi'> = sum_i sqrt(l_i) |i>_A |s_i>_B with (l_i, s_i) the eigenpairs of
        // the one-qubit reduced state: a local isometry of the n-qubit state on A.
        const auto form = reduced_closed_form(config, r, 1);
        const auto eig = eigh_small(materialize(form).entries());
        std::vector<double> psi(4);
        for (int i = 0; i < 2; ++i)
            for (int b = 0; b < 2; ++b) psi[2 * i + b] = std::sqrt(std::max(0.0, eig.eigenvalues[i])) * eig.eigenvectors(b, i);
        Matrix outer(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) outer(i, j) = psi[i] * psi[j];

        rec.concurrence = bipartite_concurrence_pure(config, r, 1);
        rec.mutual_info = mutual_information(DensityMatrix(std::move(outer)), first_qubit);
        rec.classical_corr = optimize_measurement(MeasurementProblem::from_pure(psi), {grid, true}).value();
    }
    rec.eof = entanglement_of_formation(std::min(1.0, rec.concurrence));
    rec.discord = rec.mutual_info - rec.classical_corr;
    return rec;
}

} // namespace grovercorr
