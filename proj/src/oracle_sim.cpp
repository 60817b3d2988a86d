#include "grovercorr/oracle_sim.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "grovercorr/error.hpp"

namespace grovercorr::oracle {

namespace {

std::vector<std::uint64_t> scatter_offsets(int n, std::span<const int> qubits) {
    const int k = static_cast<int>(qubits.size());
    std::vector<std::uint64_t> offsets(std::size_t{1} << k, 0);
    for (std::size_t label = 0; label < offsets.size(); ++label)
        for (int m = 0; m < k; ++m)
            if ((label >> (k - 1 - m)) & 1u) offsets[label] |= std::uint64_t{1} << (n - 1 - qubits[m]);
    return offsets;
}

std::vector<int> validated_complement(int n, std::span<const int> keep) {
    std::vector<int> rest;
    std::size_t m = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= n || (i > 0 && keep[i] <= keep[i - 1]))
            throw Error(ErrorKind::Partition, "keep set must be increasing qubit indices in range");
    }
    for (int q = 0; q < n; ++q) {
        if (m < keep.size() && keep[m] == q)
            ++m;
        else
            rest.push_back(q);
    }
    return rest;
}

Matrix reduced_matrix(const StateVector &state, std::span<const int> keep, std::span<const int> traced) {
    const auto kept = scatter_offsets(state.n(), keep);
    const auto rest = scatter_offsets(state.n(), traced);
    const auto psi = state.amplitudes();
    Matrix out(kept.size(), kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i; j < kept.size(); ++j) {
            double sum = 0.0;
            for (std::uint64_t t : rest) sum += psi[kept[i] | t] * psi[kept[j] | t];
            out(i, j) = out(j, i) = sum;
        }
    return out;
}

} // namespace

StateVector::StateVector(int n) : n_(n) {
    if (n < 1) throw Error(ErrorKind::InvalidConfig, "state needs at least one qubit");
    if (n > kMaxStateQubits) throw Error(ErrorKind::Capacity, "statevector limited to n <= 14");
    amplitudes_.assign(std::size_t{1} << n, 0.0);
}

double StateVector::norm() const {
    return std::sqrt(std::inner_product(amplitudes_.begin(), amplitudes_.end(), amplitudes_.begin(), 0.0));
}

StateVector init_uniform(int n) {
    StateVector state(n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(state.dim()));
    for (double &x : state.amplitudes()) x = amp;
    return state;
}

void grover_step(StateVector &state, std::uint64_t target) {
    if (target >= state.dim()) throw Error(ErrorKind::InvalidConfig, "target index out of range");
    auto psi = state.amplitudes();
    psi[target] = -psi[target];
    const double mean = std::accumulate(psi.begin(), psi.end(), 0.0) / static_cast<double>(psi.size());
    for (double &x : psi) x = 2.0 * mean - x;
}

StateVector run(const GroverConfig &config, std::int64_t r) {
    if (r < 0) throw Error(ErrorKind::NumericDomain, "iteration index must be >= 0");
    auto state = init_uniform(config.n());
    for (std::int64_t i = 0; i < r; ++i) grover_step(state, config.target());
    return state;
}

DensityMatrix partial_trace(const StateVector &state, std::span<const int> keep) {
    if (keep.empty() || static_cast<int>(keep.size()) >= state.n())
        throw Error(ErrorKind::Partition, "keep set must be a nonempty proper subset");
    const auto traced = validated_complement(state.n(), keep);
    return DensityMatrix(reduced_matrix(state, keep, traced));
}

DensityMatrix outer_product(const StateVector &state) {
    const auto psi = state.amplitudes();
    Matrix m(psi.size(), psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i)
        for (std::size_t j = 0; j < psi.size(); ++j) m(i, j) = psi[i] * psi[j];
    return DensityMatrix(std::move(m));
}

Spectrum reduced_spectrum(const StateVector &state, std::span<const int> keep) {
    if (keep.empty()) throw Error(ErrorKind::Partition, "keep set is empty");
    const auto traced = validated_complement(state.n(), keep);
    const std::uint64_t kept_dim = std::uint64_t{1} << keep.size();

    Spectrum s;
    if (traced.empty()) {
        const double nrm = state.norm();
        s.eigenvalues = {nrm * nrm};
    } else if (traced.size() < keep.size()) {
        s.eigenvalues = eigh_small(reduced_matrix(state, traced, keep)).eigenvalues;
    } else {
        s.eigenvalues = eigh_small(reduced_matrix(state, keep, traced)).eigenvalues;
    }
    s.zero_count = kept_dim - s.eigenvalues.size();
    return s;
}

CorrelationRecord brute_force_record(const GroverConfig &config, std::int64_t r, Partition partition, int grid) {
    if (config.n() > kMaxRecordQubits) throw Error(ErrorKind::Capacity, "brute-force record limited to n <= 12");
    if (config.n() < 2) throw Error(ErrorKind::Partition, "a bipartition needs n >= 2");
    if (grid < 2) throw Error(ErrorKind::InvalidResolution, "grid resolution must be >= 2");
    const int n = config.n();
    const auto state = run(config, r);

    CorrelationRecord rec;
    rec.r = r;
    rec.partition = partition;

    if (partition == Partition::Pair) {
        const int pair[] = {n - 2, n - 1};
        const auto rho = n == 2 ? outer_product(state) : partial_trace(state, pair);
        const int first[] = {0};
        rec.concurrence = wootters_concurrence(rho);
        rec.mutual_info = mutual_information(rho, first);
        rec.classical_corr = optimize_measurement(MeasurementProblem::from_density(rho), {grid, true}).value();
    } else {
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        const std::span<const int> everything(all);
        const auto spectrum_b = reduced_spectrum(state, everything.subspan(n - 1));
        const double s_a = spectrum_entropy(reduced_spectrum(state, everything.first(n - 1)));
        const double s_b = spectrum_entropy(spectrum_b);
        const double s_ab = spectrum_entropy(reduced_spectrum(state, everything));
        rec.concurrence = pure_state_concurrence(spectrum_b, 2);
        rec.mutual_info = s_a + s_b - s_ab;
        rec.classical_corr = optimize_measurement(MeasurementProblem::from_pure(state.amplitudes()), {grid, true}).value();
    }
    rec.eof = entanglement_of_formation(std::min(1.0, rec.concurrence));
    rec.discord = rec.mutual_info - rec.classical_corr;
    return rec;
}

} // namespace grovercorr::oracle
