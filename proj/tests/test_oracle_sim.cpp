#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "grovercorr/error.hpp"
#include "grovercorr/oracle_sim.hpp"

using namespace grovercorr;
using namespace grovercorr::oracle;

TEST_CASE("uniform initial state") {
    const auto one = init_uniform(1);
    CHECK(one.amplitudes()[0] == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(one.amplitudes()[1] == doctest::Approx(1 / std::sqrt(2.0)));
    for (int n : {1, 4, 9, 14}) {
        const auto s = init_uniform(n);
        CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(s.amplitudes()[0] == doctest::Approx(std::sqrt(1.0 / static_cast<double>(s.dim()))));
    }
    CHECK_THROWS_AS(init_uniform(0), Error);
    try {
        init_uniform(15);
        FAIL("no throw");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::Capacity);
    }
}

TEST_CASE("grover steps follow the closed-form amplitudes") {
    auto two = init_uniform(2);
    grover_step(two, 0);
    CHECK(std::abs(two.amplitudes()[0]) == doctest::Approx(1.0).epsilon(1e-15));

    for (int n = 2; n <= 10; ++n)
        for (std::uint64_t target : {std::uint64_t{0}, (std::uint64_t{1} << n) - 1, std::uint64_t{1}}) {
            const GroverConfig c(n, 1, target);
            auto s = init_uniform(n);
            for (std::int64_t r = 0; r <= 2 * optimal_iterations(c); ++r) {
                if (r > 0) grover_step(s, target);
                const auto p = iteration_point(c, r);
                double worst = 0.0;
                for (std::size_t x = 0; x < s.dim(); ++x)
                    worst = std::max(worst, std::abs(s.amplitudes()[x] - (x == target ? p.a : p.b)));
                CHECK(worst < 1e-12);
            }
        }
    auto s = init_uniform(3);
    CHECK_THROWS_AS(grover_step(s, 8), Error);
    CHECK_THROWS_AS(run(GroverConfig(3), -1), Error);
}

TEST_CASE("partial trace of simple states") {
    StateVector bell(2);
    bell.amplitudes()[0] = bell.amplitudes()[3] = 1 / std::sqrt(2.0);
    const int first[] = {0};
    const auto mixed = partial_trace(bell, first);
    CHECK(mixed(0, 0) == doctest::Approx(0.5));
    CHECK(mixed(1, 1) == doctest::Approx(0.5));
    CHECK(std::abs(mixed(0, 1)) < 1e-15);

    // |+> (x) |1>
    StateVector product(2);
    product.amplitudes()[1] = product.amplitudes()[3] = 1 / std::sqrt(2.0);
    const auto plus = partial_trace(product, first);
    CHECK(plus(0, 1) == doctest::Approx(0.5));
    const int second[] = {1};
    const auto one = partial_trace(product, second);
    CHECK(one(1, 1) == doctest::Approx(1.0));
    CHECK(std::abs(one(0, 0)) < 1e-15);

    const int both[] = {0, 1};
    CHECK_THROWS_AS(partial_trace(bell, both), Error);
    CHECK_THROWS_AS(partial_trace(bell, std::span<const int>{}), Error);
}

TEST_CASE("any kept subset matches the closed form, for any target") {
    std::mt19937_64 rng(41);
    for (int n : {4, 6, 9}) {
        std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
        const GroverConfig c(n, 1, pick(rng));
        for (std::int64_t r : {1, 3, 7}) {
            const auto s = run(c, r);
            for (int k = 1; k <= 3; ++k) {
                std::vector<int> qubits(static_cast<std::size_t>(n));
                std::iota(qubits.begin(), qubits.end(), 0);
                std::shuffle(qubits.begin(), qubits.end(), rng);
                std::vector<int> keep(qubits.begin(), qubits.begin() + k);
                std::sort(keep.begin(), keep.end());
                const auto closed = materialize(reduced_closed_form(c, r, k), target_flip_mask(c, keep));
                CHECK(max_abs_diff(partial_trace(s, keep).entries(), closed.entries()) < 1e-10);
            }
        }
    }
}

TEST_CASE("reduced spectrum routes agree") {
    const GroverConfig c(7, 1, 19);
    const auto s = run(c, 4);
    const int small[] = {1, 4};
    const int large[] = {0, 1, 2, 3, 5};
    const auto a = reduced_spectrum(s, small);
    const auto b = reduced_spectrum(s, large);
    CHECK(a.zero_count + a.eigenvalues.size() == 4);
    CHECK(b.zero_count + b.eigenvalues.size() == 32);
    CHECK(a.eigenvalues[0] == doctest::Approx(b.eigenvalues[0]).epsilon(1e-12));
    CHECK(a.eigenvalues[1] == doctest::Approx(b.eigenvalues[1]).epsilon(1e-10));
    const int all[] = {0, 1, 2, 3, 4, 5, 6};
    const auto whole = reduced_spectrum(s, all);
    CHECK(whole.eigenvalues == std::vector<double>{s.norm() * s.norm()});
    CHECK(whole.zero_count == 127);
}

TEST_CASE("brute-force records") {
    for (auto part : {Partition::Pair, Partition::OneRest}) {
        const auto zero = brute_force_record(GroverConfig(6), 0, part);
        for (double v : {zero.concurrence, zero.eof, zero.mutual_info, zero.classical_corr, zero.discord})
            CHECK(std::abs(v) < 1e-9);
        const auto done = brute_force_record(GroverConfig(2), 1, part);
        for (double v : {done.concurrence, done.eof, done.mutual_info, done.classical_corr, done.discord})
            CHECK(std::abs(v) < 1e-9);
    }

    const GroverConfig c(8);
    const auto brute = brute_force_record(c, 5, Partition::Pair);
    const auto closed = closed_form_record(c, 5, Partition::Pair);
    CHECK(std::abs(brute.concurrence - closed.concurrence) < 1e-9);
    CHECK(std::abs(brute.eof - closed.eof) < 1e-9);
    CHECK(std::abs(brute.mutual_info - closed.mutual_info) < 1e-9);
    CHECK(std::abs(brute.classical_corr - closed.classical_corr) < 5e-3);
    CHECK(std::abs(brute.discord - closed.discord) < 5e-3);

    // a different target is a local relabeling and changes nothing
    const auto moved = brute_force_record(GroverConfig(8, 1, 0b10110101), 5, Partition::Pair);
    CHECK(std::abs(moved.concurrence - brute.concurrence) < 1e-12);
    CHECK(std::abs(moved.mutual_info - brute.mutual_info) < 1e-12);
    CHECK(std::abs(moved.classical_corr - brute.classical_corr) < 1e-9);

    const auto rest = brute_force_record(c, 5, Partition::OneRest);
    const auto rest_closed = closed_form_record(c, 5, Partition::OneRest);
    CHECK(std::abs(rest.mutual_info - rest_closed.mutual_info) < 1e-9);
    CHECK(std::abs(rest.concurrence - rest_closed.concurrence) < 1e-9);
    CHECK(rest.discord == rest.mutual_info - rest.classical_corr);

    CHECK_THROWS_AS(brute_force_record(GroverConfig(13), 1, Partition::Pair), Error);
    CHECK_THROWS_AS(brute_force_record(GroverConfig(1), 1, Partition::Pair), Error);
    CHECK_THROWS_AS(brute_force_record(c, 1, Partition::Pair, 1), Error);
}
