#include "doctest.h"

#include <cmath>
#include <random>

#include "grovercorr/error.hpp"
#include "grovercorr/numerics.hpp"

using namespace grovercorr;

namespace {

Matrix random_symmetric(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) m(i, j) = m(j, i) = gauss(rng);
    return m;
}

} // namespace

TEST_CASE("eigh_small on trivial inputs") {
    const auto id = eigh_small(Matrix::identity(4));
    CHECK(id.eigenvalues == std::vector<double>{1, 1, 1, 1});

    Matrix d(2, 2);
    d(0, 0) = 1;
    d(1, 1) = 3;
    const auto r = eigh_small(d);
    CHECK(r.eigenvalues[0] == 3);
    CHECK(r.eigenvalues[1] == 1);
    CHECK(std::abs(r.eigenvectors(1, 0)) == 1);
}

TEST_CASE("eigh_small on a 2x2 density matrix") {
    Matrix m(2, 2);
    m(0, 0) = 0.71822;
    m(0, 1) = m(1, 0) = 0.37463;
    m(1, 1) = 0.28095;
    const auto r = eigh_small(m);
    // quadratic formula on trace and determinant
    CHECK(r.eigenvalues[0] == doctest::Approx(0.9333463400534907).epsilon(1e-13));
    CHECK(r.eigenvalues[1] == doctest::Approx(0.06582365994650929).epsilon(1e-12));
}

TEST_CASE("eigh_small reconstructs random symmetric matrices") {
    std::mt19937_64 rng(7);
    for (std::size_t dim : {1u, 2u, 3u, 5u, 8u, 17u, 40u}) {
        const Matrix a = random_symmetric(dim, rng);
        const auto r = eigh_small(a);
        Matrix lambda(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) lambda(i, i) = r.eigenvalues[i];
        const Matrix back = multiply(multiply(r.eigenvectors, lambda), transpose(r.eigenvectors));
        CHECK(max_abs_diff(a, back) < 1e-12);
        CHECK(max_abs_diff(multiply(transpose(r.eigenvectors), r.eigenvectors), Matrix::identity(dim)) < 1e-12);
        for (std::size_t i = 1; i < dim; ++i) CHECK(r.eigenvalues[i - 1] >= r.eigenvalues[i]);
    }
}

TEST_CASE("eigh_small is deterministic") {
    std::mt19937_64 rng(11);
    const Matrix a = random_symmetric(12, rng);
    const auto x = eigh_small(a);
    const auto y = eigh_small(a);
    CHECK(x.eigenvalues == y.eigenvalues);
    CHECK(x.eigenvectors == y.eigenvectors);
}

TEST_CASE("eigh_small rejects bad shapes") {
    CHECK_THROWS_AS(eigh_small(Matrix(2, 3)), Error);
    Matrix asym(2, 2);
    asym(0, 1) = 1e-6;
    try {
        eigh_small(asym);
        FAIL("no throw");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::Shape);
    }
    try {
        eigh_small(Matrix(4097, 4097));
        FAIL("no throw");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::Capacity);
    }
}

TEST_CASE("eigvals_hermitian matches a known spectrum") {
    // sigma_y has eigenvalues +1, -1
    ComplexMatrix y(2, 2);
    y(0, 1) = cplx(0, -1);
    y(1, 0) = cplx(0, 1);
    const auto ev = eigvals_hermitian(y);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0] == doctest::Approx(1.0));
    CHECK(ev[1] == doctest::Approx(-1.0));

    ComplexMatrix h(2, 2);
    h(0, 0) = 0.5;
    h(1, 1) = 0.5;
    h(0, 1) = cplx(0.25, 0.25);
    h(1, 0) = cplx(0.25, -0.25);
    const auto e2 = eigvals_hermitian(h);
    const double off = std::sqrt(0.125);
    CHECK(e2[0] == doctest::Approx(0.5 + off));
    CHECK(e2[1] == doctest::Approx(0.5 - off));
}

TEST_CASE("shannon_entropy") {
    const double pure[] = {1.0, 0.0};
    const double coin[] = {0.5, 0.5};
    const double grover[] = {0.86158, 0.13842};
    CHECK(shannon_entropy(pure) == 0.0);
    CHECK(shannon_entropy(coin) == doctest::Approx(1.0));
    CHECK(shannon_entropy(grover) == doctest::Approx(0.5800859301477666).epsilon(1e-12));

    const double tiny_negative[] = {1.0, -1e-12};
    CHECK(shannon_entropy(tiny_negative) == 0.0);
    const double negative[] = {1.1, -0.1};
    CHECK_THROWS_AS(shannon_entropy(negative), Error);
    const double unnormalized[] = {0.5, 0.4};
    CHECK_THROWS_AS(shannon_entropy(unnormalized), Error);
}

TEST_CASE("binary_entropy") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.991145) == doctest::Approx(0.07310316575690144).epsilon(1e-12));
    CHECK(binary_entropy(0.3) == doctest::Approx(binary_entropy(0.7)));
    CHECK_THROWS_AS(binary_entropy(-0.01), Error);
    CHECK_THROWS_AS(binary_entropy(1.01), Error);
}
