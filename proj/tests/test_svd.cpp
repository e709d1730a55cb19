#include <doctest.h>

#include "inertia/errors.hpp"
#include "inertia/rng.hpp"
#include "inertia/svd.hpp"
#include "test_helpers.hpp"

using namespace inertia;
using inertia::test::gauss_rank;

TEST_CASE("svd: zero and diagonal inputs") {
    const auto z = svd(ComplexMatrix(2, 3));
    for (double s : z.singular_values) CHECK(s == 0.0);

    const double d[] = {3.0, 1.0};
    const auto dec = svd(ComplexMatrix::diagonal(std::span<const double>(d, 2)));
    CHECK(dec.singular_values[0] == doctest::Approx(3.0));
    CHECK(dec.singular_values[1] == doctest::Approx(1.0));
}

TEST_CASE("svd: two equal rows force a vanishing singular value") {
    Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        ComplexMatrix b = ginibre(3, 3, rng);
        for (std::size_t j = 0; j < 3; ++j) b(2, j) = b(0, j);
        const auto dec = svd(b);
        CHECK(dec.singular_values[2] <= 1e-10 * b.frobenius_norm());
    }
}

TEST_CASE("svd: reconstruction and unitarity on random rectangles") {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng.below(8);
        const std::size_t c = 1 + rng.below(8);
        const ComplexMatrix m = ginibre(r, c, rng);
        const auto dec = svd(m);
        CHECK((dec.reconstruct() - m).frobenius_norm() <= 1e-10 * (1.0 + m.frobenius_norm()));
        CHECK((dec.u.adjoint() * dec.u - ComplexMatrix::identity(r)).frobenius_norm() <= 1e-10);
        CHECK((dec.v * dec.v.adjoint() - ComplexMatrix::identity(c)).frobenius_norm() <= 1e-10);
        for (std::size_t i = 0; i + 1 < dec.singular_values.size(); ++i)
            CHECK(dec.singular_values[i] >= dec.singular_values[i + 1]);
        for (double s : dec.singular_values) CHECK(s >= 0.0);
    }
}

TEST_CASE("rank: examples and the row-reduction oracle") {
    CHECK(rank(ComplexMatrix::identity(4), 1e-9) == 4);

    Rng rng(3);
    const auto x = random_vector(5, rng);
    ComplexMatrix outer(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) outer(i, j) = x[i] * std::conj(x[j]);
    CHECK(rank(outer, 1e-9) == 1);

    for (int trial = 0; trial < 40; ++trial) {
        const ComplexMatrix g = ginibre(3, 4, rng);
        CHECK(rank(g, 1e-9) == 3);
        CHECK(rank(g, 1e-9) == gauss_rank(g, 1e-9));
    }

    CHECK_THROWS_AS(rank(ComplexMatrix::identity(2), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(rank(ComplexMatrix::identity(2), 1.5), std::invalid_argument);
}
