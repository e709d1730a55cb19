#include <doctest.h>

#include "inertia/bipartite.hpp"
#include "inertia/eig.hpp"
#include "inertia/errors.hpp"
#include "inertia/linalg.hpp"
#include "inertia/rng.hpp"
#include "inertia/svd.hpp"
#include "test_helpers.hpp"

using namespace inertia;

TEST_CASE("kron: identities and the entrywise oracle") {
    CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(3)) ==
          ComplexMatrix::identity(6));

    ComplexMatrix raiser(2, 2);
    raiser(0, 1) = 1.0;
    const ComplexMatrix block = kron(raiser, ComplexMatrix::identity(2));
    CHECK(block(0, 2) == cplx{1.0, 0.0});
    CHECK(block(1, 3) == cplx{1.0, 0.0});
    CHECK(block.frobenius_norm() == doctest::Approx(std::sqrt(2.0)));

    Rng rng(17);
    const ComplexMatrix a = ginibre(2, 2, rng);
    const ComplexMatrix b = ginibre(3, 3, rng);
    const ComplexMatrix k = kron(a, b);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t p = 0; p < 3; ++p)
                for (std::size_t q = 0; q < 3; ++q)
                    CHECK(k(i * 3 + p, j * 3 + q) == a(i, j) * b(p, q));
}

TEST_CASE("congruence: identity, invertible and rank-deficient factors") {
    const double d[] = {-1.0, 0.0, 1.0};
    const ComplexMatrix m = ComplexMatrix::diagonal(std::span<const double>(d, 3));

    CHECK(inertia::test::rel_err(congruence(ComplexMatrix::identity(3), m), m) <= 1e-14);

    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const ComplexMatrix p = ginibre(3, 3, rng);  // a.s. invertible
        CHECK(inertia_of(congruence(p, m)) == Inertia{1, 1, 1});
    }

    ComplexMatrix p2(2, 2);
    p2(0, 0) = 2.0;
    const ComplexMatrix r = congruence(p2, ComplexMatrix::identity(2));
    CHECK(r(0, 0) == cplx{4.0, 0.0});
    CHECK(inertia_of(r) == Inertia{0, 1, 1});

    CHECK_THROWS_AS(congruence(ComplexMatrix(2, 3), ComplexMatrix::identity(2)),
                    DimensionMismatch);
}

TEST_CASE("congruence: Sylvester invariance and projection monotonicity") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + rng.below(6);
        const ComplexMatrix m = random_hermitian(n, rng);
        const Inertia im = inertia_of(m);

        const ComplexMatrix p = ginibre(n, n, rng);
        CHECK(inertia_of(congruence(p, m)) == im);

        ComplexMatrix lossy = ginibre(n, n, rng);
        for (std::size_t i = 0; i < n; ++i) lossy(i, 0) = 0.0;
        const Inertia ix = inertia_of(congruence(lossy.transpose(), m));
        CHECK(ix.neg <= im.neg);
        CHECK(ix.pos <= im.pos);
    }
}

TEST_CASE("principal_submatrix: examples and monotonicity") {
    const double d[] = {1.0, 2.0, 3.0};
    const ComplexMatrix m = ComplexMatrix::diagonal(std::span<const double>(d, 3));
    const std::size_t all[] = {0, 1, 2};
    CHECK(principal_submatrix(m, std::span<const std::size_t>(all, 3)) == m);

    const std::size_t keep[] = {0, 2};
    const ComplexMatrix sub = principal_submatrix(m, std::span<const std::size_t>(keep, 2));
    CHECK(sub(0, 0) == cplx{1.0, 0.0});
    CHECK(sub(1, 1) == cplx{3.0, 0.0});

    const std::size_t bad[] = {2, 1};
    CHECK_THROWS_AS(principal_submatrix(m, std::span<const std::size_t>(bad, 2)),
                    IndexOutOfBounds);
    const std::size_t oob[] = {0, 5};
    CHECK_THROWS_AS(principal_submatrix(m, std::span<const std::size_t>(oob, 2)),
                    IndexOutOfBounds);

    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const ComplexMatrix h = random_hermitian(9, rng);
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < 9; ++i)
            if (rng.below(9) < 7) idx.push_back(i);
        if (idx.empty()) idx.push_back(0);
        const Inertia ih = inertia_of(h);
        const Inertia is = inertia_of(principal_submatrix(h, idx));
        CHECK(is.neg <= ih.neg);
        CHECK(is.pos <= ih.pos);
    }
}

TEST_CASE("schur_complement: examples") {
    const double d[] = {1.0, 1.0, -2.0};
    const auto block_diag = ComplexMatrix::diagonal(std::span<const double>(d, 3));
    const ComplexMatrix c = schur_complement(block_diag, 2);
    REQUIRE(c.rows() == 1);
    CHECK(c(0, 0) == cplx{-2.0, 0.0});

    ComplexMatrix ones(2, 2);
    ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1.0;
    const ComplexMatrix c2 = schur_complement(ones, 1);
    CHECK(std::abs(c2(0, 0)) <= 1e-14);

    ComplexMatrix singular(3, 3);
    singular(2, 2) = 1.0;
    CHECK_THROWS_AS(schur_complement(singular, 2), SingularBlock);
}

TEST_CASE("schur_complement: inertia additivity against the eigensolver") {
    Rng rng(53);
    int done = 0;
    while (done < 40) {
        const ComplexMatrix m = random_hermitian(6, rng);
        ComplexMatrix complement;
        try {
            complement = schur_complement(m, 2);
        } catch (const SingularBlock&) {
            continue;
        }
        const std::size_t lead[] = {0, 1};
        const Inertia block = inertia_of(principal_submatrix(m, std::span<const std::size_t>(lead, 2)));
        const Inertia rest = inertia_of(complement);
        const Inertia whole = inertia_of(m);
        CHECK(whole.neg == block.neg + rest.neg);
        CHECK(whole.zero == block.zero + rest.zero);
        CHECK(whole.pos == block.pos + rest.pos);
        ++done;
    }
}
