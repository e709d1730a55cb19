#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "inertia/bipartite.hpp"
#include "inertia/eig.hpp"
#include "inertia/errors.hpp"
#include "inertia/sampling.hpp"
#include "inertia/svd.hpp"

using namespace inertia;

TEST_CASE("sample_state: spectra by rank and trace normalization") {
    const BipartiteDims dims{3, 3};
    const ComplexMatrix full = sample_state(dims, 9, 1);
    CHECK(inertia_of(full) == Inertia{0, 0, 9});
    CHECK(full.trace().real() == doctest::Approx(1.0));

    const ComplexMatrix pure = sample_state(dims, 1, 2);
    CHECK(inertia_of(pure) == Inertia{0, 8, 1});

    CHECK_THROWS_AS(sample_state(dims, 0, 1), BadRank);
    CHECK_THROWS_AS(sample_state(dims, 10, 1), BadRank);
}

TEST_CASE("sample_state: bit-identical replay per seed") {
    const BipartiteDims dims{2, 3};
    const ComplexMatrix a = sample_state(dims, 4, 12345);
    const ComplexMatrix b = sample_state(dims, 4, 12345);
    CHECK(a == b);
    const ComplexMatrix c = sample_state(dims, 4, 12346);
    CHECK_FALSE(a == c);
}

TEST_CASE("census: 2x3 full-rank draws land in the known classes") {
    CensusOptions opts;
    opts.samples = 3000;
    opts.rank_schedule = {6};
    opts.seed = 9;
    const auto hist = inertia_census(BipartiteDims{2, 3}, opts);
    std::size_t total = 0;
    for (const auto& [in, count] : hist) {
        total += count;
        const bool allowed =
            in == Inertia{0, 0, 6} || in == Inertia{1, 0, 5} || in == Inertia{2, 0, 4};
        CHECK(allowed);
    }
    CHECK(total == opts.samples);
}

TEST_CASE("pure states: partial transpose spectrum matches the Schmidt-coefficient formula") {
    const BipartiteDims dims{3, 3};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ComplexMatrix rho = sample_state(dims, 1, seed);
        // Schmidt coefficients from the reshaped pure vector: rho = psi psi†
        // up to rounding, so psi is the dominant eigvecor scaled by sqrt(p).
        const auto dec = eig_hermitian(rho);
        const auto psi = dec.eigenvectors.col(8);
        ComplexMatrix x(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k) x(i, k) = psi[i * 3 + k];
        const auto schmidt = svd(x).singular_values;

        std::vector<double> expected;
        for (double s : schmidt) expected.push_back(s * s);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                expected.push_back(schmidt[i] * schmidt[j]);
                expected.push_back(-schmidt[i] * schmidt[j]);
            }
        std::sort(expected.begin(), expected.end());

        const auto mu = hermitian_eigenvalues(partial_transpose(rho, dims));
        REQUIRE(mu.size() == expected.size());
        for (std::size_t i = 0; i < mu.size(); ++i)
            CHECK(mu[i] == doctest::Approx(expected[i]).epsilon(1e-9));

        // Generic draws have full Schmidt rank, hence three negative levels.
        CHECK(inertia_of(partial_transpose(rho, dims)) == Inertia{3, 0, 6});
    }
}

TEST_CASE("census: identical histograms for any thread budget") {
    CensusOptions opts;
    opts.samples = 800;
    opts.seed = 31;
    const BipartiteDims dims{3, 3};

    setenv("INERTIA_LAB_THREADS", "1", 1);
    const auto serial = inertia_census(dims, opts);
    setenv("INERTIA_LAB_THREADS", "2", 1);
    const auto parallel = inertia_census(dims, opts);
    unsetenv("INERTIA_LAB_THREADS");
    CHECK(serial == parallel);
}
