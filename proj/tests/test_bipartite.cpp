#include <doctest.h>

#include "inertia/bipartite.hpp"
#include "inertia/eig.hpp"
#include "inertia/errors.hpp"
#include "inertia/linalg.hpp"
#include "inertia/rng.hpp"
#include "inertia/sampling.hpp"
#include "test_helpers.hpp"

using namespace inertia;

namespace {

ComplexMatrix max_entangled_projector() {
    std::vector<cplx> psi(9, cplx{0.0, 0.0});
    const double w = 1.0 / std::sqrt(3.0);
    psi[0] = psi[4] = psi[8] = w;  // (|00> + |11> + |22>)/sqrt(3)
    ComplexMatrix rho(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
    return rho;
}

}  // namespace

TEST_CASE("partial_transpose: fixed points, locality and the swap spectrum") {
    const BipartiteDims d33{3, 3};
    CHECK(partial_transpose(ComplexMatrix::identity(9), d33) == ComplexMatrix::identity(9));

    Rng rng(6);
    const ComplexMatrix a = random_hermitian(3, rng);
    const ComplexMatrix b = random_hermitian(3, rng);
    CHECK(inertia::test::rel_err(partial_transpose(kron(a, b), d33), kron(a.transpose(), b)) <=
          1e-14);

    // The partially transposed maximally entangled projector is SWAP/3.
    const ComplexMatrix rho = max_entangled_projector();
    const ComplexMatrix gamma = partial_transpose(rho, d33);
    CHECK(inertia_of(gamma) == Inertia{3, 0, 6});
    const auto mu = hermitian_eigenvalues(gamma);
    for (std::size_t i = 0; i < 3; ++i) CHECK(mu[i] == doctest::Approx(-1.0 / 3.0));
    for (std::size_t i = 3; i < 9; ++i) CHECK(mu[i] == doctest::Approx(1.0 / 3.0));

    CHECK_THROWS_AS(partial_transpose(ComplexMatrix::identity(5), BipartiteDims{2, 3}),
                    DimensionMismatch);
}

TEST_CASE("partial_transpose: involution and trace are exact; both systems agree") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const BipartiteDims dims{2 + rng.below(2), 2 + rng.below(3)};
        const ComplexMatrix m = random_hermitian(dims.product(), rng);
        const ComplexMatrix g = partial_transpose(m, dims);
        CHECK(partial_transpose(g, dims) == m);      // entry permutation, bit-exact
        CHECK(g.trace() == m.trace());               // diagonal is fixed
        CHECK(g.hermiticity_defect() <= 1e-14 * (1.0 + g.frobenius_norm()));

        // Transposing system B instead is the full transpose of transposing A.
        const ComplexMatrix gb = partial_transpose(m, dims, System::B);
        CHECK(inertia::test::rel_err(gb, g.transpose()) <= 1e-14);
    }
}

TEST_CASE("inertia_of: thresholding and validation") {
    const double d[] = {-1.0, 0.0, 2.0};
    CHECK(inertia_of(ComplexMatrix::diagonal(std::span<const double>(d, 3)), 1e-9) ==
          Inertia{1, 1, 1});

    Rng rng(29);
    const ComplexMatrix l = ginibre(9, 9, rng);
    CHECK(inertia_of((l * l.adjoint()).hermitian_part()) == Inertia{0, 0, 9});

    ComplexMatrix bad(2, 2);
    bad(0, 1) = 5.0;
    CHECK_THROWS_AS(inertia_of(bad), NotHermitian);

    CHECK(Inertia{1, 1, 1}.order() == 3);
    CHECK(Inertia{1, 0, 5}.str() == "(1,0,5)");
}

TEST_CASE("EW positivity: NPT partial transposes have at least three positive eigenvalues") {
    const BipartiteDims dims{3, 3};
    std::size_t npt_seen = 0;
    for (std::size_t i = 0; i < 10000; ++i) {
        Rng rng = Rng::stream(777, i);
        const std::size_t rank_choice = 1 + rng.below(9);
        const ComplexMatrix m = sample_state(dims, rank_choice, rng);
        const Inertia in = inertia_of(partial_transpose(m, dims));
        if (in.neg >= 1) {
            ++npt_seen;
            CHECK(in.pos >= 3);
        }
    }
    CHECK(npt_seen > 5000);  // NPT draws dominate this ensemble
}
