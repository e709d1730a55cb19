#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inertia/bipartite.hpp"
#include "inertia/complex_matrix.hpp"
#include "inertia/rng.hpp"

namespace inertia {

/// Outcome of a randomized property suite for one named fact.
struct VerificationReport {
    std::string lemma;
    std::size_t trials = 0;
    std::size_t passes = 0;
    std::size_t failures = 0;
    double worst_defect = 0.0;
    double tolerance = 0.0;
    std::string defect_meaning;

    bool passed() const { return trials > 0 && failures == 0; }
};

std::vector<std::string> registered_lemmas();

/// Runs `trials` randomized checks of the named fact; one derived RNG stream
/// per trial, so the report is reproducible and thread-count independent.
/// Throws UnknownLemma.
VerificationReport verify_lemma(const std::string& name, std::size_t trials, std::uint64_t seed);

/// PSD state with kron(beta, alpha) in the kernel of its partial transpose,
/// built from `perp_b` rank-one terms orthogonal to {conj(beta)⊗e_k} and
/// `perp_a` terms orthogonal to {e_j⊗alpha}. Used by property suites and
/// tests that need states with a known product kernel vector.
ComplexMatrix kernel_engineered_state(BipartiteDims dims, std::span<const cplx> beta,
                                      std::span<const cplx> alpha, std::size_t perp_b,
                                      std::size_t perp_a, Rng& rng);

/// Haar-ish random unitary via Gram-Schmidt on a Ginibre draw.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

}  // namespace inertia
