#pragma once

#include <optional>
#include <vector>

#include "inertia/bipartite.hpp"
#include "inertia/complex_matrix.hpp"

namespace inertia {

/// Rank-one factorization beta ⊗ alpha of an ambient vector. Both factors are
/// unit norm with the first significant component of each made real positive,
/// so equal product vectors compare equal up to a global phase.
struct ProductVector {
    std::vector<cplx> beta;   // system A, length dim_a
    std::vector<cplx> alpha;  // system B, length dim_b

    std::vector<cplx> ambient() const { return kron_vec(beta, alpha); }
    /// sqrt(2 - 2|<beta⊗alpha, v/||v||>|): distance to v up to phase.
    double reconstruction_defect(std::span<const cplx> v) const;
};

/// Rank test by reshaping v into a dim_a x dim_b matrix: accepts when the
/// second singular value is at most tol * sigma_1 and returns the dominant
/// factors. Throws ZeroVector.
std::optional<ProductVector> is_product_vector(std::span<const cplx> v, BipartiteDims dims,
                                               double tol = 1e-8);

struct PencilProductVectors {
    std::vector<ProductVector> vectors;
    /// Every member of the span is a product vector (the reshaped pencil is
    /// rank <= 1 identically); `vectors` then holds the two generators.
    bool product_line = false;
};

/// All product vectors in span{v1, v2}, found by driving rank(A + λB) <= 1
/// through the vanishing of the 2x2 minors (quadratics in λ), plus the λ=∞
/// candidate. Inputs must be linearly independent (DependentInputs) and
/// min(dim_a, dim_b) <= 3.
PencilProductVectors pencil_product_vectors(std::span<const cplx> v1, std::span<const cplx> v2,
                                            BipartiteDims dims);

}  // namespace inertia
