#pragma once

#include <optional>

#include "inertia/bipartite.hpp"
#include "inertia/complex_matrix.hpp"
#include "inertia/product_vector.hpp"

namespace inertia {

/// Scalars with x·S + y·B1 + z·B2 Hermitian and (y, z) != (0, 0).
struct HermitianCombination {
    cplx x, y, z;

    ComplexMatrix combine(const ComplexMatrix& s, const ComplexMatrix& b1,
                          const ComplexMatrix& b2) const;
};

/// Solves the explicit 4x5 real linear system for 2x2 blocks S (PSD, nonzero),
/// B1, B2 by SVD null-space extraction; among an orthonormal null basis the
/// vector with the largest (y1,y2,z1,z2) part wins. x comes out purely
/// imaginary. Throws DegenerateSystem when every null vector has y = z = 0
/// (impossible for S with a positive diagonal entry, so it indicates a broken
/// input).
HermitianCombination hermitian_combination(const ComplexMatrix& s, const ComplexMatrix& b1,
                                           const ComplexMatrix& b2);

/// Invertible local congruence that zeroes the first row and column of both
/// the result and its partial transpose:
///   result = congruence(kron(left, right), input).
/// left = A^T and right = B† for basis completions A·e1 ∝ beta, B·e1 ∝ alpha.
struct ReductionCertificate {
    ComplexMatrix left;
    ComplexMatrix right;
    ComplexMatrix result;

    ComplexMatrix beta_completion() const { return left.transpose(); }
    ComplexMatrix alpha_completion() const { return right.adjoint(); }
};

/// Requires m PSD and phi in the kernel of m^Γ (within 1e-7 * ||m||_F).
/// Throws NotPsd, NotInKernel, DimensionMismatch.
ReductionCertificate zero_first_row_col(const ComplexMatrix& m, BipartiteDims dims,
                                        const ProductVector& phi);

/// Inertia (r, rows+cols-2r, r) of [[0, B],[B†, 0]] with r = rank(B, 1e-9).
Inertia cross_inertia(const ComplexMatrix& b);

/// Inertia from the signs of the leading principal minors when all of them
/// are safely nonzero (then the zero count is 0 and the negative count is the
/// number of sign changes in 1, |M_1|, ..., |M_n|); nullopt otherwise.
std::optional<Inertia> inertia_from_minors(const ComplexMatrix& m);

/// M - k·A·A† for k > 0.
ComplexMatrix rank_downdate(const ComplexMatrix& m, const ComplexMatrix& a, double k);

/// Deterministic unitary with first column x/||x|| (Householder completion).
ComplexMatrix unitary_from_first_column(std::span<const cplx> x);

}  // namespace inertia
