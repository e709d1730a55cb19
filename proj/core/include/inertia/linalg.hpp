#pragma once

#include <span>

#include "inertia/complex_matrix.hpp"

namespace inertia {

/// Kronecker product; entry ((i*p+k),(j*q+l)) = a(i,j)*b(k,l) for b of size p x q.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// P · M · P† for Hermitian M, symmetrized against rounding. Sylvester: the
/// inertia is preserved whenever P is invertible.
ComplexMatrix congruence(const ComplexMatrix& p, const ComplexMatrix& m);

/// Rows and columns of a square matrix restricted to `keep` (strictly
/// increasing, in bounds). Throws IndexOutOfBounds.
ComplexMatrix principal_submatrix(const ComplexMatrix& m, std::span<const std::size_t> keep);

/// M22 - M21 · M11^{-1} · M12 for Hermitian M with an invertible leading
/// block of the given size. In(M) = In(M11) + In(complement).
/// Throws SingularBlock when the leading block has an eigenvalue below
/// 1e-10 * ||block||_F in magnitude.
ComplexMatrix schur_complement(const ComplexMatrix& m, std::size_t block_size);

}  // namespace inertia
