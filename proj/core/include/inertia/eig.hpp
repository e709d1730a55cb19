#pragma once

#include <vector>

#include "inertia/complex_matrix.hpp"

namespace inertia {

/// Spectral decomposition of a Hermitian matrix: M = V diag(eigenvalues) V†,
/// eigenvalues ascending, V column-unitary.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi. Input must be square and Hermitian within
/// 1e-8*(1+||M||_F); it is symmetrized once before iterating. Deterministic
/// for identical input bits. Throws NonSquare, NotHermitian,
/// ConvergenceFailure.
EigenDecomposition eig_hermitian(const ComplexMatrix& m);

/// Eigenvalues only (ascending); same contract, skips accumulating V.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace inertia
