#pragma once

#include <vector>

#include "inertia/complex_matrix.hpp"

namespace inertia {

/// Full singular value decomposition M = U · Σ · V with U (rows x rows) and
/// V (cols x cols) unitary and singular values nonincreasing. Note the
/// convention: `v` is the right factor itself, not its adjoint.
struct SvdDecomposition {
    ComplexMatrix u;
    std::vector<double> singular_values;
    ComplexMatrix v;

    ComplexMatrix reconstruct() const;
};

/// One-sided (Hestenes) Jacobi SVD. Throws ConvergenceFailure.
SvdDecomposition svd(const ComplexMatrix& m);

/// Number of singular values above tol * max(1, sigma_max); tol in (0,1).
std::size_t rank(const ComplexMatrix& m, double tol);

}  // namespace inertia
