#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>

#include "inertia/complex_matrix.hpp"

namespace inertia {

/// Tensor factorization C^m ⊗ C^n of the ambient space.
struct BipartiteDims {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;

    std::size_t product() const { return dim_a * dim_b; }
    friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

/// Eigenvalue sign counts of a Hermitian matrix, negatives first.
struct Inertia {
    std::size_t neg = 0;
    std::size_t zero = 0;
    std::size_t pos = 0;

    std::size_t order() const { return neg + zero + pos; }
    std::string str() const;

    friend auto operator<=>(const Inertia&, const Inertia&) = default;
};

enum class System { A, B };

/// Block transpose on the chosen subsystem: block (i,j) of the result is
/// block (j,i) of the input (system A, the default), an exact entry
/// permutation and an involution.
ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteDims dims,
                                System system = System::A);

/// Counts of eigenvalues below -tau, within [-tau, tau] and above tau with
/// tau = zero_tol * max(1, ||M||_F). Throws NotHermitian.
Inertia inertia_of(const ComplexMatrix& m, double zero_tol = 1e-9);

/// Same classification applied to precomputed eigenvalues with an absolute
/// threshold.
Inertia classify_eigenvalues(std::span<const double> eigenvalues, double abs_tol);

}  // namespace inertia
