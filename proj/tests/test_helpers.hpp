#pragma once

#include <cmath>
#include <vector>

#include "inertia/complex_matrix.hpp"
#include "inertia/rng.hpp"

namespace inertia::test {

inline double rel_err(const ComplexMatrix& got, const ComplexMatrix& want) {
    return (got - want).frobenius_norm() / (1.0 + want.frobenius_norm());
}

/// Row-reduction rank with partial pivoting; independent of the SVD path.
inline std::size_t gauss_rank(ComplexMatrix a, double tol) {
    const double scale = std::max(1.0, a.frobenius_norm());
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t piv = r;
        double best = std::abs(a(r, col));
        for (std::size_t i = r + 1; i < a.rows(); ++i)
            if (std::abs(a(i, col)) > best) {
                best = std::abs(a(i, col));
                piv = i;
            }
        if (best <= tol * scale) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            const cplx f = a(i, col) / a(r, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

inline std::vector<cplx> basis_vector(std::size_t n, std::size_t k) {
    std::vector<cplx> v(n, cplx{0.0, 0.0});
    v[k] = 1.0;
    return v;
}

}  // namespace inertia::test
