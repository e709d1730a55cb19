#include "inertia/bipartite.hpp"

#include <algorithm>
#include <cmath>

#include "inertia/eig.hpp"
#include "inertia/errors.hpp"

namespace inertia {

std::string Inertia::str() const {
    return "(" + std::to_string(neg) + "," + std::to_string(zero) + "," + std::to_string(pos) + ")";
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteDims dims, System system) {
    if (dims.dim_a < 1 || dims.dim_b < 1 || !m.square() || m.rows() != dims.product())
        throw DimensionMismatch("partial_transpose: order must equal dim_a * dim_b");
    const std::size_t da = dims.dim_a;
    const std::size_t db = dims.dim_b;
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l) {
                    if (system == System::A)
                        out(i * db + k, j * db + l) = m(j * db + k, i * db + l);
                    else
                        out(i * db + k, j * db + l) = m(i * db + l, j * db + k);
                }
    return out;
}

Inertia inertia_of(const ComplexMatrix& m, double zero_tol) {
    if (!m.square()) throw NonSquare("inertia_of needs a square matrix");
    if (!m.is_hermitian()) throw NotHermitian("inertia_of needs a Hermitian matrix");
    const double tau = zero_tol * std::max(1.0, m.frobenius_norm());
    return classify_eigenvalues(hermitian_eigenvalues(m), tau);
}

Inertia classify_eigenvalues(std::span<const double> eigenvalues, double abs_tol) {
    Inertia in;
    for (double e : eigenvalues) {
        if (e < -abs_tol)
            ++in.neg;
        else if (e > abs_tol)
            ++in.pos;
        else
            ++in.zero;
    }
    return in;
}

}  // namespace inertia
