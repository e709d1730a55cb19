#include "inertia/linalg.hpp"

#include <cmath>

#include "inertia/eig.hpp"
#include "inertia/errors.hpp"

namespace inertia {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix congruence(const ComplexMatrix& p, const ComplexMatrix& m) {
    if (p.cols() != m.rows() || !m.square())
        throw DimensionMismatch("congruence: P cols must match the order of M");
    return (p * m * p.adjoint()).hermitian_part();
}

ComplexMatrix principal_submatrix(const ComplexMatrix& m, std::span<const std::size_t> keep) {
    if (!m.square()) throw NonSquare("principal_submatrix needs a square matrix");
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] >= m.rows()) throw IndexOutOfBounds("principal_submatrix index out of range");
        if (k > 0 && keep[k] <= keep[k - 1])
            throw IndexOutOfBounds("principal_submatrix indices must be strictly increasing");
    }
    ComplexMatrix out(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = m(keep[i], keep[j]);
    return out;
}

ComplexMatrix schur_complement(const ComplexMatrix& m, std::size_t block_size) {
    if (!m.square()) throw NonSquare("schur_complement needs a square matrix");
    const std::size_t n = m.rows();
    if (block_size == 0 || block_size >= n)
        throw DimensionMismatch("schur_complement: block size must be in (0, order)");

    ComplexMatrix m11(block_size, block_size);
    ComplexMatrix m12(block_size, n - block_size);
    ComplexMatrix m21(n - block_size, block_size);
    ComplexMatrix m22(n - block_size, n - block_size);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i < block_size && j < block_size)
                m11(i, j) = m(i, j);
            else if (i < block_size)
                m12(i, j - block_size) = m(i, j);
            else if (j < block_size)
                m21(i - block_size, j) = m(i, j);
            else
                m22(i - block_size, j - block_size) = m(i, j);
        }

    const EigenDecomposition d = eig_hermitian(m11);
    double min_abs = 0.0;
    for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
        const double a = std::abs(d.eigenvalues[i]);
        min_abs = (i == 0) ? a : std::min(min_abs, a);
    }
    if (min_abs <= 1e-10 * m11.frobenius_norm())
        throw SingularBlock("schur_complement: leading block is numerically singular");

    // m11^{-1} from its spectral decomposition.
    ComplexMatrix vinv = d.eigenvectors;
    for (std::size_t j = 0; j < block_size; ++j)
        for (std::size_t i = 0; i < block_size; ++i) vinv(i, j) /= d.eigenvalues[j];
    const ComplexMatrix m11_inv = vinv * d.eigenvectors.adjoint();

    return (m22 - m21 * m11_inv * m12).hermitian_part();
}

}  // namespace inertia
