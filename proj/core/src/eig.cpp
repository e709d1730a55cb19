#include "inertia/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "inertia/errors.hpp"

namespace inertia {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffTarget = 1e-13;         // off-diagonal Frobenius target, relative
constexpr double kHermitianAccept = 1e-8;    // input defect threshold, relative

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One cyclic Jacobi pass; returns the matrix of eigenvalues on the diagonal.
// When v is non-null the rotations are accumulated into it.
std::vector<double> jacobi(ComplexMatrix a, ComplexMatrix* v) {
    const std::size_t n = a.rows();
    if (v) *v = ComplexMatrix::identity(n);
    const double scale = a.frobenius_norm();
    if (scale == 0.0 || n < 2) {
        std::vector<double> eig(n);
        for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
        return eig;
    }
    const double target = kOffTarget * scale;

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        if (off_diagonal_norm(a) <= target) {
            converged = true;
            break;
        }
        // Elements below this cannot individually block the Frobenius target.
        const double skip = target / static_cast<double>(n);
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= skip) continue;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const cplx phase = apq / mag;
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = phase * (t * c);

                // A <- U† A U with U = I except U(p,p)=c, U(p,q)=s, U(q,p)=-s̄, U(q,q)=c.
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx rp = a(p, j);
                    const cplx rq = a(q, j);
                    a(p, j) = c * rp - s * rq;
                    a(q, j) = std::conj(s) * rp + c * rq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx cp = a(i, p);
                    const cplx cq = a(i, q);
                    a(i, p) = c * cp - std::conj(s) * cq;
                    a(i, q) = s * cp + c * cq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                if (v) {
                    for (std::size_t i = 0; i < n; ++i) {
                        const cplx vp = (*v)(i, p);
                        const cplx vq = (*v)(i, q);
                        (*v)(i, p) = c * vp - std::conj(s) * vq;
                        (*v)(i, q) = s * vp + c * vq;
                    }
                }
            }
        }
    }
    if (!converged && off_diagonal_norm(a) > target)
        throw ConvergenceFailure("Jacobi eigensolver did not reach the off-diagonal target");

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
    return eig;
}

ComplexMatrix checked_hermitian_input(const ComplexMatrix& m) {
    if (!m.square()) throw NonSquare("eig_hermitian needs a square matrix");
    if (m.hermiticity_defect() > kHermitianAccept * (1.0 + m.frobenius_norm()))
        throw NotHermitian("matrix is not Hermitian within tolerance");
    return m.hermitian_part();
}

}  // namespace

ComplexMatrix EigenDecomposition::reconstruct() const {
    const std::size_t n = eigenvalues.size();
    ComplexMatrix scaled = eigenvectors;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= eigenvalues[j];
    return scaled * eigenvectors.adjoint();
}

EigenDecomposition eig_hermitian(const ComplexMatrix& m) {
    const ComplexMatrix a = checked_hermitian_input(m);
    const std::size_t n = a.rows();
    ComplexMatrix v;
    std::vector<double> eig = jacobi(a, &v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return eig[i] < eig[j]; });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = eig[order[j]];
        auto column = v.col(order[j]);
        canonicalize_phase(column);
        out.eigenvectors.set_col(j, column);
    }

    // Exactly equal eigenvalues: order the phase-fixed columns lexicographically
    // so identical inputs always produce identical output bits.
    for (std::size_t j = 0; j + 1 < n;) {
        std::size_t k = j + 1;
        while (k < n && out.eigenvalues[k] == out.eigenvalues[j]) ++k;
        if (k - j > 1) {
            std::vector<std::vector<cplx>> cols;
            for (std::size_t c = j; c < k; ++c) cols.push_back(out.eigenvectors.col(c));
            std::sort(cols.begin(), cols.end(), [](const auto& x, const auto& y) {
                for (std::size_t i = 0; i < x.size(); ++i) {
                    if (x[i].real() != y[i].real()) return x[i].real() < y[i].real();
                    if (x[i].imag() != y[i].imag()) return x[i].imag() < y[i].imag();
                }
                return false;
            });
            for (std::size_t c = j; c < k; ++c) out.eigenvectors.set_col(c, cols[c - j]);
        }
        j = k;
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    std::vector<double> eig = jacobi(checked_hermitian_input(m), nullptr);
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace inertia
