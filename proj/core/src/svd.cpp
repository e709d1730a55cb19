#include "inertia/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "inertia/errors.hpp"

namespace inertia {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kPairTol = 1e-15;

// Orthonormal completion of the already-filled columns of u in [0, filled):
// for each open slot take the standard axis with the largest residual after
// orthogonalization (at least sqrt((m - j)/m) for some axis, so never void).
void complete_basis(ComplexMatrix& u, std::size_t filled) {
    const std::size_t m = u.rows();
    for (std::size_t j = filled; j < m; ++j) {
        std::vector<cplx> best;
        double best_norm = -1.0;
        for (std::size_t axis = 0; axis < m; ++axis) {
            std::vector<cplx> cand(m, cplx{0.0, 0.0});
            cand[axis] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t k = 0; k < j; ++k) {
                    auto uk = u.col(k);
                    const cplx proj = vec_dot(uk, cand);
                    for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * uk[i];
                }
            }
            const double n = vec_norm(cand);
            if (n > best_norm) {
                best_norm = n;
                best = std::move(cand);
            }
        }
        if (best_norm <= 0.0) throw ConvergenceFailure("failed to complete an orthonormal basis");
        normalize(best);
        u.set_col(j, best);
    }
}

}  // namespace

ComplexMatrix SvdDecomposition::reconstruct() const {
    ComplexMatrix sigma(u.cols(), v.rows());
    for (std::size_t i = 0; i < singular_values.size(); ++i) sigma(i, i) = singular_values[i];
    return u * sigma * v;
}

SvdDecomposition svd(const ComplexMatrix& m) {
    if (m.rows() < m.cols()) {
        SvdDecomposition t = svd(m.adjoint());
        return SvdDecomposition{t.v.adjoint(), std::move(t.singular_values), t.u.adjoint()};
    }

    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    ComplexMatrix w = m;
    ComplexMatrix vacc = ComplexMatrix::identity(nc);

    bool converged = (nc < 2);
    const double col_floor = 1e-15 * w.frobenius_norm();
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < nc; ++p) {
            for (std::size_t q = p + 1; q < nc; ++q) {
                double a = 0.0, b = 0.0;
                cplx g = 0.0;
                for (std::size_t i = 0; i < nr; ++i) {
                    a += std::norm(w(i, p));
                    b += std::norm(w(i, q));
                    g += std::conj(w(i, p)) * w(i, q);
                }
                // Numerically dead columns are already singular directions.
                if (a <= col_floor * col_floor || b <= col_floor * col_floor) continue;
                const double mag = std::abs(g);
                if (mag <= kPairTol * std::sqrt(a * b) || mag == 0.0) continue;
                converged = false;

                // Diagonalize the 2x2 Gram [[a, g],[g*, b]].
                const cplx phase = g / mag;
                const double tau = (b - a) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = phase * (t * c);

                for (std::size_t i = 0; i < nr; ++i) {
                    const cplx wp = w(i, p);
                    const cplx wq = w(i, q);
                    w(i, p) = c * wp - std::conj(s) * wq;
                    w(i, q) = s * wp + c * wq;
                }
                for (std::size_t i = 0; i < nc; ++i) {
                    const cplx vp = vacc(i, p);
                    const cplx vq = vacc(i, q);
                    vacc(i, p) = c * vp - std::conj(s) * vq;
                    vacc(i, q) = s * vp + c * vq;
                }
            }
        }
    }
    if (!converged) throw ConvergenceFailure("Jacobi SVD did not converge");

    std::vector<double> sigma(nc);
    for (std::size_t j = 0; j < nc; ++j) sigma[j] = vec_norm(w.col(j));
    std::vector<std::size_t> order(nc);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    SvdDecomposition out;
    out.singular_values.resize(nc);
    out.u = ComplexMatrix(nr, nr);
    ComplexMatrix vsorted(nc, nc);
    const double cutoff = (sigma.empty() ? 0.0 : sigma[order[0]]) * 1e-14;
    std::size_t filled = 0;
    for (std::size_t j = 0; j < nc; ++j) {
        const std::size_t src = order[j];
        out.singular_values[j] = sigma[src];
        vsorted.set_col(j, vacc.col(src));
        if (sigma[src] > cutoff && sigma[src] > 0.0) {
            auto uj = w.col(src);
            for (cplx& x : uj) x /= sigma[src];
            out.u.set_col(filled++, uj);
        }
    }
    complete_basis(out.u, filled);
    out.v = vsorted.adjoint();
    return out;
}

std::size_t rank(const ComplexMatrix& m, double tol) {
    if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("rank: tol must be in (0,1)");
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const SvdDecomposition d = svd(m);
    const double smax = d.singular_values.empty() ? 0.0 : d.singular_values.front();
    const double threshold = tol * std::max(1.0, smax);
    std::size_t r = 0;
    for (double s : d.singular_values)
        if (s > threshold) ++r;
    return r;
}

}  // namespace inertia
