#include "inertia/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "inertia/eig.hpp"
#include "inertia/errors.hpp"
#include "inertia/linalg.hpp"
#include "inertia/svd.hpp"

namespace inertia {

namespace {

void require_2x2(const ComplexMatrix& m, const char* what) {
    if (m.rows() != 2 || m.cols() != 2) throw DimensionMismatch(std::string(what) + " must be 2x2");
}

// det of the leading s x s block via partially pivoted LU; exact enough for
// the small orders this library targets.
cplx leading_minor(const ComplexMatrix& m, std::size_t s) {
    ComplexMatrix a(s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) a(i, j) = m(i, j);
    double sign = 1.0;
    cplx det = 1.0;
    for (std::size_t k = 0; k < s; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < s; ++i)
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                piv = i;
            }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < s; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < s; ++i) {
            const cplx f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < s; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return sign * det;
}

}  // namespace

ComplexMatrix HermitianCombination::combine(const ComplexMatrix& s, const ComplexMatrix& b1,
                                            const ComplexMatrix& b2) const {
    return x * s + y * b1 + z * b2;
}

HermitianCombination hermitian_combination(const ComplexMatrix& s, const ComplexMatrix& b1,
                                           const ComplexMatrix& b2) {
    require_2x2(s, "S");
    require_2x2(b1, "B1");
    require_2x2(b2, "B2");
    if (!s.is_hermitian(1e-8)) throw NotHermitian("hermitian_combination: S must be Hermitian");
    if (s.frobenius_norm() <= 1e-12) throw NotPsd("hermitian_combination: S must be nonzero");
    {
        const auto eigs = hermitian_eigenvalues(s);
        if (eigs.front() < -1e-8 * (1.0 + s.frobenius_norm()))
            throw NotPsd("hermitian_combination: S must be positive semidefinite");
    }

    // Work in a basis where the (0,0) entry of S is positive; a simultaneous
    // permutation of all three blocks does not affect Hermiticity of the
    // combination. S PSD and nonzero guarantees a positive diagonal entry.
    ComplexMatrix sp = s.hermitian_part(), b1p = b1, b2p = b2;
    if (sp(0, 0).real() <= 1e-14 * (1.0 + s.frobenius_norm())) {
        auto swap_basis = [](const ComplexMatrix& m) {
            ComplexMatrix w(2, 2);
            w(0, 0) = m(1, 1);
            w(0, 1) = m(1, 0);
            w(1, 0) = m(0, 1);
            w(1, 1) = m(0, 0);
            return w;
        };
        sp = swap_basis(sp);
        b1p = swap_basis(b1p);
        b2p = swap_basis(b2p);
    }

    const double a = sp(0, 0).real();
    const double b = sp(1, 1).real();
    const double c1 = sp(0, 1).real(), c2 = sp(0, 1).imag();
    const double d1 = b1p(0, 0).real(), d2 = b1p(0, 0).imag();
    const double e1 = b1p(0, 1).real(), e2 = b1p(0, 1).imag();
    const double f1 = b1p(1, 0).real(), f2 = b1p(1, 0).imag();
    const double g1 = b1p(1, 1).real(), g2 = b1p(1, 1).imag();
    const double h1 = b2p(0, 0).real(), h2 = b2p(0, 0).imag();
    const double k1 = b2p(0, 1).real(), k2 = b2p(0, 1).imag();
    const double l1 = b2p(1, 0).real(), l2 = b2p(1, 0).imag();
    const double m1 = b2p(1, 1).real(), m2 = b2p(1, 1).imag();

    // Hermiticity of x2·i·S + y·B1 + z·B2 over (x2, y1, y2, z1, z2).
    const double rows[4][5] = {
        {a, d2, d1, h2, h1},
        {b, g2, g1, m2, m1},
        {2.0 * c2, f1 - e1, e2 - f2, l1 - k1, k2 - l2},
        {2.0 * c1, e2 + f2, e1 + f1, k2 + l2, k1 + l1},
    };
    ComplexMatrix sys(4, 5);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 5; ++j) sys(i, j) = rows[i][j];

    const SvdDecomposition dec = svd(sys);
    const double smax = dec.singular_values.empty() ? 0.0 : dec.singular_values.front();
    const double null_tol = 1e-12 * std::max(1.0, smax);

    double best_yz = -1.0;
    std::vector<cplx> best;
    for (std::size_t r = 0; r < 5; ++r) {
        const bool is_null = r >= dec.singular_values.size() || dec.singular_values[r] <= null_tol;
        if (!is_null) continue;
        auto vec = dec.v.row(r);
        canonicalize_phase(vec);
        double yz = 0.0;
        for (std::size_t i = 1; i < 5; ++i) yz += std::norm(vec[i]);
        yz = std::sqrt(yz);
        if (yz > best_yz) {
            best_yz = yz;
            best.assign(vec.begin(), vec.end());
        }
    }
    if (best_yz <= 1e-10)
        throw DegenerateSystem("hermitian_combination: null space has y = z = 0 only");

    // The system is real, so the null vector is real after phase fixing.
    std::array<double, 5> n{};
    for (std::size_t i = 0; i < 5; ++i) n[i] = best[i].real();
    double norm = 0.0;
    for (double v : n) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : n) v /= norm;

    return HermitianCombination{cplx{0.0, n[0]}, cplx{n[1], n[2]}, cplx{n[3], n[4]}};
}

ComplexMatrix unitary_from_first_column(std::span<const cplx> x) {
    std::vector<cplx> unit(x.begin(), x.end());
    normalize(unit);
    const std::size_t n = unit.size();

    cplx phase{1.0, 0.0};
    if (std::abs(unit[0]) > 1e-300) phase = unit[0] / std::abs(unit[0]);
    std::vector<cplx> w = unit;
    w[0] += phase;  // no cancellation: ||w||^2 = 2(1 + |x0|)
    const double wn2 = vec_norm(w) * vec_norm(w);

    ComplexMatrix h = ComplexMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) -= 2.0 * w[i] * std::conj(w[j]) / wn2;
    // H maps e1 to -conj(phase)·x̂; absorb the factor so column one is x̂ itself.
    for (std::size_t i = 0; i < n; ++i) h(i, 0) *= -phase;
    return h;
}

ReductionCertificate zero_first_row_col(const ComplexMatrix& m, BipartiteDims dims,
                                        const ProductVector& phi) {
    if (!m.square() || m.rows() != dims.product())
        throw DimensionMismatch("zero_first_row_col: order must equal dim_a * dim_b");
    if (phi.beta.size() != dims.dim_a || phi.alpha.size() != dims.dim_b)
        throw DimensionMismatch("zero_first_row_col: factor lengths do not match dims");
    if (!m.is_hermitian()) throw NotPsd("zero_first_row_col: input must be Hermitian PSD");

    const double scale = m.frobenius_norm();
    {
        const auto eigs = hermitian_eigenvalues(m);
        if (!eigs.empty() && eigs.front() < -1e-8 * std::max(1.0, scale))
            throw NotPsd("zero_first_row_col: input is not positive semidefinite");
    }
    const ComplexMatrix mg = partial_transpose(m, dims);
    const auto residual = matvec(mg, phi.ambient());
    if (vec_norm(residual) > 1e-7 * std::max(scale, 1e-300))
        throw NotInKernel("zero_first_row_col: phi is not in the kernel of m^Γ");

    const ComplexMatrix a = unitary_from_first_column(phi.beta);
    const ComplexMatrix b = unitary_from_first_column(phi.alpha);

    ReductionCertificate cert;
    cert.left = a.transpose();
    cert.right = b.adjoint();
    cert.result = congruence(kron(cert.left, cert.right), m);
    return cert;
}

Inertia cross_inertia(const ComplexMatrix& b) {
    const std::size_t r = (b.rows() == 0 || b.cols() == 0) ? 0 : rank(b, 1e-9);
    const std::size_t order = b.rows() + b.cols();
    return Inertia{r, order - 2 * r, r};
}

std::optional<Inertia> inertia_from_minors(const ComplexMatrix& m) {
    if (!m.square()) throw NonSquare("inertia_from_minors needs a square matrix");
    if (!m.is_hermitian()) throw NotHermitian("inertia_from_minors needs a Hermitian matrix");
    const std::size_t n = m.rows();
    const double scale = 1.0 + m.frobenius_norm();

    std::size_t sign_changes = 0;
    double prev_sign = 1.0;
    double floor = 1.0;
    for (std::size_t s = 1; s <= n; ++s) {
        floor *= scale;  // (1 + ||M||_F)^s
        const double det = leading_minor(m, s).real();
        if (std::abs(det) <= 1e-10 * floor) return std::nullopt;
        const double sign = det > 0.0 ? 1.0 : -1.0;
        if (sign != prev_sign) ++sign_changes;
        prev_sign = sign;
    }
    return Inertia{sign_changes, 0, n - sign_changes};
}

ComplexMatrix rank_downdate(const ComplexMatrix& m, const ComplexMatrix& a, double k) {
    if (!m.square() || a.rows() != m.rows())
        throw DimensionMismatch("rank_downdate: A must have as many rows as M");
    if (!(k > 0.0)) throw std::invalid_argument("rank_downdate: k must be positive");
    return (m - k * (a * a.adjoint())).hermitian_part();
}

}  // namespace inertia
