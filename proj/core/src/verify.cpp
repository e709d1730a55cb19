#include "inertia/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>

#include "inertia/catalog.hpp"
#include "inertia/eig.hpp"
#include "inertia/errors.hpp"
#include "inertia/linalg.hpp"
#include "inertia/parallel.hpp"
#include "inertia/product_vector.hpp"
#include "inertia/reduce.hpp"
#include "inertia/sampling.hpp"
#include "inertia/svd.hpp"

namespace inertia {

namespace {

struct Suite {
    double tolerance;
    std::string defect_meaning;
    // Returns the trial defect; compared against `tolerance`.
    std::function<double(Rng&)> trial;
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

double rel_fro(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).frobenius_norm() / (1.0 + a.frobenius_norm());
}

ComplexMatrix rank_one(std::span<const cplx> x, double w) {
    ComplexMatrix m(x.size(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) m(i, j) = w * x[i] * std::conj(x[j]);
    return m;
}

// Orthogonalize v against the rows of basis (unit vectors) with two passes.
void project_out(std::vector<cplx>& v, const std::vector<std::vector<cplx>>& basis) {
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) {
            const cplx overlap = vec_dot(b, v);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= overlap * b[i];
        }
}

std::vector<std::vector<cplx>> orthonormal_family(const std::vector<std::vector<cplx>>& raw) {
    std::vector<std::vector<cplx>> out;
    for (auto v : raw) {
        project_out(v, out);
        if (vec_norm(v) < 1e-8) continue;
        normalize(v);
        out.push_back(std::move(v));
    }
    return out;
}

Inertia eig_inertia(const ComplexMatrix& m, double zero_tol = 1e-9) {
    return inertia_of(m, zero_tol);
}

// ---- individual suites -----------------------------------------------------

double trial_product_tran(Rng& rng) {
    const std::size_t m = 2 + rng.below(2);
    const std::size_t n = 2 + rng.below(2);
    const BipartiteDims dims{m, n};
    const ComplexMatrix a = ginibre(m, m, rng);
    const ComplexMatrix c = ginibre(m, m, rng);
    const ComplexMatrix b = ginibre(n, n, rng);
    const ComplexMatrix d = ginibre(n, n, rng);
    const ComplexMatrix hm = random_hermitian(m * n, rng);

    const ComplexMatrix lhs = partial_transpose(kron(a, b) * hm * kron(c, d), dims);
    const ComplexMatrix rhs =
        kron(c.transpose(), b) * partial_transpose(hm, dims) * kron(a.transpose(), d);
    return rel_fro(lhs, rhs);
}

double trial_vector_tran(Rng& rng) {
    const std::size_t m = 2 + rng.below(2);
    const std::size_t n = 2 + rng.below(2);
    const BipartiteDims dims{m, n};

    // (i) real beta: phi† M phi == phi† M^Γ phi.
    std::vector<cplx> beta(m);
    for (cplx& x : beta) x = rng.gaussian();
    const auto alpha = random_vector(n, rng);
    const auto phi = kron_vec(beta, alpha);
    const ComplexMatrix hm = random_hermitian(m * n, rng);
    const cplx lhs = vec_dot(phi, matvec(hm, phi));
    const cplx rhs = vec_dot(phi, matvec(partial_transpose(hm, dims), phi));
    const double d1 = std::abs(lhs - rhs) / (1.0 + std::abs(lhs));

    // (ii) M >= 0 with M^Γ phi = 0 forces M phi = 0.
    std::vector<cplx> beta_unit = beta;
    normalize(beta_unit);
    auto alpha_unit = alpha;
    normalize(alpha_unit);
    const ComplexMatrix psd =
        kernel_engineered_state(dims, beta_unit, alpha_unit, m * n - n - 1, 2, rng);
    const auto phi_unit = kron_vec(beta_unit, alpha_unit);
    const double d2 =
        vec_norm(matvec(psd, phi_unit)) / std::max(psd.frobenius_norm(), 1e-300);

    return std::max(d1 / 1e-12, d2 / 1e-8);
}

double trial_sumdif(Rng& rng) {
    const std::size_t n = 4 + rng.below(6);
    const ComplexMatrix a = random_hermitian(n, rng);
    const ComplexMatrix b = random_hermitian(n, rng);
    const Inertia ia = eig_inertia(a);
    const Inertia ib = eig_inertia(b);
    const Inertia iab = eig_inertia(a + b);
    double defect = 0.0;
    if (iab.neg > ia.neg + ib.neg) defect += double(iab.neg - ia.neg - ib.neg);
    if (iab.pos > ia.pos + ib.pos) defect += double(iab.pos - ia.pos - ib.pos);

    // Corollary: adding a PSD matrix cannot raise i_- or lower i_+.
    const std::size_t gr = 1 + rng.below(n);
    const ComplexMatrix g = ginibre(n, gr, rng);
    const ComplexMatrix psd = (g * g.adjoint()).hermitian_part();
    const Inertia in_n = eig_inertia(b);
    const Inertia in_sum = eig_inertia(psd + b);
    if (in_sum.neg > in_n.neg) defect += double(in_sum.neg - in_n.neg);
    if (in_sum.pos < in_n.pos) defect += double(in_n.pos - in_sum.pos);
    return defect;
}

double trial_projection(Rng& rng) {
    const std::size_t n = 4 + rng.below(6);
    const ComplexMatrix m = random_hermitian(n, rng);
    ComplexMatrix p = ginibre(n, n, rng);
    if (rng.below(2) == 0) {
        // Rank-deficient projector-shaped factor.
        const std::size_t zeros = 1 + rng.below(n - 1);
        for (std::size_t j = 0; j < zeros; ++j)
            for (std::size_t i = 0; i < n; ++i) p(i, j) = 0.0;
    }
    const Inertia im = eig_inertia(m);
    const Inertia ix = eig_inertia(congruence(p, m));
    double defect = 0.0;
    if (ix.neg > im.neg) defect += double(ix.neg - im.neg);
    if (ix.pos > im.pos) defect += double(ix.pos - im.pos);
    return defect;
}

double trial_sub_lem(Rng& rng) {
    const std::size_t n = 6 + rng.below(4);
    const ComplexMatrix m = random_hermitian(n, rng);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (rng.below(10) < 6) keep.push_back(i);
    if (keep.empty()) keep.push_back(0);
    const Inertia im = eig_inertia(m);
    const Inertia is = eig_inertia(principal_submatrix(m, keep));
    double defect = 0.0;
    if (is.neg > im.neg) defect += double(is.neg - im.neg);
    if (is.pos > im.pos) defect += double(is.pos - im.pos);
    return defect;
}

double trial_cross_lem(Rng& rng) {
    const std::size_t n = 1 + rng.below(5);
    const std::size_t m = 1 + rng.below(5);
    ComplexMatrix b;
    if (rng.below(3) == 0) {
        const std::size_t r = rng.below(std::min(n, m) + 1);
        b = r == 0 ? ComplexMatrix(n, m) : ginibre(n, r, rng) * ginibre(r, m, rng);
    } else {
        b = ginibre(n, m, rng);
    }
    const Inertia formula = cross_inertia(b);

    ComplexMatrix block(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            block(i, n + j) = b(i, j);
            block(n + j, i) = std::conj(b(i, j));
        }
    return formula == eig_inertia(block) ? 0.0 : 1.0;
}

double trial_det_lem(Rng& rng) {
    const ComplexMatrix m = random_hermitian(5, rng);
    const auto from_minors = inertia_from_minors(m);
    if (!from_minors) return 0.0;  // degenerate minors: the rule abstains
    return *from_minors == eig_inertia(m) ? 0.0 : 1.0;
}

double trial_negative_change(Rng& rng) {
    const std::size_t n = 5 + rng.below(3);
    const std::size_t r = n - 2;
    const ComplexMatrix u = random_unitary(n, rng);
    std::vector<double> lam(n, 0.0);
    for (std::size_t i = 0; i < r; ++i) {
        const double mag = rng.uniform(0.5, 2.0);
        lam[i] = rng.below(2) == 0 ? -mag : mag;
    }
    ComplexMatrix ul = u;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) ul(i, j) *= lam[j];
    const ComplexMatrix m = (ul * u.adjoint()).hermitian_part();
    const Inertia im = eig_inertia(m);

    double defect = 0.0;

    // (i) columns inside the range: some k0 > 0 preserves the inertia.
    const ComplexMatrix a = m * ginibre(n, 2, rng);
    double k = 1.0;
    bool preserved = false;
    for (int step = 0; step < 60; ++step) {
        if (eig_inertia(rank_downdate(m, a, k)) == im) {
            preserved = true;
            break;
        }
        k *= 0.5;
    }
    if (!preserved)
        defect += 1.0;
    else if (eig_inertia(rank_downdate(m, a, 0.5 * k)) != im ||
             eig_inertia(rank_downdate(m, a, 0.25 * k)) != im)
        defect += 1.0;

    // (ii) a column sticking out of the range raises i_- for every k.
    std::vector<cplx> kernel_dir = u.col(n - 1);
    auto v = matvec(m, random_vector(n, rng));
    ComplexMatrix a2(n, 1);
    for (std::size_t i = 0; i < n; ++i) a2(i, 0) = v[i] + kernel_dir[i];
    for (double kk : {1e-6, 1e-3, 1.0, 1e3}) {
        const Inertia in_k = eig_inertia(rank_downdate(m, a2, kk));
        if (in_k.neg <= im.neg) defect += 1.0;
    }
    return defect;
}

double trial_ker_trans(Rng& rng) {
    const BipartiteDims dims{3, 3};
    const std::size_t sample_rank = 4 + rng.below(6);
    ComplexMatrix m = sample_state(dims, sample_rank, rng);
    // Make the (1,2) block Hermitian (as a block), keeping M Hermitian
    // overall; the PSD-restoring diagonal shift below cancels in M^Γ - M.
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
            const cplx h = 0.5 * (m(k, 3 + l) + std::conj(m(l, 3 + k)));
            m(k, 3 + l) = h;
            m(l, 3 + k) = std::conj(h);
            m(3 + l, k) = std::conj(h);
            m(3 + k, l) = h;
        }
    m = m.hermitian_part();
    const auto eigs = hermitian_eigenvalues(m);
    const double shift = std::max(0.0, -eigs.front()) + 1e-6 * (1.0 + m.frobenius_norm());
    m += cplx{shift, 0.0} * ComplexMatrix::identity(9);

    const ComplexMatrix diff = (partial_transpose(m, dims) - m).hermitian_part();
    ComplexMatrix stack(6, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            stack(i, j) = std::conj(m(j, 6 + i)) - m(i, 6 + j);              // M13† - M13
            stack(3 + i, j) = std::conj(m(3 + j, 6 + i)) - m(3 + i, 6 + j);  // M23† - M23
        }
    const std::size_t r = stack.frobenius_norm() == 0.0 ? 0 : rank(stack, 1e-9);
    const Inertia id = eig_inertia(diff);
    double defect = 0.0;
    if (id.neg > 3) defect += double(id.neg - 3);
    if (id.neg != r || id.pos != r) defect += 1.0;
    return defect;
}

double trial_pro_in_ker(Rng& rng) {
    const BipartiteDims dims{3, 3};
    for (int attempt = 0; attempt < 25; ++attempt) {
        const auto beta = random_unit_vector(3, rng);
        const auto alpha = random_unit_vector(3, rng);
        const ComplexMatrix m = kernel_engineered_state(dims, beta, alpha, 3, 3, rng);
        const ComplexMatrix t = partial_transpose(m, dims);
        const EigenDecomposition ed = eig_hermitian(t);
        const double tau = 1e-9 * std::max(1.0, t.frobenius_norm());
        const Inertia in = classify_eigenvalues(ed.eigenvalues, tau);
        if (in.neg < 1 || in.zero < 1) continue;  // want a genuinely NPT draw

        // Product vectors in 2-dim slices of the nonpositive eigenspace must
        // be annihilated by M^Γ.
        const std::size_t k = in.neg + in.zero;
        std::vector<std::vector<cplx>> basis;
        for (std::size_t i = 0; i < k; ++i) basis.push_back(ed.eigenvectors.col(i));
        double worst = 0.0;
        bool any = false;
        const double scale = std::max(m.frobenius_norm(), 1e-300);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                PencilProductVectors found;
                try {
                    found = pencil_product_vectors(basis[i], basis[j], dims);
                } catch (const DependentInputs&) {
                    continue;
                }
                for (const auto& pv : found.vectors) {
                    any = true;
                    worst = std::max(worst, vec_norm(matvec(t, pv.ambient())) / scale);
                }
            }
        if (!any) continue;  // no product vector surfaced in this draw
        return worst / 1e-7;
    }
    return 0.0;  // no usable draw; abstain rather than fabricate a defect
}

double trial_ew_positive_count(Rng& rng) {
    const BipartiteDims dims{3, 3};
    const std::size_t rank_choice = 2 + rng.below(8);
    const ComplexMatrix m = sample_state(dims, rank_choice, rng);
    const Inertia in = eig_inertia(partial_transpose(m, dims));
    if (in.neg == 0) return 0.0;
    return in.pos >= 3 ? 0.0 : double(3 - in.pos);
}

const std::map<std::string, Suite>& registry() {
    static const std::map<std::string, Suite> suites = {
        {"product-tran",
         {1e-12, "relative Frobenius gap of the two transport routes", trial_product_tran}},
        {"vector-tran",
         {1.0, "max of part defects scaled by their tolerances (1e-12, 1e-8)", trial_vector_tran}},
        {"sumdif", {0.0, "total subadditivity violation across i_-, i_+", trial_sumdif}},
        {"projection", {0.0, "monotonicity violation of i_± under P·M·P†", trial_projection}},
        {"sub-lem", {0.0, "monotonicity violation for principal submatrices", trial_sub_lem}},
        {"cross-lem", {0.0, "mismatches between the rank formula and the eigensolver", trial_cross_lem}},
        {"det-lem", {0.0, "mismatches between the minor rule and the eigensolver", trial_det_lem}},
        {"negative-change",
         {0.0, "failed inertia preservation (small k) or missing strict i_- growth", trial_negative_change}},
        {"ker-trans",
         {0.0, "excess of i_-(M^Γ-M) over 3 or mismatch with the cross formula", trial_ker_trans}},
        {"pro-in-ker",
         {1.0, "worst ||M^Γ·w|| over found product vectors, relative to 1e-7·||M||_F", trial_pro_in_ker}},
        {"ew-positive-count", {0.0, "shortfall of i_+ below 3 for NPT samples", trial_ew_positive_count}},
    };
    return suites;
}

}  // namespace

std::vector<std::string> registered_lemmas() {
    std::vector<std::string> names;
    for (const auto& [name, suite] : registry()) names.push_back(name);
    return names;
}

ComplexMatrix kernel_engineered_state(BipartiteDims dims, std::span<const cplx> beta,
                                      std::span<const cplx> alpha, std::size_t perp_b,
                                      std::size_t perp_a, Rng& rng) {
    const std::size_t m = dims.dim_a;
    const std::size_t n = dims.dim_b;
    const std::size_t d = dims.product();
    if (beta.size() != m || alpha.size() != n)
        throw DimensionMismatch("kernel_engineered_state: factor lengths do not match dims");

    std::vector<cplx> beta_unit(beta.begin(), beta.end());
    std::vector<cplx> alpha_unit(alpha.begin(), alpha.end());
    normalize(beta_unit);
    normalize(alpha_unit);

    // x ⊥ conj(beta)⊗e_k kills the B-side factor of (xx†)^Γ·(beta⊗alpha);
    // x ⊥ e_j⊗alpha kills the A-side one. Either family alone suffices.
    std::vector<std::vector<cplx>> family_b, family_a;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<cplx> v(d, cplx{0.0, 0.0});
        for (std::size_t j = 0; j < m; ++j) v[j * n + k] = std::conj(beta_unit[j]);
        family_b.push_back(std::move(v));
    }
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<cplx> v(d, cplx{0.0, 0.0});
        for (std::size_t k = 0; k < n; ++k) v[j * n + k] = alpha_unit[k];
        family_a.push_back(std::move(v));
    }
    const auto basis_b = orthonormal_family(family_b);
    const auto basis_a = orthonormal_family(family_a);

    ComplexMatrix state(d, d);
    auto add_terms = [&](const std::vector<std::vector<cplx>>& against, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            auto x = random_vector(d, rng);
            project_out(x, against);
            if (vec_norm(x) < 1e-6) {
                --i;
                continue;
            }
            normalize(x);
            state += rank_one(x, rng.uniform(0.2, 1.0));
        }
    };
    add_terms(basis_b, perp_b);
    add_terms(basis_a, perp_a);

    const double tr = state.trace().real();
    if (tr > 1e-300) state *= cplx{1.0 / tr, 0.0};
    return state.hermitian_part();
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
    ComplexMatrix u(n, n);
    std::vector<std::vector<cplx>> cols;
    while (cols.size() < n) {
        auto v = random_vector(n, rng);
        project_out(v, cols);
        if (vec_norm(v) < 1e-6) continue;
        normalize(v);
        cols.push_back(std::move(v));
    }
    for (std::size_t j = 0; j < n; ++j) u.set_col(j, cols[j]);
    return u;
}

VerificationReport verify_lemma(const std::string& name, std::size_t trials, std::uint64_t seed) {
    const auto& suites = registry();
    const auto it = suites.find(name);
    if (it == suites.end()) throw UnknownLemma("unknown lemma suite: " + name);
    const Suite& suite = it->second;

    VerificationReport report;
    report.lemma = name;
    report.trials = trials;
    report.tolerance = suite.tolerance;
    report.defect_meaning = suite.defect_meaning;

    std::vector<double> defects(trials, 0.0);
    const std::uint64_t stream_base = seed ^ fnv1a(name);
    parallel_for(trials, [&](std::size_t i) {
        Rng rng = Rng::stream(stream_base, i);
        defects[i] = suite.trial(rng);
    });
    for (double d : defects) {
        report.worst_defect = std::max(report.worst_defect, d);
        if (d > suite.tolerance)
            ++report.failures;
        else
            ++report.passes;
    }
    return report;
}

}  // namespace inertia
