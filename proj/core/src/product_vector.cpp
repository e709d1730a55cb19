#include "inertia/product_vector.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "inertia/errors.hpp"
#include "inertia/svd.hpp"

namespace inertia {

namespace {

ComplexMatrix reshape(std::span<const cplx> v, BipartiteDims dims) {
    ComplexMatrix x(dims.dim_a, dims.dim_b);
    for (std::size_t i = 0; i < dims.dim_a; ++i)
        for (std::size_t k = 0; k < dims.dim_b; ++k) x(i, k) = v[i * dims.dim_b + k];
    return x;
}

struct Quadratic {
    cplx c0, c1, c2;  // c0 + c1*λ + c2*λ²
    cplx eval(cplx lambda) const { return c0 + lambda * (c1 + lambda * c2); }
    double scale() const { return std::max({std::abs(c0), std::abs(c1), std::abs(c2)}); }
};

std::vector<Quadratic> minor_quadratics(const ComplexMatrix& a, const ComplexMatrix& b) {
    std::vector<Quadratic> qs;
    for (std::size_t r1 = 0; r1 + 1 < a.rows(); ++r1)
        for (std::size_t r2 = r1 + 1; r2 < a.rows(); ++r2)
            for (std::size_t c1 = 0; c1 + 1 < a.cols(); ++c1)
                for (std::size_t c2 = c1 + 1; c2 < a.cols(); ++c2) {
                    Quadratic q;
                    q.c0 = a(r1, c1) * a(r2, c2) - a(r1, c2) * a(r2, c1);
                    q.c2 = b(r1, c1) * b(r2, c2) - b(r1, c2) * b(r2, c1);
                    q.c1 = a(r1, c1) * b(r2, c2) + b(r1, c1) * a(r2, c2) -
                           a(r1, c2) * b(r2, c1) - b(r1, c2) * a(r2, c1);
                    qs.push_back(q);
                }
    return qs;
}

// Both roots of c2 λ² + c1 λ + c0 with the usual cancellation-safe split.
std::array<cplx, 2> quadratic_roots(const Quadratic& q) {
    const cplx disc = std::sqrt(q.c1 * q.c1 - 4.0 * q.c2 * q.c0);
    const cplx s1 = -q.c1 + disc;
    const cplx s2 = -q.c1 - disc;
    const cplx s = std::abs(s1) >= std::abs(s2) ? s1 : s2;
    if (std::abs(s) == 0.0) return {cplx{0.0, 0.0}, cplx{0.0, 0.0}};
    const cplx r1 = s / (2.0 * q.c2);
    const cplx r2 = (2.0 * q.c0) / s;
    return {r1, r2};
}

bool same_direction(const ProductVector& x, const ProductVector& y) {
    const auto vx = x.ambient();
    const auto vy = y.ambient();
    return std::abs(vec_dot(vx, vy)) >= 1.0 - 1e-8;
}

}  // namespace

double ProductVector::reconstruction_defect(std::span<const cplx> v) const {
    std::vector<cplx> unit(v.begin(), v.end());
    normalize(unit);
    const auto w = ambient();
    const cplx overlap = vec_dot(w, unit);
    // Optimal phase alignment, computed as a direct residual to keep full
    // precision near zero.
    const cplx phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx{1.0, 0.0};
    double r2 = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) r2 += std::norm(phase * w[i] - unit[i]);
    return std::sqrt(r2);
}

std::optional<ProductVector> is_product_vector(std::span<const cplx> v, BipartiteDims dims,
                                               double tol) {
    if (v.size() != dims.product())
        throw DimensionMismatch("is_product_vector: length must equal dim_a * dim_b");
    if (vec_norm(v) < 1e-300) throw ZeroVector("is_product_vector: zero input");

    const SvdDecomposition d = svd(reshape(v, dims));
    const double s1 = d.singular_values[0];
    const double s2 = d.singular_values.size() > 1 ? d.singular_values[1] : 0.0;
    if (s2 > tol * s1) return std::nullopt;

    ProductVector pv;
    pv.beta = d.u.col(0);
    pv.alpha = d.v.row(0);  // M = U·Σ·V, so X(i,k) ≈ s1 · u(i,0) · v(0,k)
    canonicalize_phase(pv.beta);
    canonicalize_phase(pv.alpha);
    return pv;
}

PencilProductVectors pencil_product_vectors(std::span<const cplx> v1, std::span<const cplx> v2,
                                            BipartiteDims dims) {
    if (v1.size() != dims.product() || v2.size() != dims.product())
        throw DimensionMismatch("pencil_product_vectors: lengths must equal dim_a * dim_b");
    if (std::min(dims.dim_a, dims.dim_b) > 3)
        throw DimensionMismatch("pencil_product_vectors: min(dim_a, dim_b) must be <= 3");

    std::vector<cplx> w1(v1.begin(), v1.end());
    std::vector<cplx> w2(v2.begin(), v2.end());
    normalize(w1);
    normalize(w2);
    if (1.0 - std::abs(vec_dot(w1, w2)) < 1e-12)
        throw DependentInputs("pencil_product_vectors: inputs are linearly dependent");

    const ComplexMatrix a = reshape(w1, dims);
    const ComplexMatrix b = reshape(w2, dims);
    const auto quads = minor_quadratics(a, b);

    PencilProductVectors out;
    // A 1 x n or m x 1 reshape has no 2x2 minors: every member is product.
    double coef_scale = 0.0;
    for (const auto& q : quads) coef_scale = std::max(coef_scale, q.scale());
    if (quads.empty() || coef_scale <= 1e-12) {
        out.product_line = true;
        if (auto p1 = is_product_vector(w1, dims, 1e-7)) out.vectors.push_back(*p1);
        if (auto p2 = is_product_vector(w2, dims, 1e-7)) out.vectors.push_back(*p2);
        return out;
    }

    std::vector<cplx> candidates;
    bool infinity_candidate = false;

    double best_c2 = 0.0;
    const Quadratic* lead = nullptr;
    for (const auto& q : quads)
        if (std::abs(q.c2) > best_c2) {
            best_c2 = std::abs(q.c2);
            lead = &q;
        }
    if (lead && best_c2 > 1e-10 * coef_scale) {
        for (cplx r : quadratic_roots(*lead)) candidates.push_back(r);
    } else {
        // All λ² coefficients vanish: B itself is rank <= 1 (λ=∞), and the
        // minors degenerate to linear constraints.
        infinity_candidate = true;
        double best_c1 = 0.0;
        const Quadratic* lin = nullptr;
        for (const auto& q : quads)
            if (std::abs(q.c1) > best_c1) {
                best_c1 = std::abs(q.c1);
                lin = &q;
            }
        if (lin && best_c1 > 1e-10 * coef_scale) candidates.push_back(-lin->c0 / lin->c1);
    }

    // Deduplicate λ candidates.
    std::vector<cplx> lambdas;
    for (cplx l : candidates) {
        bool dup = false;
        for (cplx seen : lambdas)
            if (std::abs(l - seen) <= 1e-8 * (1.0 + std::abs(seen))) dup = true;
        if (!dup) lambdas.push_back(l);
    }

    for (cplx l : lambdas) {
        // Remaining minors act as filters.
        bool ok = true;
        const double growth = (1.0 + std::abs(l)) * (1.0 + std::abs(l));
        for (const auto& q : quads)
            if (std::abs(q.eval(l)) > 1e-7 * std::max(q.scale(), 1e-3 * coef_scale) * growth) ok = false;
        if (!ok) continue;
        std::vector<cplx> w(w1.size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = w1[i] + l * w2[i];
        if (vec_norm(w) < 1e-10) continue;
        if (auto pv = is_product_vector(w, dims, 1e-7)) {
            bool dup = false;
            for (const auto& got : out.vectors)
                if (same_direction(*pv, got)) dup = true;
            if (!dup) out.vectors.push_back(*pv);
        }
    }
    if (infinity_candidate) {
        if (auto pv = is_product_vector(w2, dims, 1e-7)) {
            bool dup = false;
            for (const auto& got : out.vectors)
                if (same_direction(*pv, got)) dup = true;
            if (!dup) out.vectors.push_back(*pv);
        }
    }
    return out;
}

}  // namespace inertia
