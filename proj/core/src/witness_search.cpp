#include "inertia/witness_search.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "inertia/eig.hpp"
#include "inertia/errors.hpp"
#include "inertia/parallel.hpp"
#include "inertia/rng.hpp"
#include "inertia/sampling.hpp"

namespace inertia {

namespace {

struct SpectrumScore {
    double value = 0.0;        // full hinge objective
    bool signs_ok = false;     // every nonzero-slot hinge is inactive
    double max_zero = 0.0;     // largest |eigenvalue| in a zero slot
    double scale = 0.0;        // ||M^Γ||_F
};

SpectrumScore score_spectrum(const std::vector<double>& mu, const Inertia& target, double margin) {
    SpectrumScore s;
    double f2 = 0.0;
    for (double m : mu) f2 += m * m;
    s.scale = std::sqrt(f2);
    const double mabs = margin * s.scale;
    const std::size_t a = target.neg;
    const std::size_t b = target.zero;
    double hinge = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i < a) {
            const double v = std::max(0.0, mu[i] + mabs);
            s.value += v * v;
            hinge += v;
        } else if (i < a + b) {
            s.value += mu[i] * mu[i];
            s.max_zero = std::max(s.max_zero, std::abs(mu[i]));
        } else {
            const double v = std::max(0.0, mabs - mu[i]);
            s.value += v * v;
            hinge += v;
        }
    }
    s.signs_ok = hinge == 0.0;
    return s;
}

class Objective {
  public:
    Objective(BipartiteDims dims, Inertia target, double margin)
        : dims_(dims), target_(target), margin_(margin), d_(dims.product()) {}

    std::size_t parameter_count() const { return 2 * d_ * d_; }

    ComplexMatrix state_from(const std::vector<double>& params) const {
        ComplexMatrix l(d_, d_);
        auto e = l.entries();
        for (std::size_t k = 0; k < d_ * d_; ++k) e[k] = cplx{params[2 * k], params[2 * k + 1]};
        ComplexMatrix m = l * l.adjoint();
        const double tr = m.trace().real();
        if (!(tr > 1e-14)) return ComplexMatrix();
        m *= cplx{1.0 / tr, 0.0};
        return m.hermitian_part();
    }

    static std::vector<double> params_from(const ComplexMatrix& state) {
        const EigenDecomposition ed = eig_hermitian(state);
        const std::size_t d = state.rows();
        ComplexMatrix l = ed.eigenvectors;
        for (std::size_t j = 0; j < d; ++j) {
            const double s = std::sqrt(std::max(0.0, ed.eigenvalues[j]));
            for (std::size_t i = 0; i < d; ++i) l(i, j) *= s;
        }
        std::vector<double> params(2 * d * d);
        auto e = l.entries();
        for (std::size_t k = 0; k < d * d; ++k) {
            params[2 * k] = e[k].real();
            params[2 * k + 1] = e[k].imag();
        }
        return params;
    }

    SpectrumScore eval(const std::vector<double>& params) const {
        const ComplexMatrix m = state_from(params);
        if (m.empty()) {
            SpectrumScore bad;
            bad.value = 1e9;
            return bad;
        }
        const auto mu = hermitian_eigenvalues(partial_transpose(m, dims_));
        return score_spectrum(mu, target_, margin_);
    }

    double margin() const { return margin_; }
    const Inertia& target() const { return target_; }
    BipartiteDims dims() const { return dims_; }

  private:
    BipartiteDims dims_;
    Inertia target_;
    double margin_;
    std::size_t d_;
};

// Alternating spectral projections: clamp the sorted spectrum of M^Γ onto the
// target slot pattern, then project back onto the trace-one PSD cone.
// Succeeds only near a feasible point; the caller re-certifies from scratch.
ComplexMatrix polish_state(ComplexMatrix m, const SearchConfig& cfg) {
    const std::size_t a = cfg.target.neg;
    const std::size_t b = cfg.target.zero;
    for (int iter = 0; iter < 60; ++iter) {
        const ComplexMatrix t = partial_transpose(m, cfg.dims);
        EigenDecomposition ed = eig_hermitian(t);
        const double scale = t.frobenius_norm();
        const double mabs = cfg.margin * scale;
        double delta1 = 0.0;
        std::vector<double> clamped = ed.eigenvalues;
        for (std::size_t i = 0; i < clamped.size(); ++i) {
            double v = clamped[i];
            if (i < a)
                v = std::min(v, -1.02 * mabs);
            else if (i < a + b)
                v = 0.0;
            else
                v = std::max(v, 1.02 * mabs);
            delta1 = std::max(delta1, std::abs(v - clamped[i]));
            clamped[i] = v;
        }
        ed.eigenvalues = clamped;
        m = partial_transpose(ed.reconstruct(), cfg.dims).hermitian_part();

        EigenDecomposition em = eig_hermitian(m);
        double delta2 = 0.0;
        for (double& v : em.eigenvalues) {
            if (v < 0.0) {
                delta2 = std::max(delta2, -v);
                v = 0.0;
            }
        }
        m = em.reconstruct().hermitian_part();
        const double tr = m.trace().real();
        if (!(tr > 1e-14)) return m;
        m *= cplx{1.0 / tr, 0.0};

        if (delta1 <= 1e-13 * scale && delta2 <= 1e-13 * scale) break;
    }
    return m;
}

struct RestartOutcome {
    bool certified = false;
    ComplexMatrix witness;
    Inertia achieved;
    double residual = 1e18;
};

// A spread of initial states: Ginibre draws of several ranks, mixtures of
// Schmidt-limited pure states, and lower-dimensional corner states. These are
// starting points only; certification never depends on how a candidate arose.
ComplexMatrix initial_candidate(std::size_t flavor, const SearchConfig& cfg, Rng& rng) {
    const std::size_t da = cfg.dims.dim_a;
    const std::size_t db = cfg.dims.dim_b;
    const std::size_t d = cfg.dims.product();
    const std::size_t smax = std::min(da, db);

    auto pure_state = [&](std::size_t schmidt) {
        std::vector<cplx> x(d, cplx{0.0, 0.0});
        for (std::size_t s = 0; s < schmidt; ++s) {
            const auto u = random_vector(da, rng);
            const auto w = random_vector(db, rng);
            const auto term = kron_vec(u, w);
            for (std::size_t i = 0; i < d; ++i) x[i] += term[i];
        }
        normalize(x);
        ComplexMatrix p(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) p(i, j) = x[i] * std::conj(x[j]);
        return p;
    };
    auto mixture = [&](const std::vector<std::size_t>& schmidts) {
        ComplexMatrix m(d, d);
        for (std::size_t s : schmidts) {
            const double w = rng.uniform(0.2, 1.0);
            m += cplx{w, 0.0} * pure_state(s);
        }
        const double tr = m.trace().real();
        m *= cplx{1.0 / tr, 0.0};
        return m.hermitian_part();
    };

    switch (flavor % 6) {
        case 0:
            return sample_state(cfg.dims, d, rng);
        case 1:
            return sample_state(cfg.dims, 1 + rng.below(d), rng);
        case 2: {
            // target.neg entangled components plus enough products to reach
            // rank d - target.zero.
            std::vector<std::size_t> parts;
            const std::size_t ent = std::max<std::size_t>(1, std::min(cfg.target.neg, d / 4));
            for (std::size_t i = 0; i < ent; ++i) parts.push_back(std::min<std::size_t>(2, smax));
            const std::size_t used = 4 * ent;
            const std::size_t want = d > cfg.target.zero ? d - cfg.target.zero : 1;
            for (std::size_t i = used; i < want; ++i) parts.push_back(1);
            return mixture(parts);
        }
        case 3: {
            // State supported on a 2 x db corner of system A, plus products.
            ComplexMatrix m(d, d);
            if (da >= 2) {
                const std::size_t corner = 2 * db;
                const std::size_t corner_rank = 1 + rng.below(corner);
                const ComplexMatrix s = sample_state(BipartiteDims{2, db}, corner_rank, rng);
                for (std::size_t i = 0; i < corner; ++i)
                    for (std::size_t j = 0; j < corner; ++j) m(i, j) = s(i, j);
            } else {
                return sample_state(cfg.dims, d, rng);
            }
            const std::size_t extra = rng.below(4);
            for (std::size_t i = 0; i < extra; ++i)
                m += cplx{rng.uniform(0.2, 1.0), 0.0} * pure_state(1);
            const double tr = m.trace().real();
            m *= cplx{1.0 / tr, 0.0};
            return m.hermitian_part();
        }
        case 4: {
            std::vector<std::size_t> parts;
            const std::size_t count = 1 + rng.below(4);
            for (std::size_t i = 0; i < count; ++i) parts.push_back(1 + rng.below(smax));
            return mixture(parts);
        }
        default: {
            // Nearly diagonal start, useful for positivity-heavy targets.
            ComplexMatrix m(d, d);
            for (std::size_t i = 0; i < d; ++i) m(i, i) = rng.uniform(0.05, 1.0);
            const ComplexMatrix g = ginibre(d, d, rng);
            m += cplx{0.05, 0.0} * (g * g.adjoint());
            const double tr = m.trace().real();
            m *= cplx{1.0 / tr, 0.0};
            return m.hermitian_part();
        }
    }
}

RestartOutcome run_restart(std::size_t restart_index, const SearchConfig& cfg) {
    Rng rng = Rng::stream(cfg.seed, restart_index + 1);
    const Objective obj(cfg.dims, cfg.target, cfg.margin);

    RestartOutcome out;

    auto consider_polish = [&](const std::vector<double>& params) -> bool {
        const ComplexMatrix raw = obj.state_from(params);
        if (raw.empty()) return false;
        const ComplexMatrix polished = polish_state(raw, cfg);
        const double f = search_objective(polished, cfg.dims, cfg.target, cfg.margin);
        if (f < out.residual) {
            out.residual = f;
            out.achieved = inertia_of(partial_transpose(polished, cfg.dims), cfg.zero_tol);
            out.witness = polished;
        }
        if (!certify_witness(polished, cfg)) {
            out.certified = true;
            out.witness = polished;
            out.residual = f;
            out.achieved = cfg.target;
            return true;
        }
        return false;
    };

    // Pick the best of a handful of structured starts.
    std::vector<double> x;
    SpectrumScore best_score;
    for (std::size_t flavor = 0; flavor < 6; ++flavor) {
        auto params = Objective::params_from(initial_candidate(6 * restart_index + flavor, cfg, rng));
        const SpectrumScore s = obj.eval(params);
        if (x.empty() || s.value < best_score.value) {
            x = std::move(params);
            best_score = s;
        }
    }

    // Gauge fix: the objective is invariant under scaling of the factor.
    {
        double n2 = 0.0;
        for (double v : x) n2 += v * v;
        const double inv = 1.0 / std::sqrt(std::max(n2, 1e-300));
        for (double& v : x) v *= inv;
        best_score = obj.eval(x);
    }

    const std::size_t n = obj.parameter_count();
    double step = 0.08;
    std::size_t rotate = 0;
    double last_polish_trigger = 1e18;
    int polish_budget = 12;

    auto maybe_polish = [&](const SpectrumScore& s) -> bool {
        if (polish_budget <= 0) return false;
        if (!s.signs_ok) return false;
        if (s.max_zero > 0.3 * cfg.margin * s.scale) return false;
        if (s.value > 0.5 * last_polish_trigger) return false;
        --polish_budget;
        last_polish_trigger = s.value;
        return consider_polish(x);
    };

    if (maybe_polish(best_score)) return out;

    for (std::size_t iter = 0; iter < cfg.max_iters; ++iter) {
        bool improved = false;
        for (std::size_t k = 0; k < 2 * n; ++k) {
            const std::size_t probe = (k + rotate) % (2 * n);
            const std::size_t coord = probe / 2;
            const double delta = (probe % 2 == 0) ? step : -step;
            x[coord] += delta;
            const SpectrumScore s = obj.eval(x);
            if (s.value + 1e-18 < best_score.value) {
                best_score = s;
                improved = true;
                rotate = probe;
                if (maybe_polish(s)) return out;
                break;
            }
            x[coord] -= delta;
        }
        if (!improved) {
            step *= 0.5;
            if (step < 1e-8) break;
        }
    }

    // Final attempt from the converged point.
    if (best_score.signs_ok || best_score.value < 1e-4) consider_polish(x);
    if (!out.certified) {
        if (best_score.value < out.residual) {
            const ComplexMatrix m = obj.state_from(x);
            if (!m.empty()) {
                out.residual = best_score.value;
                out.achieved = inertia_of(partial_transpose(m, cfg.dims), cfg.zero_tol);
                out.witness = m;
            }
        }
    }
    return out;
}

}  // namespace

void SearchConfig::validate() const {
    if (dims.dim_a < 1 || dims.dim_b < 1)
        throw DimensionMismatch("search: dims must be at least 1x1");
    if (target.order() != dims.product())
        throw InvalidTarget("search: target inertia must sum to dim_a*dim_b");
    if (!(margin > zero_tol * separation_ratio))
        throw InvalidTarget("search: margin must exceed zero_tol * separation_ratio");
    if (restarts < 1) throw InvalidTarget("search: at least one restart is required");
}

double search_objective(const ComplexMatrix& state, BipartiteDims dims, const Inertia& target,
                        double margin) {
    const auto mu = hermitian_eigenvalues(partial_transpose(state, dims));
    return score_spectrum(mu, target, margin).value;
}

std::optional<std::string> certify_witness(const ComplexMatrix& witness, const SearchConfig& cfg) {
    const std::size_t d = cfg.dims.product();
    if (!witness.square() || witness.rows() != d) return "witness has the wrong order";
    if (!witness.is_hermitian()) return "witness is not Hermitian";
    const double scale = witness.frobenius_norm();
    if (!(scale > 0.0)) return "witness is zero";

    const auto lam = hermitian_eigenvalues(witness);
    if (lam.front() < -1e-10 * scale) return "witness is not positive semidefinite";

    const ComplexMatrix t = partial_transpose(witness, cfg.dims);
    const auto mu = hermitian_eigenvalues(t);
    const double u = t.frobenius_norm();
    const double mabs = cfg.margin * u;
    const double zabs = cfg.zero_tol * u;
    const std::size_t a = cfg.target.neg;
    const std::size_t b = cfg.target.zero;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i < a) {
            if (!(mu[i] <= -mabs)) return "a negative-slot eigenvalue misses the margin";
        } else if (i < a + b) {
            if (!(std::abs(mu[i]) <= zabs)) return "a zero-slot eigenvalue is not zero";
        } else {
            if (!(mu[i] >= mabs)) return "a positive-slot eigenvalue misses the margin";
        }
    }
    return std::nullopt;
}

double certification_threshold(const SearchConfig& cfg) {
    const double z = cfg.zero_tol;
    return static_cast<double>(cfg.dims.product()) * z * z;
}

WitnessResult target_inertia_search(const SearchConfig& cfg) {
    cfg.validate();

    std::vector<RestartOutcome> outcomes(cfg.restarts);
    std::vector<char> done(cfg.restarts, 0);
    const std::size_t block = std::max<std::size_t>(1, thread_budget());

    std::size_t executed = 0;
    std::size_t found_at = cfg.restarts;
    for (std::size_t begin = 0; begin < cfg.restarts && found_at == cfg.restarts; begin += block) {
        const std::size_t end = std::min(cfg.restarts, begin + block);
        parallel_for(end - begin, [&](std::size_t k) {
            const std::size_t idx = begin + k;
            outcomes[idx] = run_restart(idx, cfg);
            done[idx] = 1;
        });
        executed = end;
        for (std::size_t i = begin; i < end; ++i) {
            if (outcomes[i].certified) {
                found_at = i;
                break;
            }
        }
    }

    WitnessResult result;
    if (found_at < cfg.restarts) {
        const RestartOutcome& win = outcomes[found_at];
        result.status = WitnessResult::Status::found;
        result.witness = win.witness;
        result.achieved = win.achieved;
        result.residual = win.residual;
        result.restarts_used = found_at + 1;
        return result;
    }

    result.status = WitnessResult::Status::not_found;
    result.restarts_used = executed;
    double best = 1e18;
    for (std::size_t i = 0; i < executed; ++i) {
        if (done[i] && outcomes[i].residual < best) {
            best = outcomes[i].residual;
            result.achieved = outcomes[i].achieved;
        }
    }
    result.residual = best;
    return result;
}

}  // namespace inertia
