#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "inertia/bipartite.hpp"
#include "inertia/complex_matrix.hpp"

namespace inertia {

struct SearchConfig {
    BipartiteDims dims;
    Inertia target;
    std::size_t restarts = 50;
    std::size_t max_iters = 400;  // compass poll cycles per restart
    std::uint64_t seed = 0;
    double zero_tol = 1e-9;
    double margin = 1e-4;            // relative classification margin for nonzero classes
    double separation_ratio = 1e4;   // required margin / zero_tol gap

    /// Throws InvalidTarget when the target does not sum to dim_a*dim_b or the
    /// tolerance gap is inconsistent.
    void validate() const;
};

struct WitnessResult {
    enum class Status { found, not_found };

    Status status = Status::not_found;
    std::optional<ComplexMatrix> witness;  // PSD, unit trace when found
    Inertia achieved;                      // inertia of the best candidate's partial transpose
    double residual = 0.0;                 // final objective value of the best candidate
    std::size_t restarts_used = 0;

    bool found() const { return status == Status::found; }
};

/// Hinge objective of a candidate state: sorted eigenvalues of M^Γ are scored
/// against the target slot pattern with the relative margin. Zero exactly on
/// certifiable spectra.
double search_objective(const ComplexMatrix& state, BipartiteDims dims, const Inertia& target,
                        double margin);

/// Full from-scratch certification: Hermitian, PSD within -1e-10 relative,
/// eigenvalues of the partial transpose match the target with every zero
/// class below zero_tol and every nonzero class beyond margin. Returns an
/// explanation on failure.
std::optional<std::string> certify_witness(const ComplexMatrix& witness, const SearchConfig& cfg);

/// Objective scale below which a candidate could certify; reports compare the
/// best residual of failed searches against a multiple of this.
double certification_threshold(const SearchConfig& cfg);

/// Derivative-free search (compass polling over the 2·d² real parameters of a
/// square Gram factor, random restarts, spectral polishing) for a state whose
/// partial transpose realizes the target inertia. Deterministic for a fixed
/// config, independent of the thread count.
WitnessResult target_inertia_search(const SearchConfig& cfg);

}  // namespace inertia
