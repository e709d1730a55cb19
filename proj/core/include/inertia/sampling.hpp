#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "inertia/bipartite.hpp"
#include "inertia/complex_matrix.hpp"
#include "inertia/rng.hpp"

namespace inertia {

/// Random PSD state of the given rank: G·G† with G an (m·n) x rank standard
/// complex Gaussian draw, normalized to unit trace. Bit-identical replay per
/// seed. Throws BadRank.
ComplexMatrix sample_state(BipartiteDims dims, std::size_t rank, std::uint64_t seed);

/// Same draw from a caller-owned stream (used by the census and the search).
ComplexMatrix sample_state(BipartiteDims dims, std::size_t rank, Rng& rng);

struct CensusOptions {
    std::size_t samples = 10000;
    std::vector<std::size_t> rank_schedule;  // cycled; empty -> {d, d-1, d-2}
    std::uint64_t seed = 0;
    double zero_tol = 1e-9;
};

/// Histogram of inertia(sample^Γ) over random states; sample i uses the
/// derived stream (seed, i), so the histogram is independent of the thread
/// count. Counts sum to `samples`.
std::map<Inertia, std::size_t> inertia_census(BipartiteDims dims, const CensusOptions& opts);

}  // namespace inertia
