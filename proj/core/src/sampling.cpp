#include "inertia/sampling.hpp"

#include <mutex>

#include "inertia/eig.hpp"
#include "inertia/errors.hpp"
#include "inertia/parallel.hpp"

namespace inertia {

ComplexMatrix sample_state(BipartiteDims dims, std::size_t rank, Rng& rng) {
    const std::size_t d = dims.product();
    if (rank < 1 || rank > d) throw BadRank("sample_state: rank must be in [1, dim_a*dim_b]");
    const ComplexMatrix g = ginibre(d, rank, rng);
    ComplexMatrix m = g * g.adjoint();
    const double tr = m.trace().real();
    m *= cplx{1.0 / tr, 0.0};
    return m.hermitian_part();
}

ComplexMatrix sample_state(BipartiteDims dims, std::size_t rank, std::uint64_t seed) {
    Rng rng = Rng::stream(seed, 0);
    return sample_state(dims, rank, rng);
}

std::map<Inertia, std::size_t> inertia_census(BipartiteDims dims, const CensusOptions& opts) {
    const std::size_t d = dims.product();
    std::vector<std::size_t> schedule = opts.rank_schedule;
    if (schedule.empty()) {
        schedule.push_back(d);
        if (d > 1) schedule.push_back(d - 1);
        if (d > 2) schedule.push_back(d - 2);
    }
    for (std::size_t r : schedule)
        if (r < 1 || r > d) throw BadRank("inertia_census: rank schedule entry out of range");

    std::map<Inertia, std::size_t> histogram;
    std::mutex merge_mutex;
    // Chunked so each worker merges rarely; per-sample streams keep the
    // result independent of the partitioning.
    const std::size_t chunk = 256;
    const std::size_t chunks = (opts.samples + chunk - 1) / chunk;
    parallel_for(chunks, [&](std::size_t ci) {
        std::map<Inertia, std::size_t> local;
        const std::size_t begin = ci * chunk;
        const std::size_t end = std::min(opts.samples, begin + chunk);
        for (std::size_t i = begin; i < end; ++i) {
            Rng rng = Rng::stream(opts.seed, i);
            const ComplexMatrix m = sample_state(dims, schedule[i % schedule.size()], rng);
            const Inertia in = inertia_of(partial_transpose(m, dims), opts.zero_tol);
            ++local[in];
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (const auto& [in, count] : local) histogram[in] += count;
    });
    return histogram;
}

}  // namespace inertia
