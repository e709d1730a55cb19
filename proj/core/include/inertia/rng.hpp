#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "inertia/complex_matrix.hpp"

namespace inertia {

// Reproducibility is a hard contract here (same seed -> bit-identical draws,
// independent streams per parallel task), so the generator is self-contained
// rather than built on std::<random> distributions, whose output is
// implementation-defined.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xoshiro256++ with Box-Muller Gaussian sampling.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& s : state_) s = splitmix64(sm);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    /// Independent stream for parallel task `index` under a common user seed.
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t sm = seed ^ (0xD1B54A32D192ED03ULL * (index + 1));
        return Rng(splitmix64(sm));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in (0, 1].
    double uniform01() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    cplx complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4] = {};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// rows x cols matrix with i.i.d. standard complex Gaussian entries.
inline ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
    ComplexMatrix g(rows, cols);
    for (cplx& v : g.entries()) v = rng.complex_gaussian();
    return g;
}

/// Random Hermitian matrix (G + G†)/2 with Ginibre G.
inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
    return ginibre(n, n, rng).hermitian_part();
}

inline std::vector<cplx> random_vector(std::size_t n, Rng& rng) {
    std::vector<cplx> v(n);
    for (cplx& x : v) x = rng.complex_gaussian();
    return v;
}

inline std::vector<cplx> random_unit_vector(std::size_t n, Rng& rng) {
    auto v = random_vector(n, rng);
    normalize(v);
    return v;
}

}  // namespace inertia
