// SPDX-License-Identifier: Apache-2.0
//
// Seeded RNG used for noise injection and randomized tests. splitmix64 plus
// an explicit Box-Muller keeps noisy runs bit-reproducible across standard
// library implementations; std::normal_distribution is not portable that way.

#ifndef RIS_RNG_HPP
#define RIS_RNG_HPP

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace ris {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed)) {}

    std::uint64_t next_u64() {
        state_ = splitmix64(state_);
        return state_;
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + uniform() * (b - a); }

    // Standard normal, Box-Muller. One value per call; the cosine leg only,
    // so the stream stays a pure function of the draw index.
    double normal() {
        double u1 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    // Circularly-symmetric complex Gaussian with E|n|^2 = variance.
    std::complex<double> complex_normal(double variance) {
        const double s = std::sqrt(variance / 2.0);
        return {s * normal(), s * normal()};
    }

private:
    std::uint64_t state_;
};

// Stable per-grid-point seed: chain-mix the campaign seed, the configuration
// id and the scan direction so noise draws do not depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t campaign_seed, std::uint64_t config_id,
                                 double az_deg, double el_deg) {
    std::uint64_t h = splitmix64(campaign_seed);
    h = splitmix64(h ^ config_id);
    h = splitmix64(h ^ std::bit_cast<std::uint64_t>(az_deg));
    h = splitmix64(h ^ std::bit_cast<std::uint64_t>(el_deg));
    return h;
}

}  // namespace ris

#endif
