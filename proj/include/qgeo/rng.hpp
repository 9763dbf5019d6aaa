#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qgeo {

// Deterministic random source. mt19937_64 gives a fixed bit stream for a
// fixed seed on every platform; the distribution classes in <random> do not,
// so the mapping from bits to doubles is done here by hand. Everything that
// consumes randomness in this project goes through this wrapper so reruns
// are reproducible to the byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1) with 53 bits of mantissa
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller; one value per call, no caching, so the
    // stream position is a simple function of the call count
    double gaussian() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace qgeo
