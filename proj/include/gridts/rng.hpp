#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace gridts {

/// Deterministic random source for synthetic series and fixtures.
///
/// The algorithm is pinned so fixtures can be regenerated bit-identically:
/// a Mersenne Twister (mt19937_64, as specified in the C++ standard) feeds
/// 53-bit uniforms in [0,1), and normals come from the basic Box-Muller
/// transform. No library distribution objects are used, since their output
/// sequences are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw in [0, 1) with 53 random mantissa bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal draw via Box-Muller; pairs are generated together
    /// and the second value is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01(); // (0, 1], keeps log() finite
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace gridts
