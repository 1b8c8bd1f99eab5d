#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "gft/complex.hpp"

namespace gft {

/// Seeded mt19937_64 with explicit double mappings. The engine's output
/// sequence is pinned by the standard, so results are reproducible across
/// implementations (library distributions are not, and are avoided).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    int uniform_int(int a, int b) { // inclusive range
        return a + static_cast<int>(eng_() % static_cast<std::uint64_t>(b - a + 1));
    }

    double exponential() { return -std::log1p(-uniform01()); }

    Complex on_circle() { return std::polar(1.0, uniform(-kPi, kPi)); }

    /// Uniform modulus in [0, r_max], uniform argument.
    Complex in_disk(double r_max) { return std::polar(r_max * uniform01(), uniform(-kPi, kPi)); }

private:
    std::mt19937_64 eng_;
};

} // namespace gft
