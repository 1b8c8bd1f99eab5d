#pragma once

#include <cmath>
#include <complex>

#include "gft/errors.hpp"

namespace gft {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* what) {
    if (!is_finite(z)) throw DomainError(what);
}

inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(what);
}

} // namespace gft
