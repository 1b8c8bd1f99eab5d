#pragma once

#include <cmath>

#include "gft/complex.hpp"
#include "gft/errors.hpp"

namespace gft {

/// The conic region u > k sqrt((u-1)^2 + v^2) + gamma in the w = u + iv plane.
struct ConicSpec {
    double k;
    double gamma;

    ConicSpec(double k_, double gamma_) : k(k_), gamma(gamma_) {
        require_finite(k, "k must be finite");
        require_finite(gamma, "gamma must be finite");
        if (k < 0.0) throw DomainError("k must satisfy k >= 0");
        if (gamma < 0.0 || gamma >= 1.0) throw DomainError("gamma must lie in [0, 1)");
    }
};

enum class ConicClass { HalfPlane, Hyperbolic, Parabolic, Elliptic };

inline const char* to_string(ConicClass c) {
    switch (c) {
        case ConicClass::HalfPlane: return "half-plane";
        case ConicClass::Hyperbolic: return "hyperbolic";
        case ConicClass::Parabolic: return "parabolic";
        case ConicClass::Elliptic: return "elliptic";
    }
    return "unknown";
}

/// k = 0 degenerates to the half plane u > gamma; otherwise the boundary is
/// a hyperbola (k < 1), parabola (k = 1), or ellipse (k > 1).
inline ConicClass classify(const ConicSpec& c) {
    if (c.k == 0.0) return ConicClass::HalfPlane;
    if (c.k < 1.0) return ConicClass::Hyperbolic;
    if (c.k == 1.0) return ConicClass::Parabolic;
    return ConicClass::Elliptic;
}

inline bool contains(const ConicSpec& c, Complex w) {
    require_finite(w, "point must be finite");
    const double u = w.real();
    const double v = w.imag();
    return u > c.k * std::sqrt((u - 1.0) * (u - 1.0) + v * v) + c.gamma;
}

struct EquivalenceCheck {
    bool lhs;
    bool rhs;
};

/// Half-plane test against the equivalent two-point modulus comparison:
///   Re w >= alpha  <=>  |w - (1+alpha)| <= |w + (1-alpha)|.
/// The moduli are compared through the shift d = Re w - alpha; the v^2
/// contribution is identical on both sides and cancels, and
/// |w-(1+alpha)|^2 - |w+(1-alpha)|^2 = (d-1)^2 - (d+1)^2 = -4d.
inline EquivalenceCheck half_plane_equivalence(Complex w, double alpha) {
    require_finite(w, "point must be finite");
    require_finite(alpha, "alpha must be finite");
    const double d = w.real() - alpha;
    const bool lhs = w.real() >= alpha;
    const bool rhs = (d - 1.0) * (d - 1.0) <= (d + 1.0) * (d + 1.0);
    return EquivalenceCheck{lhs, rhs};
}

/// Strict conic-form test against the all-theta transformed condition:
///   Re w > alpha |w - 1| + gamma
///     <=>  Re{w (1 + alpha e^{i theta}) - alpha e^{i theta}} > gamma  for all theta.
/// The right side is decided by its exact envelope: for alpha >= 0 the
/// minimum over theta of Re{(w-1) alpha e^{i theta}} is -alpha |w - 1|, so the
/// quantified condition collapses to the left side. A uniform theta grid of
/// the requested size (>= 8) is evaluated as a redundant cross-check.
inline EquivalenceCheck conic_form_equivalence(Complex w, double alpha, double gamma, int theta_samples) {
    require_finite(w, "point must be finite");
    require_finite(alpha, "alpha must be finite");
    require_finite(gamma, "gamma must be finite");
    if (theta_samples < 8) throw DomainError("conic_form_equivalence needs at least 8 theta samples");
    const bool lhs = w.real() > alpha * std::abs(w - 1.0) + gamma;
    bool rhs = w.real() > alpha * std::abs(w - 1.0) + gamma; // worst-theta envelope
    for (int j = 0; j < theta_samples && rhs; ++j) {
        const double theta = -kPi + (kTwoPi * (j + 1)) / theta_samples;
        const Complex e = std::polar(1.0, theta);
        rhs = (w * (1.0 + alpha * e) - alpha * e).real() > gamma;
    }
    return EquivalenceCheck{lhs, rhs};
}

} // namespace gft
