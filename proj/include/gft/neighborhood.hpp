#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "gft/class_kernel.hpp"
#include "gft/errors.hpp"
#include "gft/rng.hpp"
#include "gft/series.hpp"
#include "gft/verifier.hpp"

namespace gft {

struct NeighborhoodSpec {
    ClassParams params;
    double alpha;

    NeighborhoodSpec(ClassParams params_, double alpha_) : params(params_), alpha(alpha_) {
        require_finite(alpha, "alpha must be finite");
        if (alpha < 0.0) throw DomainError("alpha must satisfy alpha >= 0");
    }
};

/// Weighted l1 coefficient distance sum_n (w_n/(1-gamma)) |a_n - b_n| over
/// n = 2..max order. Defined for negative-coefficient series.
inline double distance(const ClassParams& p, const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.form() != SignForm::NegativeCoefficients || g.form() != SignForm::NegativeCoefficients)
        throw FormError("neighborhood distance applies to negative-coefficient series");
    const int order = std::max(f.order(), g.order());
    if (order < 2) return 0.0;
    const Multipliers m = multipliers(p, order);
    double sum = 0.0;
    for (int n = 2; n <= order; ++n)
        sum += m.w_at(n) / (1.0 - p.gamma) * std::abs(f.coeff(n).real() - g.coeff(n).real());
    return sum;
}

inline bool in_neighborhood(const NeighborhoodSpec& spec, const TruncatedSeries& f,
                            const TruncatedSeries& g) {
    return distance(spec.params, f, g) <= spec.alpha;
}

/// Coefficient c_n of the convolution kernel h(z) = z - sum c_n z^n attached
/// to the inclusion argument:
///   c_n = phi^eta(n) [(n - u_n)(1 + k e^{i theta} - s k e^{i theta})
///                     - s (n + u_n) - u_n gamma (1 - s)] / (gamma (s - 1) - 2 s),
/// for |s| = 1. Satisfies |c_n| <= w_n / (1 - gamma).
inline Complex kernel_coefficient(const ClassParams& p, int n, Complex s, double theta) {
    if (n < 2) throw DomainError("kernel coefficient is defined for n >= 2");
    require_finite(s, "s must be finite");
    require_finite(theta, "theta must be finite");
    if (std::abs(std::abs(s) - 1.0) > 1e-12)
        throw DomainError("s must lie on the unit circle");
    const Complex den = p.gamma * (s - 1.0) - 2.0 * s;
    if (std::abs(den) < 1e-12)
        throw DegenerateDenominator("gamma (s - 1) - 2 s is numerically zero");
    const Complex u = multipliers(p, n).u_at(n);
    const Complex e = std::polar(1.0, theta);
    const Complex ke = p.k * e;
    const Complex num = (static_cast<double>(n) - u) * (1.0 + ke - s * ke)
                        - s * (static_cast<double>(n) + u) - u * p.gamma * (1.0 - s);
    return phi(p.op, n) * num / den;
}

/// Sampled certificate for the inclusion hypothesis: (f(z) + eps z)/(1 + eps)
/// stays in the class for eps on rings |eps| = alpha j / ring_count
/// (j < ring_count) with uniformly spread arguments. The rescaled series has
/// coefficients a_n/(1 + eps); membership is tested on their moduli
/// a_n / |1 + eps|. A finite sample, not a proof over all |eps| < alpha.
inline bool hypothesis_check(const NeighborhoodSpec& spec, const TruncatedSeries& f,
                             int ring_samples = 16, int ring_count = 8) {
    if (f.form() != SignForm::NegativeCoefficients)
        throw FormError("hypothesis check applies to negative-coefficient series");
    if (ring_samples < 1 || ring_count < 1)
        throw DomainError("hypothesis check needs positive sample counts");
    for (int j = 0; j < ring_count; ++j) {
        const double rho = spec.alpha * j / ring_count;
        const int samples = j == 0 ? 1 : ring_samples;
        for (int l = 0; l < samples; ++l) {
            const Complex eps = std::polar(rho, (kTwoPi * l) / samples);
            const double scale = std::abs(1.0 + eps);
            if (scale == 0.0) throw DomainError("1 + eps vanishes on the sampled ring");
            std::vector<Complex> b(f.coeffs());
            for (Complex& c : b) c = c.real() / scale;
            if (!is_member(spec.params, TruncatedSeries(SignForm::NegativeCoefficients,
                                                        f.order(), std::move(b)))
                     .member)
                return false;
        }
    }
    return true;
}

struct InclusionReport {
    double alpha;
    int trials;
    int passes;
    double min_grid_margin; // worst grid minimum seen over all trials
    std::uint64_t seed;
};

/// Samples `trials` random members of the alpha-neighborhood of f and runs
/// each through the analytic-condition grid verifier. The alpha budget of a
/// trial is a random fraction split Dirichlet-style across coefficients
/// 2..sample_order, converted through the weights to coefficient
/// perturbations, signed at random and projected back to b_n >= 0 (the
/// projection only shrinks the distance). Deterministic given the seed;
/// trial seeds are derived independently so trials may be partitioned.
inline InclusionReport inclusion_property_test(const NeighborhoodSpec& spec,
                                               const TruncatedSeries& f, int trials,
                                               std::uint64_t seed,
                                               const GridSpec& grid = GridSpec::defaults(),
                                               int sample_order = 64, int threads = 0) {
    if (f.form() != SignForm::NegativeCoefficients)
        throw FormError("neighborhood sampling applies to negative-coefficient series");
    if (trials < 1) throw DomainError("trials must be >= 1");
    const int order = std::max(sample_order, f.order());
    const Multipliers mult = multipliers(spec.params, order);

    InclusionReport rep{spec.alpha, trials, 0, std::numeric_limits<double>::infinity(), seed};
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1));
        const double budget = spec.alpha * rng.uniform01();
        std::vector<double> share(static_cast<std::size_t>(order - 1));
        double total = 0.0;
        for (double& s : share) {
            s = rng.exponential();
            total += s;
        }
        std::vector<Complex> b(static_cast<std::size_t>(order - 1));
        for (int n = 2; n <= order; ++n) {
            const double a = f.coeff(n).real();
            const double wn = mult.w_at(n);
            if (wn == 0.0) {
                b[static_cast<std::size_t>(n - 2)] = a;
                continue;
            }
            const double step =
                budget * (share[static_cast<std::size_t>(n - 2)] / total) * (1.0 - spec.params.gamma) / wn;
            const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
            b[static_cast<std::size_t>(n - 2)] = std::max(0.0, a + sign * step);
        }
        const TruncatedSeries g(SignForm::NegativeCoefficients, order, std::move(b));
        const VerificationReport r = grid_min_condition(spec.params, g, grid, threads);
        if (r.minimum >= -kGridTolerance) ++rep.passes;
        rep.min_grid_margin = std::min(rep.min_grid_margin, r.minimum);
    }
    return rep;
}

} // namespace gft
