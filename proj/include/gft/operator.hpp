#pragma once

#include <cmath>

#include "gft/errors.hpp"
#include "gft/series.hpp"

namespace gft {

/// Parameters of the multiplier differential operator D^eta_{lambda,mu}.
/// Valid ranges: lambda >= mu >= 0, eta a nonnegative integer.
struct OperatorParams {
    double lambda;
    double mu;
    int eta;

    OperatorParams(double lambda_, double mu_, int eta_)
        : lambda(lambda_), mu(mu_), eta(eta_) {
        require_finite(lambda, "lambda must be finite");
        require_finite(mu, "mu must be finite");
        if (mu < 0.0) throw DomainError("mu must satisfy mu >= 0");
        if (lambda < mu) throw DomainError("lambda must satisfy lambda >= mu");
        if (eta < 0) throw DomainError("eta must be a nonnegative integer");
    }
};

/// The coefficient multiplier [1 + (lambda mu n + lambda - mu)(n-1)]^eta.
/// Equals 1 for n = 1 and for eta = 0. Small integer powers are expanded by
/// repeated multiplication so the closed/recursive routes stay comparable.
inline double phi(const OperatorParams& p, int n) {
    if (n < 1) throw DomainError("multiplier index must satisfy n >= 1");
    const double base = 1.0 + (p.lambda * p.mu * n + p.lambda - p.mu) * (n - 1);
    if (base < 0.0) throw DomainError("multiplier base is negative"); // unreachable for lambda >= mu >= 0
    if (p.eta <= 16) {
        double r = 1.0;
        for (int i = 0; i < p.eta; ++i) r *= base;
        return r;
    }
    return std::pow(base, p.eta);
}

/// Closed form: coefficient n scaled by phi(p, n); the z term is unchanged.
inline TruncatedSeries apply_closed(const OperatorParams& p, const TruncatedSeries& f) {
    std::vector<Complex> c(f.coeffs());
    for (int n = 2; n <= f.order(); ++n) c[static_cast<std::size_t>(n - 2)] *= phi(p, n);
    return TruncatedSeries(f.form(), f.order(), std::move(c));
}

/// eta-fold application of the one-step rule
///   D f = lambda mu z^2 f'' + (lambda - mu) z f' + (1 - lambda + mu) f,
/// applied termwise to the stored coefficients. The leading z term is a
/// fixed point of the rule and is left untouched.
inline TruncatedSeries apply_recursive(const OperatorParams& p, const TruncatedSeries& f) {
    std::vector<Complex> c(f.coeffs());
    for (int step = 0; step < p.eta; ++step) {
        for (int n = 2; n <= f.order(); ++n) {
            const Complex a = c[static_cast<std::size_t>(n - 2)];
            const double dn = static_cast<double>(n);
            c[static_cast<std::size_t>(n - 2)] =
                p.lambda * p.mu * dn * (dn - 1.0) * a   // z^2 f'' contribution
                + (p.lambda - p.mu) * dn * a            // z f' contribution
                + (1.0 - p.lambda + p.mu) * a;
        }
    }
    return TruncatedSeries(f.form(), f.order(), std::move(c));
}

} // namespace gft
