#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "gft/class_kernel.hpp"
#include "gft/errors.hpp"
#include "gft/series.hpp"
#include "gft/verifier.hpp"

namespace gft {

/// Truncation of f to the terms z through z^m.
inline TruncatedSeries partial_sum(const TruncatedSeries& f, int m) {
    if (m < 1) throw DomainError("partial sum index must satisfy m >= 1");
    const int order = std::min(m, f.order());
    std::vector<Complex> c(f.coeffs().begin(),
                           f.coeffs().begin() + std::max(0, order - 1));
    return TruncatedSeries(f.form(), order, std::move(c));
}

/// Normalized weight delta_n = w_n / (1 - gamma) governing both the
/// neighborhood metric and the partial-sum ratio bounds.
inline double delta_n(const ClassParams& p, int n) {
    if (n < 2) throw DomainError("delta_n is defined for n >= 2");
    return multipliers(p, n).w_at(n) / (1.0 - p.gamma);
}

/// Side conditions under which the four ratio bounds are proved. delta_1 is
/// undefined, so both families are checked from n = 2.
struct DeltaConditions {
    bool ratio_ok = true;      // delta_n >= 1 (n <= m), delta_n >= delta_{m+1} (n > m)
    bool derivative_ok = true; // delta_n >= 1 (n <= m), delta_n >= n delta_{m+1}/(m+1) (n > m)
    std::vector<int> ratio_failures;
    std::vector<int> derivative_failures;
};

/// The four sharp lower bounds on Re{f/f_m}, Re{f_m/f}, Re{f'/f_m'},
/// Re{f_m'/f'}, all driven by the single value delta_{m+1}.
struct PartialSumBounds {
    int m = 1;
    double delta = 0.0; // delta_{m+1}
    double bound_f_over_fm = 0.0;   // 1 - 1/delta
    double bound_fm_over_f = 0.0;   // delta / (1 + delta)
    double bound_df_over_dfm = 0.0; // 1 - (m+1)/delta
    double bound_dfm_over_df = 0.0; // delta / (1 + m + delta)
    DeltaConditions conditions;
};

/// Bounds from delta_{m+1} plus the delta_n side conditions evaluated for
/// n = 2..check_order. Failed conditions flag the bounds unproven; the
/// bounds themselves are still returned.
inline PartialSumBounds ratio_bounds(const ClassParams& p, int m, int check_order = 64) {
    if (m < 1) throw DomainError("partial sum index must satisfy m >= 1");
    const int order = std::max(check_order, m + 1);
    const Multipliers mult = multipliers(p, order);
    const auto delta = [&](int n) { return mult.w_at(n) / (1.0 - p.gamma); };

    PartialSumBounds b;
    b.m = m;
    b.delta = delta(m + 1);
    if (b.delta <= 0.0) throw DegenerateWeight("delta_{m+1} must be positive");
    b.bound_f_over_fm = 1.0 - 1.0 / b.delta;
    b.bound_fm_over_f = b.delta / (1.0 + b.delta);
    b.bound_df_over_dfm = 1.0 - (m + 1.0) / b.delta;
    b.bound_dfm_over_df = b.delta / (1.0 + m + b.delta);

    constexpr double tol = 1e-12; // absorbs rounding at exact-equality cases
    for (int n = 2; n <= order; ++n) {
        const double dn = delta(n);
        const double need_ratio = n <= m ? 1.0 : b.delta;
        if (dn + tol < need_ratio) {
            b.conditions.ratio_ok = false;
            b.conditions.ratio_failures.push_back(n);
        }
        const double need_derivative = n <= m ? 1.0 : static_cast<double>(n) * b.delta / (m + 1.0);
        if (dn + tol < need_derivative) {
            b.conditions.derivative_ok = false;
            b.conditions.derivative_failures.push_back(n);
        }
    }
    return b;
}

/// The extremal witness z + z^{m+1}/delta_{m+1}; its f/f_m ratio attains the
/// bound in the limit r -> 1 along the argument pi/m.
inline TruncatedSeries extremal_partial(const ClassParams& p, int m) {
    const double d = delta_n(p, m + 1);
    std::vector<Complex> c(static_cast<std::size_t>(m));
    c[static_cast<std::size_t>(m - 1)] = 1.0 / d;
    return TruncatedSeries(SignForm::General, m + 1, std::move(c));
}

/// Grid verification of all four ratio bounds for a series whose coefficient
/// moduli satisfy the membership inequality (checked first). Reports carry
/// the labels "f/fm", "fm/f", "f'/fm'", "fm'/f'" in that order.
inline std::array<VerificationReport, 4> verify_ratio_bounds(const ClassParams& p,
                                                             const TruncatedSeries& f, int m,
                                                             const GridSpec& grid = GridSpec::defaults(),
                                                             int threads = 0) {
    if (f.order() >= 2) {
        const Multipliers mult = multipliers(p, f.order());
        double sum = 0.0;
        for (int n = 2; n <= f.order(); ++n)
            sum += mult.w_at(n) / (1.0 - p.gamma) * std::abs(f.coeff(n));
        if (sum > 1.0 + kMembershipTol)
            throw DomainError("coefficient moduli violate the membership inequality");
    }
    const PartialSumBounds b = ratio_bounds(p, m, std::max(64, f.order()));
    const TruncatedSeries fm = partial_sum(f, m);
    const DiskPolynomial fp = to_polynomial(f);
    const DiskPolynomial fmp = to_polynomial(fm);
    const DiskPolynomial dfp = derivative(f);
    const DiskPolynomial dfmp = derivative(fm);
    return {
        grid_min_ratio(fp, fmp, grid, b.bound_f_over_fm, "f/fm", threads),
        grid_min_ratio(fmp, fp, grid, b.bound_fm_over_f, "fm/f", threads),
        grid_min_ratio(dfp, dfmp, grid, b.bound_df_over_dfm, "f'/fm'", threads),
        grid_min_ratio(dfmp, dfp, grid, b.bound_dfm_over_df, "fm'/f'", threads),
    };
}

} // namespace gft
