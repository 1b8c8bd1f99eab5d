#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "gft/class_kernel.hpp"
#include "gft/complex.hpp"
#include "gft/errors.hpp"
#include "gft/series.hpp"

namespace gft {

/// Grid minima must clear their bound minus this tolerance to pass.
inline constexpr double kGridTolerance = 1e-6;

/// Ratio denominators below this magnitude abort the verification: a zero of
/// the denominator inside the disk invalidates the ratio statement.
inline constexpr double kRatioDenominatorFloor = 1e-10;

/// Polar sampling of the open unit disk: a radius list times a uniform
/// angle grid over (-pi, pi], plus optional injected rays for sharpness
/// probes at known extremal arguments.
struct GridSpec {
    std::vector<double> r_values;
    int theta_count = 720;
    std::vector<double> include_rays;

    /// count log-spaced radii on [r_min, r_max] with the endpoint exact.
    static std::vector<double> log_radii(int count, double r_min, double r_max) {
        if (count < 1 || r_min <= 0.0 || r_min > r_max || r_max >= 1.0)
            throw DomainError("log_radii needs 0 < r_min <= r_max < 1 and count >= 1");
        std::vector<double> r(static_cast<std::size_t>(count));
        if (count == 1) {
            r[0] = r_max;
            return r;
        }
        const double lo = std::log(r_min);
        const double hi = std::log(r_max);
        const double h = (hi - lo) / (count - 1);
        r[0] = r_min;
        for (int i = 1; i < count - 1; ++i) r[static_cast<std::size_t>(i)] = std::exp(lo + i * h);
        r[static_cast<std::size_t>(count - 1)] = r_max;
        return r;
    }

    static GridSpec defaults() { return GridSpec{log_radii(64, 0.01, 0.999), 720, {}}; }

    void validate() const {
        if (r_values.empty()) throw DomainError("grid needs at least one radius");
        for (double r : r_values)
            if (!(r > 0.0) || r >= 1.0) throw DomainError("grid radii must lie in (0, 1)");
        if (theta_count < 8) throw DomainError("grid needs theta_count >= 8");
        for (double t : include_rays) require_finite(t, "ray arguments must be finite");
    }

    /// Uniform angles theta_j = -pi + 2 pi (j+1)/theta_count, then rays.
    std::vector<double> theta_values() const {
        std::vector<double> th;
        th.reserve(static_cast<std::size_t>(theta_count) + include_rays.size());
        for (int j = 0; j < theta_count; ++j)
            th.push_back(-kPi + (kTwoPi * (j + 1)) / theta_count);
        th.insert(th.end(), include_rays.begin(), include_rays.end());
        return th;
    }
};

struct PolarPoint {
    double r = 0.0;
    double theta = 0.0;
};

struct VerificationReport {
    std::string quantity;
    GridSpec grid;
    double minimum = 0.0;
    PolarPoint argmin;
    double bound = 0.0;
    bool pass = false;
};

/// Worker count for grid scans: `requested` if positive, otherwise all
/// hardware threads capped by the GFT_THREADS environment variable.
inline int resolve_thread_count(int requested = 0) {
    if (requested > 0) return requested;
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("GFT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v < n) n = static_cast<int>(v);
    }
    return n;
}

namespace detail {

struct MinState {
    double value = std::numeric_limits<double>::infinity();
    std::size_t index = std::numeric_limits<std::size_t>::max();

    void consider(double v, std::size_t i) {
        if (v < value) {
            value = v;
            index = i;
        }
    }

    void merge(const MinState& later) {
        // Chunks are merged in scan order, so strict < keeps the first
        // point attaining the minimum, exactly as a sequential scan would.
        if (later.value < value) *this = later;
    }
};

/// Minimum of fn over the flattened (radius-major) polar grid. Partitioned
/// across threads in contiguous index ranges; the result (and any thrown
/// error) is identical to a sequential scan.
template <typename PointFn>
MinState grid_minimum(const std::vector<double>& radii, const std::vector<double>& thetas,
                      PointFn&& fn, int threads) {
    const std::size_t t_count = thetas.size();
    const std::size_t total = radii.size() * t_count;
    const auto eval_range = [&](std::size_t begin, std::size_t end) {
        MinState local;
        for (std::size_t i = begin; i < end; ++i) {
            const double r = radii[i / t_count];
            const double theta = thetas[i % t_count];
            local.consider(fn(r, theta, std::polar(r, theta)), i);
        }
        return local;
    };

    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), std::max<std::size_t>(total, 1));
    if (workers <= 1) return eval_range(0, total);

    std::vector<MinState> results(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(total, begin + chunk);
        pool.emplace_back([&, w, begin, end] {
            try {
                results[w] = eval_range(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (std::size_t w = 0; w < workers; ++w)
        if (errors[w]) std::rethrow_exception(errors[w]);
    MinState best;
    for (const MinState& s : results) best.merge(s);
    return best;
}

} // namespace detail

/// Precomputed numerator/denominator polynomials of the symmetric-point
/// difference quotient
///   W(z) = (1 - t) z (D^eta f)'(z) / (D^eta f(z) - D^eta f(t z)),
/// and the pointwise condition value G(z) = Re W - k |W - 1| - gamma.
class ConditionEvaluator {
public:
    ConditionEvaluator(const ClassParams& p, const TruncatedSeries& f)
        : k_(p.k), gamma_(p.gamma), num_(build_num(p, f)), den_(build_den(p, f)) {}

    /// G(z). The singularity at z = 0 is removable with W(0) = 1, giving
    /// G(0) = 1 - gamma exactly.
    double value(Complex z) const {
        if (z.real() == 0.0 && z.imag() == 0.0) return 1.0 - gamma_;
        const Complex den = den_.evaluate(z);
        if (std::abs(den) < 1e-12 * std::abs(z))
            throw ZeroDenominator("symmetric-point difference vanishes at |z| = " +
                                  std::to_string(std::abs(z)));
        const Complex w = num_.evaluate(z) / den;
        return w.real() - k_ * std::abs(w - 1.0) - gamma_;
    }

private:
    static DiskPolynomial build_num(const ClassParams& p, const TruncatedSeries& f) {
        // (1 - t) z (D^eta f)'(z)
        const TruncatedSeries df = apply_closed(p.op, f);
        const Complex lead = 1.0 - p.t;
        std::vector<Complex> c(static_cast<std::size_t>(df.order()) + 1);
        c[1] = lead;
        for (int n = 2; n <= df.order(); ++n)
            c[static_cast<std::size_t>(n)] = lead * (static_cast<double>(n) * df.signed_coeff(n));
        return DiskPolynomial(std::move(c));
    }

    static DiskPolynomial build_den(const ClassParams& p, const TruncatedSeries& f) {
        // D^eta f(z) - D^eta f(t z); coefficient n picks up the factor 1 - t^n.
        const TruncatedSeries df = apply_closed(p.op, f);
        std::vector<Complex> c(static_cast<std::size_t>(df.order()) + 1);
        c[1] = 1.0 - p.t;
        Complex tn = p.t;
        for (int n = 2; n <= df.order(); ++n) {
            tn *= p.t;
            c[static_cast<std::size_t>(n)] = df.signed_coeff(n) * (1.0 - tn);
        }
        return DiskPolynomial(std::move(c));
    }

    double k_;
    double gamma_;
    DiskPolynomial num_;
    DiskPolynomial den_;
};

/// G(z) at a single point; accepts z = 0 through the removable-singularity
/// value. Requires |z| < 1.
inline double condition_value(const ClassParams& p, const TruncatedSeries& f, Complex z) {
    require_finite(z, "evaluation point must be finite");
    if (std::abs(z) >= 1.0) throw DomainError("evaluation point must satisfy |z| < 1");
    return ConditionEvaluator(p, f).value(z);
}

/// Minimum of G over the grid plus the point z = 0. The report's bound is 0:
/// members keep G >= 0 throughout the disk.
inline VerificationReport grid_min_condition(const ClassParams& p, const TruncatedSeries& f,
                                             const GridSpec& grid = GridSpec::defaults(),
                                             int threads = 0) {
    grid.validate();
    const ConditionEvaluator ev(p, f);
    const std::vector<double> thetas = grid.theta_values();

    detail::MinState best;
    best.value = 1.0 - p.gamma; // z = 0 seed
    best.merge(detail::grid_minimum(
        grid.r_values, thetas,
        [&](double r, double theta, Complex z) {
            try {
                return ev.value(z);
            } catch (const ZeroDenominator& e) {
                throw ZeroDenominator(std::string(e.what()) + " (grid point r = " +
                                      std::to_string(r) + ", theta = " + std::to_string(theta) +
                                      ")");
            }
        },
        resolve_thread_count(threads)));

    VerificationReport rep;
    rep.quantity = "condition";
    rep.grid = grid;
    rep.minimum = best.value;
    if (best.index != std::numeric_limits<std::size_t>::max())
        rep.argmin = PolarPoint{grid.r_values[best.index / thetas.size()],
                                thetas[best.index % thetas.size()]};
    rep.bound = 0.0;
    rep.pass = rep.minimum >= rep.bound - kGridTolerance;
    return rep;
}

/// Minimum of Re{numer(z)/denom(z)} over the grid, compared to `bound`.
inline VerificationReport grid_min_ratio(const DiskPolynomial& numer, const DiskPolynomial& denom,
                                         const GridSpec& grid = GridSpec::defaults(),
                                         double bound = 0.0, std::string label = "ratio",
                                         int threads = 0) {
    grid.validate();
    const std::vector<double> thetas = grid.theta_values();
    const detail::MinState best = detail::grid_minimum(
        grid.r_values, thetas,
        [&](double r, double theta, Complex z) {
            const Complex d = denom.evaluate(z);
            if (std::abs(d) < kRatioDenominatorFloor)
                throw ZeroDenominator("ratio denominator vanishes at grid point r = " +
                                      std::to_string(r) + ", theta = " + std::to_string(theta));
            return (numer.evaluate(z) / d).real();
        },
        resolve_thread_count(threads));

    VerificationReport rep;
    rep.quantity = std::move(label);
    rep.grid = grid;
    rep.minimum = best.value;
    rep.argmin = PolarPoint{grid.r_values[best.index / thetas.size()],
                            thetas[best.index % thetas.size()]};
    rep.bound = bound;
    rep.pass = rep.minimum >= rep.bound - kGridTolerance;
    return rep;
}

inline VerificationReport grid_min_ratio(const TruncatedSeries& numer, const TruncatedSeries& denom,
                                         const GridSpec& grid = GridSpec::defaults(),
                                         double bound = 0.0, std::string label = "ratio",
                                         int threads = 0) {
    return grid_min_ratio(to_polynomial(numer), to_polynomial(denom), grid, bound,
                          std::move(label), threads);
}

} // namespace gft
