#pragma once

#include <cmath>
#include <vector>

#include "gft/complex.hpp"
#include "gft/errors.hpp"
#include "gft/operator.hpp"
#include "gft/series.hpp"

namespace gft {

/// Absolute tolerance on the coefficient inequality; boundary functions
/// count as members.
inline constexpr double kMembershipTol = 1e-12;

/// Full parameter tuple of the function class: the operator parameters plus
/// the conic parameters (k, gamma) and the symmetric-point factor t.
/// Valid ranges: k >= 0, 0 <= gamma < 1, |t| <= 1 with t != 1.
struct ClassParams {
    OperatorParams op;
    double k;
    double gamma;
    Complex t;

    ClassParams(OperatorParams op_, double k_, double gamma_, Complex t_)
        : op(op_), k(k_), gamma(gamma_), t(t_) {
        require_finite(k, "k must be finite");
        require_finite(gamma, "gamma must be finite");
        require_finite(t, "t must be finite");
        if (k < 0.0) throw DomainError("k must satisfy k >= 0");
        if (gamma < 0.0 || gamma >= 1.0) throw DomainError("gamma must lie in [0, 1)");
        if (std::abs(t) > 1.0) throw DomainError("t must satisfy |t| <= 1");
        if (t.real() == 1.0 && t.imag() == 0.0) throw DomainError("t = 1 is excluded");
    }
};

/// Cached per-index values: the geometric partial sums u_n = 1 + t + ... +
/// t^{n-1} (n = 1..N) and the weights
///   w_n = phi^eta(lambda, mu, n) * |n(k+1) - u_n(k+gamma)|   (n = 2..N).
struct Multipliers {
    std::vector<Complex> u; // u[i] = u_{i+1}
    std::vector<double> w;  // w[i] = w_{i+2}

    int order() const { return static_cast<int>(u.size()); }
    Complex u_at(int n) const { return u[static_cast<std::size_t>(n - 1)]; }
    double w_at(int n) const { return w[static_cast<std::size_t>(n - 2)]; }
};

/// Tabulate u_n and w_n up to the given order (>= 2). u_n is accumulated by
/// the recurrence u_n = u_{n-1} + t^{n-1}; the closed form (1 - t^n)/(1 - t)
/// cancels catastrophically near t = 1 and is not used.
inline Multipliers multipliers(const ClassParams& p, int order) {
    if (order < 2) throw DomainError("multiplier table needs order >= 2");
    Multipliers m;
    m.u.reserve(static_cast<std::size_t>(order));
    m.w.reserve(static_cast<std::size_t>(order - 1));
    Complex u = 1.0;
    Complex tpow = 1.0;
    m.u.push_back(u);
    for (int n = 2; n <= order; ++n) {
        tpow *= p.t;
        u += tpow;
        m.u.push_back(u);
        const Complex centered = static_cast<double>(n) * (p.k + 1.0) - u * (p.k + p.gamma);
        m.w.push_back(phi(p.op, n) * std::abs(centered));
    }
    return m;
}

/// The left-hand side of the coefficient inequality, sum of w_n a_n over the
/// stored coefficients. Defined only for negative-coefficient series.
inline double coefficient_sum(const ClassParams& p, const TruncatedSeries& f) {
    if (f.form() != SignForm::NegativeCoefficients)
        throw FormError("coefficient condition applies to negative-coefficient series");
    if (f.order() < 2) return 0.0;
    const Multipliers m = multipliers(p, f.order());
    double sum = 0.0;
    for (int n = 2; n <= f.order(); ++n) sum += m.w_at(n) * f.coeff(n).real();
    return sum;
}

struct MembershipVerdict {
    bool member;
    double sum;    // sum w_n a_n
    double budget; // 1 - gamma
    double slack;  // budget - sum
};

/// Exact membership test: member iff sum w_n a_n <= 1 - gamma (+ tolerance).
inline MembershipVerdict is_member(const ClassParams& p, const TruncatedSeries& f) {
    const double sum = coefficient_sum(p, f);
    const double budget = 1.0 - p.gamma;
    return MembershipVerdict{sum <= budget + kMembershipTol, sum, budget, budget - sum};
}

/// Sharp upper bound (1 - gamma)/w_n on the n-th coefficient of a member.
inline double coefficient_bound(const ClassParams& p, int n) {
    if (n < 2) throw DomainError("coefficient bound is defined for n >= 2");
    const double wn = multipliers(p, n).w_at(n);
    if (wn == 0.0) throw DegenerateWeight("weight w_n vanishes; the bound is unconstrained");
    return (1.0 - p.gamma) / wn;
}

/// The boundary member z - [(1 - gamma)/w_n] z^n witnessing sharpness of the
/// coefficient bound; its coefficient sum equals 1 - gamma up to rounding.
inline TruncatedSeries extremal_function(const ClassParams& p, int n) {
    const double a = coefficient_bound(p, n);
    std::vector<Complex> c(static_cast<std::size_t>(n - 1));
    c[static_cast<std::size_t>(n - 2)] = a;
    return TruncatedSeries(SignForm::NegativeCoefficients, n, std::move(c));
}

} // namespace gft
