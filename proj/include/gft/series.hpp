#pragma once

#include <utility>
#include <vector>

#include "gft/complex.hpp"
#include "gft/errors.hpp"

namespace gft {

enum class SignForm {
    General,              // f(z) = z + sum a_n z^n
    NegativeCoefficients  // f(z) = z - sum a_n z^n, stored a_n real, a_n >= 0
};

/// Truncated power series on the unit disk, normalized so the coefficient of
/// z is 1 (implicit, never stored). Coefficients run densely from n = 2 to
/// the truncation order N; missing trailing entries are zero. Immutable.
class TruncatedSeries {
public:
    TruncatedSeries(SignForm form, int order, std::vector<Complex> coeffs = {})
        : form_(form), order_(order), coeffs_(std::move(coeffs)) {
        if (order_ < 1) throw DomainError("series order must be >= 1");
        if (static_cast<int>(coeffs_.size()) > order_ - 1)
            throw DomainError("coefficient list longer than order allows");
        coeffs_.resize(static_cast<std::size_t>(order_ - 1), Complex{});
        for (const Complex& c : coeffs_) {
            if (!is_finite(c)) throw DomainError("series coefficients must be finite");
            if (form_ == SignForm::NegativeCoefficients && (c.imag() != 0.0 || c.real() < 0.0))
                throw FormError("negative-coefficient form stores real magnitudes a_n >= 0");
        }
    }

    /// f(z) = z, the empty negative-coefficient series; a member of every
    /// class and valid wherever either form is accepted.
    static TruncatedSeries identity() {
        return TruncatedSeries(SignForm::NegativeCoefficients, 1);
    }

    SignForm form() const { return form_; }
    int order() const { return order_; }

    /// Stored coefficient for z^n (the magnitude in negative form); zero for
    /// n outside [2, order].
    Complex coeff(int n) const {
        if (n < 2 || n > order_) return Complex{};
        return coeffs_[static_cast<std::size_t>(n - 2)];
    }

    /// Coefficient of z^n of the represented function, sign applied.
    Complex signed_coeff(int n) const { return sign() * coeff(n); }

    double sign() const { return form_ == SignForm::NegativeCoefficients ? -1.0 : 1.0; }

    const std::vector<Complex>& coeffs() const { return coeffs_; }

private:
    SignForm form_;
    int order_;
    std::vector<Complex> coeffs_; // index i holds the coefficient of z^{i+2}
};

/// Dense polynomial c_0 + c_1 z + ... with no normalization constraint.
/// Holds derivative and scaled-substitution results, whose leading structure
/// does not fit TruncatedSeries.
class DiskPolynomial {
public:
    explicit DiskPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(Complex{});
        for (const Complex& c : coeffs_)
            if (!is_finite(c)) throw DomainError("polynomial coefficients must be finite");
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Horner evaluation; the domain is the open unit disk.
    Complex evaluate(Complex z) const {
        require_finite(z, "evaluation point must be finite");
        if (std::abs(z) >= 1.0) throw DomainError("evaluation point must satisfy |z| < 1");
        Complex acc = coeffs_.back();
        for (int i = static_cast<int>(coeffs_.size()) - 2; i >= 0; --i)
            acc = acc * z + coeffs_[static_cast<std::size_t>(i)];
        return acc;
    }

private:
    std::vector<Complex> coeffs_;
};

/// f(z) by Horner's scheme. Requires |z| < 1.
inline Complex evaluate(const TruncatedSeries& f, Complex z) {
    require_finite(z, "evaluation point must be finite");
    if (std::abs(z) >= 1.0) throw DomainError("evaluation point must satisfy |z| < 1");
    const auto& a = f.coeffs();
    Complex acc{};
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        acc = acc * z + a[static_cast<std::size_t>(i)];
    return z + f.sign() * (z * z * acc);
}

/// The polynomial view of f: 0 + z + (signed coefficients).
inline DiskPolynomial to_polynomial(const TruncatedSeries& f) {
    std::vector<Complex> c(static_cast<std::size_t>(f.order()) + 1);
    c[1] = 1.0;
    for (int n = 2; n <= f.order(); ++n) c[static_cast<std::size_t>(n)] = f.signed_coeff(n);
    return DiskPolynomial(std::move(c));
}

/// f'(z) = 1 + sum n a_n z^{n-1} (sign per form); result has degree N-1.
inline DiskPolynomial derivative(const TruncatedSeries& f) {
    std::vector<Complex> c(static_cast<std::size_t>(f.order()));
    c[0] = 1.0;
    for (int n = 2; n <= f.order(); ++n)
        c[static_cast<std::size_t>(n - 1)] = f.sign() * (static_cast<double>(n) * f.coeff(n));
    return DiskPolynomial(std::move(c));
}

/// Termwise coefficient product; the result order is the smaller of the two
/// and carries the product of the signed coefficients in general form.
inline TruncatedSeries hadamard(const TruncatedSeries& f, const TruncatedSeries& g) {
    const int order = f.order() < g.order() ? f.order() : g.order();
    std::vector<Complex> c(static_cast<std::size_t>(order > 0 ? order - 1 : 0));
    for (int n = 2; n <= order; ++n)
        c[static_cast<std::size_t>(n - 2)] = f.signed_coeff(n) * g.signed_coeff(n);
    return TruncatedSeries(SignForm::General, order, std::move(c));
}

/// The polynomial z -> f(t z): coefficient n becomes a_n t^n, the leading
/// term becomes t z. Requires |t| <= 1.
inline DiskPolynomial scale_substitute(const TruncatedSeries& f, Complex t) {
    require_finite(t, "substitution factor must be finite");
    if (std::abs(t) > 1.0) throw DomainError("substitution factor must satisfy |t| <= 1");
    std::vector<Complex> c(static_cast<std::size_t>(f.order()) + 1);
    c[1] = t;
    Complex tn = t;
    for (int n = 2; n <= f.order(); ++n) {
        tn *= t;
        c[static_cast<std::size_t>(n)] = f.sign() * (f.coeff(n) * tn);
    }
    return DiskPolynomial(std::move(c));
}

} // namespace gft
