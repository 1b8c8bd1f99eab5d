#pragma once

#include <stdexcept>

namespace gft {

/// Argument outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A series was supplied in the wrong sign form.
class FormError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed series JSON.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Weight w_n vanished, so the requested quantity is unconstrained.
class DegenerateWeight : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A denominator fell below the zero threshold at an evaluation point.
class ZeroDenominator : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The kernel-coefficient denominator gamma(s-1) - 2s is numerically zero.
class DegenerateDenominator : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gft
