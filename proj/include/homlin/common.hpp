#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace homlin {

// Exact arithmetic everywhere: counting sequences overflow 64 bits quickly
// once generating-function coefficients are involved.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Caller passed arguments outside an operation's documented domain.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A mathematically invalid input (e.g. not a valid ID tree, x not <= y).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An internal consistency check failed; indicates a wrong input object
/// (e.g. a characteristic polynomial that cannot come from an arrangement).
struct IntegrityError : std::logic_error {
    using std::logic_error::logic_error;
};

inline std::string int_str(const Int& v) { return v.str(); }

} // namespace homlin
