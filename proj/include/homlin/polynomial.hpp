#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "homlin/common.hpp"

namespace homlin {

/// Dense univariate polynomial over arbitrary-precision integers,
/// coefficients stored ascending by power and kept normalized (no trailing
/// zero above the leading term; the zero polynomial has no coefficients).
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(long long constant);                   // NOLINT: implicit by design
    IntPolynomial(Int constant);                         // NOLINT
    explicit IntPolynomial(std::vector<Int> ascending_coeffs);
    IntPolynomial(std::initializer_list<long long> ascending_coeffs);

    static IntPolynomial monomial(int degree, Int coeff = 1);
    /// The polynomial t.
    static IntPolynomial t();

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of t^i (zero beyond the degree).
    const Int& coeff(int i) const;
    const std::vector<Int>& coeffs() const { return c_; }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;

    /// P(t + delta), expanded exactly.
    IntPolynomial shift_variable(const Int& delta) const;

    /// Exact division by a monic divisor; nullopt if the remainder is nonzero.
    std::optional<IntPolynomial> divide_exact(const IntPolynomial& monic_divisor) const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    /// Human form, e.g. "t^3 - 3t^2 + 3t - 1"; "0" for the zero polynomial.
    std::string to_string(const std::string& var = "t") const;
    /// JSON-ready list of decimal strings, ascending powers; empty for zero.
    std::vector<std::string> to_decimal_strings() const;
    static IntPolynomial from_decimal_strings(const std::vector<std::string>& coeffs);

private:
    void normalize();
    std::vector<Int> c_;
};

/// Falling factorial (a)_n = a(a-1)...(a-n+1) with polynomial argument; (a)_0 = 1.
IntPolynomial falling(const IntPolynomial& a, int n);
/// m-step falling factorial (a)_{n,m} = a(a-m)(a-2m)...(a-(n-1)m).
IntPolynomial falling_m(const IntPolynomial& a, int n, int m);
Int falling(const Int& a, int n);
Int falling_m(const Int& a, int n, int m);

} // namespace homlin
