#include "homlin/polynomial.hpp"

#include <sstream>

namespace homlin {

IntPolynomial::IntPolynomial(long long constant) {
    if (constant != 0) c_.push_back(Int(constant));
}

IntPolynomial::IntPolynomial(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

IntPolynomial::IntPolynomial(std::vector<Int> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending_coeffs) {
    for (long long v : ascending_coeffs) c_.emplace_back(v);
    normalize();
}

IntPolynomial IntPolynomial::monomial(int degree, Int coeff) {
    IntPolynomial p;
    if (coeff != 0) {
        p.c_.assign(degree + 1, Int(0));
        p.c_[degree] = std::move(coeff);
    }
    return p;
}

IntPolynomial IntPolynomial::t() { return monomial(1); }

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPolynomial::coeff(int i) const {
    static const Int zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPolynomial::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

IntPolynomial IntPolynomial::shift_variable(const Int& delta) const {
    // Horner in the shifted variable: P(t+d) = (...(c_n (t+d) + c_{n-1})(t+d) + ...)
    IntPolynomial acc;
    IntPolynomial shift(std::vector<Int>{delta, Int(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * shift + IntPolynomial(*it);
    return acc;
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& d) const {
    if (d.is_zero() || d.c_.back() != 1)
        throw ParameterError("divide_exact requires a monic nonzero divisor");
    std::vector<Int> rem = c_;
    const int dd = d.degree();
    if (degree() < dd) return is_zero() ? std::optional<IntPolynomial>(IntPolynomial{}) : std::nullopt;
    std::vector<Int> quot(degree() - dd + 1, Int(0));
    for (int i = degree(); i >= dd; --i) {
        Int q = rem[i];
        if (q == 0) continue;
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
    }
    for (const Int& r : rem)
        if (r != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (Int& v : r.c_) v = -v;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& v = c_[i];
        if (v == 0) continue;
        Int a = v < 0 ? Int(-v) : v;
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) out << a.str();
        if (i >= 1) out << var;
        if (i >= 2) out << "^" << i;
    }
    return out.str();
}

std::vector<std::string> IntPolynomial::to_decimal_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const Int& v : c_) out.push_back(v.str());
    return out;
}

IntPolynomial IntPolynomial::from_decimal_strings(const std::vector<std::string>& coeffs) {
    std::vector<Int> c;
    c.reserve(coeffs.size());
    for (const std::string& s : coeffs) c.emplace_back(s);
    return IntPolynomial(std::move(c));
}

IntPolynomial falling(const IntPolynomial& a, int n) { return falling_m(a, n, 1); }

IntPolynomial falling_m(const IntPolynomial& a, int n, int m) {
    if (n < 0) throw ParameterError("falling factorial needs n >= 0");
    IntPolynomial r(1);
    for (int k = 0; k < n; ++k) r = r * (a - IntPolynomial(Int(k) * m));
    return r;
}

Int falling(const Int& a, int n) { return falling_m(a, n, 1); }

Int falling_m(const Int& a, int n, int m) {
    if (n < 0) throw ParameterError("falling factorial needs n >= 0");
    Int r = 1;
    for (int k = 0; k < n; ++k) r *= a - Int(k) * m;
    return r;
}

} // namespace homlin
