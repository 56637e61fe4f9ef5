#include "homlin/series.hpp"

namespace homlin {

namespace {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

IntSeries rhs_bd(int N) {
    if (N < 1) throw ParameterError("rhs_bd needs N >= 1");
    IntSeries total(N);
    IntSeries denom = IntSeries::one(N);
    for (int n = 1; n <= N; ++n) {
        IntSeries factor(N);
        factor.coeff(0) = 1;
        factor.coeff(1) = Int(n) * (n + 1);
        denom = denom * factor; // prod_{k<=n} (1 + k(k+1)x)
        IntSeries term = denom.inverse().shifted(n);
        Int scale = factorial(n) * factorial(n + 1);
        for (int k = 0; k <= N; ++k) term.coeff(k) *= scale;
        total += term;
    }
    return total;
}

IntSeries rhs_bbd(int N) {
    if (N < 1) throw ParameterError("rhs_bbd needs N >= 1");
    IntSeries total(N);
    IntSeries denom = IntSeries::one(N);
    for (int n = 1; n <= N; ++n) {
        IntSeries factor(N);
        factor.coeff(0) = 1;
        factor.coeff(1) = Int(2 * n) * (2 * n + 1);
        denom = denom * factor; // prod_{k<=n} (1 + 2k(2k+1)x)
        IntSeries term = denom.inverse().shifted(n);
        Int scale = factorial(2 * n);
        for (int k = 0; k <= N; ++k) term.coeff(k) *= scale;
        total += term;
    }
    return total;
}

PolySeries rhs_char_series(int m, int N) {
    if (m < 1) throw ParameterError("rhs_char_series needs m >= 1");
    if (N < 1) throw ParameterError("rhs_char_series needs N >= 1");
    const IntPolynomial t = IntPolynomial::t();
    PolySeries total(N);
    PolySeries denom = PolySeries::one(N);
    for (int n = 1; n <= N; ++n) {
        // factor 1 - mk(t - mk)x at k = n
        IntPolynomial mk(Int(m) * n);
        PolySeries factor(N);
        factor.coeff(0) = IntPolynomial(1);
        factor.coeff(1) = IntPolynomial(0) - mk * (t - mk);
        denom = denom * factor;
        IntPolynomial numer = falling_m(t - IntPolynomial(1), n, m) * falling_m(t - IntPolynomial(Int(m)), n - 1, m);
        PolySeries term = denom.inverse().shifted(n);
        for (int k = 0; k <= N; ++k) term.coeff(k) = term.coeff(k) * numer;
        total += term;
    }
    return total;
}

IntSeries evaluate_at(const PolySeries& s, const Int& t) {
    IntSeries r(s.trunc());
    for (int k = 0; k <= s.trunc(); ++k) r.coeff(k) = s.coeff(k).eval(t);
    return r;
}

} // namespace homlin
