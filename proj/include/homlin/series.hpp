#pragma once

#include <vector>

#include "homlin/polynomial.hpp"

namespace homlin {

/// Power series in x truncated at x^N, with coefficients in a commutative
/// ring R (Int for numeric series, IntPolynomial for series over Z[t]).
/// All arithmetic is modulo x^(N+1).
template <class R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int trunc) : c_(trunc + 1, R(0)) {
        if (trunc < 0) throw ParameterError("truncation order must be >= 0");
    }

    int trunc() const { return static_cast<int>(c_.size()) - 1; }
    const R& coeff(int k) const { return c_.at(k); }
    R& coeff(int k) { return c_.at(k); }
    const std::vector<R>& coeffs() const { return c_; }

    static TruncatedSeries one(int trunc) {
        TruncatedSeries s(trunc);
        s.c_[0] = R(1);
        return s;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check(b);
        TruncatedSeries r(a.trunc());
        for (int i = 0; i <= a.trunc(); ++i) {
            if (a.c_[i] == R(0)) continue;
            for (int j = 0; i + j <= a.trunc(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    /// Multiplicative inverse by geometric expansion; the constant term must
    /// be 1 so that the inverse stays in R[[x]].
    TruncatedSeries inverse() const {
        if (!(c_[0] == R(1))) throw DomainError("series inverse requires constant term 1");
        TruncatedSeries b(trunc());
        b.c_[0] = R(1);
        for (int k = 1; k <= trunc(); ++k) {
            R acc = R(0);
            for (int j = 1; j <= k; ++j) acc += c_[j] * b.c_[k - j];
            b.c_[k] = R(0) - acc;
        }
        return b;
    }

    /// Multiply by x^k (drops overflowing coefficients).
    TruncatedSeries shifted(int k) const {
        TruncatedSeries r(trunc());
        for (int i = 0; i + k <= trunc(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void check(const TruncatedSeries& o) const {
        if (o.c_.size() != c_.size()) throw ParameterError("truncation order mismatch");
    }
    std::vector<R> c_;
};

using IntSeries = TruncatedSeries<Int>;
using PolySeries = TruncatedSeries<IntPolynomial>;

/// Median-Genocchi generating function
///   sum_{n>=1} n!(n+1)! x^n / prod_{k=1..n} (1 + k(k+1)x),
/// truncated at x^N.  Coefficient of x^n is h_n for n >= 1.
IntSeries rhs_bd(int N);

/// Type-B region-count series
///   sum_{n>=1} (2n)! x^n / prod_{k=1..n} (1 + 2k(2k+1)x).
IntSeries rhs_bbd(int N);

/// Characteristic-polynomial generating function over Z[t]:
///   sum_{n>=1} (t-1)_{n,m} (t-m)_{n-1,m} x^n / prod_{k=1..n} (1 - mk(t-mk)x).
/// m = 1 specializes to the type-A series.
PolySeries rhs_char_series(int m, int N);

/// Evaluate a polynomial-coefficient series at a fixed t.
IntSeries evaluate_at(const PolySeries& s, const Int& t);

} // namespace homlin
