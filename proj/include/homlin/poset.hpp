#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "homlin/common.hpp"
#include "homlin/polynomial.hpp"

namespace homlin {

/// Finite graded poset with a unique minimum, stored as an explicit
/// reachability closure over element indices 0..size-1.  The element keys
/// themselves live with the caller; this class only sees the order.
///
/// Construction validates: antisymmetry, unique bottom, rank(bottom) = 0,
/// rank strictly monotone along the order, and gradedness (every covering
/// step raises rank by exactly 1).  Violations throw IntegrityError.
class FinitePoset {
public:
    FinitePoset(int n, const std::function<bool(int, int)>& leq, std::vector<int> rank);

    int size() const { return n_; }
    int bottom() const { return bottom_; }
    int length() const { return length_; }
    int rank(int x) const { return rank_[x]; }
    bool leq(int x, int y) const;

    /// mu(bottom, x), memoized across calls.
    const Int& mobius_from_bottom(int x) const;
    /// mu(x, y); DomainError unless x <= y.
    Int mobius(int x, int y) const;

    /// chi(t) = sum_x mu(0^, x) t^(length - rank(x)).
    IntPolynomial characteristic_polynomial() const;

    /// Elements of rank 1.
    std::vector<int> atoms() const;
    /// Atoms below x, ascending.
    std::vector<int> atoms_below(int x) const;
    /// Index of the unique maximum, if the poset has one.
    std::optional<int> top() const;

private:
    int n_ = 0;
    int bottom_ = 0;
    int length_ = 0;
    int words_ = 0;
    std::vector<int> rank_;
    std::vector<uint64_t> below_; // row y: bitset over x with x <= y
    mutable std::vector<Int> mob0_;
    mutable bool mob0_done_ = false;
    mutable std::map<std::pair<int, int>, Int> mob_memo_;

    const uint64_t* row(int y) const { return below_.data() + static_cast<size_t>(y) * words_; }
    void compute_mob0() const;
};

/// Region count of a real arrangement from its characteristic polynomial:
/// |chi(-1)|.
Int zaslavsky_regions(const IntPolynomial& chi);
/// Bounded-region count of an affine arrangement from the characteristic
/// polynomial of its intersection semilattice: |chi(1)|.
Int zaslavsky_bounded_regions(const IntPolynomial& chi);

/// Poincare polynomial of the complement of a complex arrangement with
/// intersection lattice of length r: (-t)^r chi(-1/t), which must have
/// non-negative integer coefficients (IntegrityError otherwise).
IntPolynomial poincare_polynomial(const IntPolynomial& chi, int length);

} // namespace homlin
