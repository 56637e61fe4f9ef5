#include "homlin/poset.hpp"

#include <algorithm>
#include <numeric>

namespace homlin {

FinitePoset::FinitePoset(int n, const std::function<bool(int, int)>& leq, std::vector<int> rank)
    : n_(n), rank_(std::move(rank)) {
    if (n_ <= 0) throw IntegrityError("poset must be nonempty");
    if (static_cast<int>(rank_.size()) != n_) throw IntegrityError("rank vector size mismatch");
    words_ = (n_ + 63) / 64;
    below_.assign(static_cast<size_t>(n_) * words_, 0);

    for (int y = 0; y < n_; ++y) {
        uint64_t* r = below_.data() + static_cast<size_t>(y) * words_;
        for (int x = 0; x < n_; ++x)
            if (leq(x, y)) r[x >> 6] |= 1ull << (x & 63);
        if (!(r[y >> 6] >> (y & 63) & 1)) throw IntegrityError("order is not reflexive");
    }

    // Antisymmetry and rank monotonicity.
    for (int y = 0; y < n_; ++y)
        for (int x = 0; x < n_; ++x) {
            if (x == y || !this->leq(x, y)) continue;
            if (this->leq(y, x)) throw IntegrityError("order is not antisymmetric");
            if (rank_[x] >= rank_[y]) throw IntegrityError("rank not strictly monotone");
        }

    // Unique bottom, below everything.
    int bot = -1;
    for (int x = 0; x < n_; ++x) {
        bool minimal = true;
        for (int z = 0; z < n_ && minimal; ++z)
            if (z != x && this->leq(z, x)) minimal = false;
        if (minimal) {
            if (bot >= 0) throw IntegrityError("poset has more than one minimal element");
            bot = x;
        }
    }
    bottom_ = bot;
    for (int y = 0; y < n_; ++y)
        if (!this->leq(bottom_, y)) throw IntegrityError("bottom is not below every element");
    if (rank_[bottom_] != 0) throw IntegrityError("rank(bottom) must be 0");

    length_ = *std::max_element(rank_.begin(), rank_.end());

    // Gradedness: whenever x < y skips a rank, something must lie strictly
    // between; equivalently all covers raise rank by exactly one.
    for (int y = 0; y < n_; ++y) {
        const uint64_t* ry = row(y);
        for (int x = 0; x < n_; ++x) {
            if (x == y || !this->leq(x, y) || rank_[y] - rank_[x] < 2) continue;
            bool witness = false; // some z with x < z < y
            for (int w = 0; w < words_ && !witness; ++w) {
                uint64_t bits = ry[w];
                while (bits) {
                    int z = w * 64 + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    if (z != x && z != y && this->leq(x, z)) {
                        witness = true;
                        break;
                    }
                }
            }
            if (!witness) throw IntegrityError("poset is not graded by the supplied rank");
        }
    }
}

bool FinitePoset::leq(int x, int y) const {
    return row(y)[x >> 6] >> (x & 63) & 1;
}

void FinitePoset::compute_mob0() const {
    if (mob0_done_) return;
    mob0_.assign(n_, Int(0));
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return rank_[a] < rank_[b]; });
    for (int y : order) {
        if (y == bottom_) {
            mob0_[y] = 1;
            continue;
        }
        Int acc = 0;
        const uint64_t* ry = row(y);
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = ry[w];
            while (bits) {
                int z = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                if (z != y) acc += mob0_[z];
            }
        }
        mob0_[y] = -acc;
    }
    mob0_done_ = true;
}

const Int& FinitePoset::mobius_from_bottom(int x) const {
    compute_mob0();
    return mob0_[x];
}

Int FinitePoset::mobius(int x, int y) const {
    if (!leq(x, y)) throw DomainError("mobius(x,y) requires x <= y");
    if (x == bottom_) return mobius_from_bottom(y);
    if (x == y) return 1;
    auto it = mob_memo_.find({x, y});
    if (it != mob_memo_.end()) return it->second;
    Int acc = 0;
    const uint64_t* ry = row(y);
    for (int w = 0; w < words_; ++w) {
        uint64_t bits = ry[w];
        while (bits) {
            int z = w * 64 + __builtin_ctzll(bits);
            bits &= bits - 1;
            if (z != y && leq(x, z)) acc += mobius(x, z);
        }
    }
    Int r = -acc;
    mob_memo_.emplace(std::make_pair(x, y), r);
    return r;
}

IntPolynomial FinitePoset::characteristic_polynomial() const {
    compute_mob0();
    std::vector<Int> coeffs(length_ + 1, Int(0));
    for (int x = 0; x < n_; ++x) coeffs[length_ - rank_[x]] += mob0_[x];
    return IntPolynomial(std::move(coeffs));
}

std::vector<int> FinitePoset::atoms() const {
    std::vector<int> a;
    for (int x = 0; x < n_; ++x)
        if (rank_[x] == 1) a.push_back(x);
    return a;
}

std::vector<int> FinitePoset::atoms_below(int x) const {
    std::vector<int> a;
    for (int z = 0; z < n_; ++z)
        if (rank_[z] == 1 && leq(z, x)) a.push_back(z);
    return a;
}

std::optional<int> FinitePoset::top() const {
    int t = -1;
    for (int x = 0; x < n_; ++x) {
        bool maximal = true;
        for (int z = 0; z < n_ && maximal; ++z)
            if (z != x && leq(x, z)) maximal = false;
        if (maximal) {
            if (t >= 0) return std::nullopt;
            t = x;
        }
    }
    return t;
}

Int zaslavsky_regions(const IntPolynomial& chi) {
    Int v = chi.eval(Int(-1));
    return v < 0 ? Int(-v) : v;
}

Int zaslavsky_bounded_regions(const IntPolynomial& chi) {
    Int v = chi.eval(Int(1));
    return v < 0 ? Int(-v) : v;
}

IntPolynomial poincare_polynomial(const IntPolynomial& chi, int length) {
    if (length < 0 || chi.degree() > length)
        throw ParameterError("poincare_polynomial: chi degree exceeds stated length");
    // (-t)^r chi(-1/t): beta_i = (-1)^i * coeff_{r-i}(chi).
    std::vector<Int> beta(length + 1, Int(0));
    for (int i = 0; i <= length; ++i) {
        Int b = chi.coeff(length - i);
        if (i % 2 == 1) b = -b;
        if (b < 0) throw IntegrityError("poincare_polynomial: negative Betti number");
        beta[i] = b;
    }
    return IntPolynomial(std::move(beta));
}

} // namespace homlin
