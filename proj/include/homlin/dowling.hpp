#pragma once

#include <string>
#include <vector>

#include "homlin/permutation.hpp"
#include "homlin/polynomial.hpp"
#include "homlin/poset.hpp"

namespace homlin {

/// Z_m-labeled partition of {0} u [N]: a zero block containing 0 (unlabeled)
/// plus labeled blocks whose minimum carries label 0.  Canonical form: zero
/// block first, labeled blocks ordered by minima, elements ascending.
class LabeledPartition {
public:
    struct Block {
        std::vector<int> elems;  // ascending
        std::vector<int> labels; // aligned; labels.front() == 0
        friend bool operator==(const Block&, const Block&) = default;
        friend auto operator<=>(const Block&, const Block&) = default;
    };

    LabeledPartition() = default;
    static LabeledPartition make(int N, int modulus, std::vector<int> zero_block,
                                 std::vector<Block> labeled_blocks);

    int ground_max() const { return N_; }
    int modulus() const { return m_; }
    const std::vector<int>& zero_block() const { return zero_; }
    const std::vector<Block>& labeled_blocks() const { return blocks_; }
    int labeled_block_count() const { return static_cast<int>(blocks_.size()); }
    /// Blocks including the zero block.
    int block_count() const { return labeled_block_count() + 1; }

    /// "0 5|1^0 3^1|2^0 4^2"
    std::string to_string() const;

    friend bool operator==(const LabeledPartition&, const LabeledPartition&) = default;
    friend bool operator<(const LabeledPartition& a, const LabeledPartition& b) {
        if (a.zero_ != b.zero_) return a.zero_ < b.zero_;
        return a.blocks_ < b.blocks_;
    }

private:
    int N_ = 0;
    int m_ = 1;
    std::vector<int> zero_;
    std::vector<Block> blocks_;
};

/// True iff fine <= coarse in the Dowling order: the zero block only grows,
/// and each labeled block lands either inside the coarse zero block or inside
/// a single coarse labeled block with labels shifted by one constant mod m.
bool labeled_refines(const LabeledPartition& fine, const LabeledPartition& coarse);

/// All covers of lambda: merge the zero block with one labeled block (labels
/// erased), or merge two labeled blocks in each of the m ways.
std::vector<LabeledPartition> dowling_covers(const LabeledPartition& lambda);

struct LabeledPartitionPoset {
    std::vector<LabeledPartition> elements;
    FinitePoset poset;
    int index_of(const LabeledPartition& p) const; // -1 when absent
};

/// The Dowling lattice Q_N(Z_m) on {0} u [N]; rank = N - #labeled blocks.
LabeledPartitionPoset dowling_lattice(int N, int modulus);

/// Induced subposet of Q_{2n-1}(Z_m): a nonsingleton zero block has odd
/// min(B0 \ {0}); nonsingleton labeled blocks have odd min and even max.
LabeledPartitionPoset homogenized_subposet(int n, int modulus);

/// Cycle support of an m-labeled D-permutation on [2n]: the cycle containing
/// 2n becomes the zero block (2n replaced by 0, labels dropped); every other
/// cycle becomes a labeled block with inherited labels.
LabeledPartition labeled_cycle_support(const LabeledPermutation& sigma);

/// Gandhi polynomials: G_1 = x^2, G_n = x^2 (G_{n-1}(x+1) - G_{n-1}(x)).
/// G_0 = x is the recurrence-consistent extension (x^2(G_0(x+1)-G_0(x)) = G_1).
IntPolynomial gandhi(int n);

/// m^pow * G(1/m), evaluated exactly (IntegrityError if not an integer).
Int scaled_reciprocal_eval(const IntPolynomial& g, int m, int pow);

} // namespace homlin
