#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "homlin/common.hpp"
#include "homlin/partition.hpp"

namespace homlin {

/// Permutation of a finite set of positive integers, stored in cycle form.
/// Canonical writing: every cycle that does not contain max(ground) starts at
/// its minimum; the cycle containing max(ground) ends at max(ground); cycles
/// are ordered by their minima.
class Permutation {
public:
    Permutation() = default; // empty permutation on the empty set

    static Permutation identity(std::vector<int> ground);
    /// Ground defaults to the union of the cycles.
    static Permutation from_cycles(std::vector<std::vector<int>> cycles,
                                   std::vector<int> ground = {});
    /// images[i] = sigma(ground[i]).
    static Permutation from_images(const std::vector<int>& ground,
                                   const std::vector<int>& images);

    const std::vector<int>& ground() const { return ground_; }
    const std::vector<std::vector<int>>& cycles() const { return cycles_; }
    int cycle_count() const { return static_cast<int>(cycles_.size()); }
    bool empty() const { return ground_.empty(); }

    int image_of(int i) const;

    /// One-line images in ground order.
    std::vector<int> one_line() const;

    /// e.g. "(1,2)(3)"; "()" for the empty permutation.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.ground_ != b.ground_ ? a.ground_ < b.ground_ : a.images_ < b.images_;
    }

private:
    std::vector<int> ground_;               // ascending
    std::vector<int> images_;               // aligned with ground_
    std::vector<std::vector<int>> cycles_;  // canonical
    void rebuild_cycles();
};

/// D-permutation with labels in {0,...,m-1}.  Invariants: every cycle minimum
/// is labeled 0, and every right-to-left minimum of the word of the cycle
/// containing max(ground) (written ending at the max) is labeled 0.
class LabeledPermutation {
public:
    LabeledPermutation() = default;
    LabeledPermutation(Permutation base, std::vector<int> labels, int modulus);

    const Permutation& base() const { return base_; }
    int modulus() const { return modulus_; }
    int label_of(int elem) const;
    const std::vector<int>& labels() const { return labels_; } // aligned with ground

    /// e.g. "(2^1,1^0,4^0)(3^0)".
    std::string to_string() const;

    friend bool operator==(const LabeledPermutation&, const LabeledPermutation&) = default;
    friend bool operator<(const LabeledPermutation& a, const LabeledPermutation& b) {
        return a.base_ != b.base_ ? a.base_ < b.base_ : a.labels_ < b.labels_;
    }

private:
    Permutation base_;
    std::vector<int> labels_;
    int modulus_ = 1;
};

// Membership predicates.
bool is_d_permutation(const Permutation& sigma);
bool is_dumont(const Permutation& sigma);             // ground must be [2n]
bool is_dumont_derangement(const Permutation& sigma); // ground must be [2n]

/// Elements whose label is forced to 0 in any valid labeling of sigma
/// (cycle minima plus right-to-left minima of the max-containing cycle word).
std::vector<int> forced_zero_elements(const Permutation& sigma);

/// Partition whose blocks are the element sets of sigma's cycles.
SetPartition cycle_support(const Permutation& sigma);

enum class PermFamily {
    dumont,
    dumont_derangement,
    dperm,
    dcycle,
    labeled_dperm,
    labeled_dcycle,
    descent_class,
};

PermFamily perm_family_from_string(const std::string& name);
std::string to_string(PermFamily f);

/// Streams every member of an unlabeled family on the given ground exactly
/// once, in lexicographic one-line order.  dumont/dumont_derangement and
/// descent_class require ground = [2n]; dperm/dcycle accept any finite set.
void enumerate_family(PermFamily family, const std::vector<int>& ground,
                      const std::function<void(const Permutation&)>& emit);

/// Streams every valid m-labeling of every member of the base family
/// (labeled_dperm/labeled_dcycle, ground = [2n]), lexicographic on the
/// one-line word and then on the label vector.
void enumerate_labeled_family(PermFamily family, int two_n, int modulus,
                              const std::function<void(const LabeledPermutation&)>& emit);

/// Counting table for one family; by_cycles maps k -> #members with k cycles.
struct CountTable {
    PermFamily family{};
    int n = 0;          // ground [n] (or [2n] written out by the caller)
    int modulus = 1;
    Int count = 0;
    std::map<int, Int> by_cycles;
    void validate() const; // count == sum of by_cycles when nonempty
};

CountTable count_family(PermFamily family, const std::vector<int>& ground, int modulus = 1);

/// g_n = #{Dumont permutations on [2n-2]}, n >= 1 (g_1 counts the empty one).
Int genocchi(int n);
/// h_n = #{Dumont derangements on [2n+2]}, n >= 0.
Int median_genocchi(int n);
/// #{sigma in S_2n : descents sigma(i) > sigma(i+1) happen only with
/// sigma(i) even and sigma(i+1) odd}.
Int count_descent_class(int n);

} // namespace homlin
