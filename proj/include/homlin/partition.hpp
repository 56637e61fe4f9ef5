#pragma once

#include <functional>
#include <string>
#include <vector>

#include "homlin/common.hpp"

namespace homlin {

/// Partition of a finite set of positive integers into disjoint nonempty
/// blocks.  Canonical form: each block ascending, blocks ordered by minimum.
class SetPartition {
public:
    SetPartition() = default;
    static SetPartition from_blocks(std::vector<std::vector<int>> blocks);
    static SetPartition singletons(const std::vector<int>& ground);

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& ground() const { return ground_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    /// Index of the block containing e (DomainError if absent).
    int block_of(int e) const;

    /// True iff every block of *this is contained in a block of coarser.
    bool refines(const SetPartition& coarser) const;

    /// Pipe-separated canonical form: digits concatenated when the ground
    /// fits in one digit per element ("1247|3689|5"), space-separated otherwise.
    std::string to_string() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend bool operator<(const SetPartition& a, const SetPartition& b) {
        return a.blocks_ < b.blocks_;
    }

private:
    std::vector<std::vector<int>> blocks_;
    std::vector<int> ground_;
};

/// All partitions of [n]; visitor receives each exactly once.
void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit);

} // namespace homlin
