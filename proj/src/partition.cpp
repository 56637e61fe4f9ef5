#include "homlin/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace homlin {

SetPartition SetPartition::from_blocks(std::vector<std::vector<int>> blocks) {
    SetPartition p;
    std::set<int> seen;
    for (auto& b : blocks) {
        if (b.empty()) throw DomainError("empty block in partition");
        std::sort(b.begin(), b.end());
        for (int e : b) {
            if (e <= 0) throw DomainError("partition elements must be positive");
            if (!seen.insert(e).second) throw DomainError("blocks are not disjoint");
        }
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    p.blocks_ = std::move(blocks);
    p.ground_.assign(seen.begin(), seen.end());
    return p;
}

SetPartition SetPartition::singletons(const std::vector<int>& ground) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(ground.size());
    for (int e : ground) blocks.push_back({e});
    return from_blocks(std::move(blocks));
}

int SetPartition::block_of(int e) const {
    for (size_t i = 0; i < blocks_.size(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), e)) return static_cast<int>(i);
    throw DomainError("element not in partition ground");
}

bool SetPartition::refines(const SetPartition& coarser) const {
    if (ground_ != coarser.ground_) return false;
    for (const auto& b : blocks_) {
        const auto& cb = coarser.blocks_[coarser.block_of(b.front())];
        if (!std::includes(cb.begin(), cb.end(), b.begin(), b.end())) return false;
    }
    return true;
}

std::string SetPartition::to_string() const {
    const bool compact = ground_.empty() || ground_.back() <= 9;
    std::ostringstream out;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out << '|';
        for (size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j && !compact) out << ' ';
            out << blocks_[i][j];
        }
    }
    return out.str();
}

void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit) {
    if (n < 0) throw ParameterError("partition ground size must be >= 0");
    if (n == 0) {
        visit(SetPartition{});
        return;
    }
    // Restricted-growth strings: rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int i, int maxb) {
        if (i == n) {
            std::vector<std::vector<int>> blocks(maxb + 1);
            for (int e = 0; e < n; ++e) blocks[rgs[e]].push_back(e + 1);
            visit(SetPartition::from_blocks(std::move(blocks)));
            return;
        }
        for (int b = 0; b <= maxb + 1; ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(maxb, b));
        }
    };
    rec(1, 0); // element 1 always in block 0
}

} // namespace homlin
