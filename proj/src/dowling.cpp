#include "homlin/dowling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace homlin {

LabeledPartition LabeledPartition::make(int N, int modulus, std::vector<int> zero_block,
                                        std::vector<Block> labeled_blocks) {
    if (N < 0) throw DomainError("ground max must be >= 0");
    if (modulus < 1) throw ParameterError("modulus must be >= 1");
    std::set<int> seen;
    std::sort(zero_block.begin(), zero_block.end());
    if (zero_block.empty() || zero_block.front() != 0)
        throw DomainError("zero block must contain 0");
    for (int e : zero_block)
        if (!seen.insert(e).second) throw DomainError("blocks are not disjoint");
    for (auto& b : labeled_blocks) {
        if (b.elems.empty() || b.elems.size() != b.labels.size())
            throw DomainError("malformed labeled block");
        std::vector<size_t> idx(b.elems.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) { return b.elems[i] < b.elems[j]; });
        Block sorted;
        for (size_t i : idx) {
            sorted.elems.push_back(b.elems[i]);
            sorted.labels.push_back(b.labels[i]);
        }
        b = std::move(sorted);
        if (b.labels.front() != 0) throw DomainError("block minimum must be labeled 0");
        for (size_t i = 0; i < b.elems.size(); ++i) {
            if (b.elems[i] < 1) throw DomainError("labeled block elements must be positive");
            if (b.labels[i] < 0 || b.labels[i] >= modulus) throw DomainError("label out of range");
            if (!seen.insert(b.elems[i]).second) throw DomainError("blocks are not disjoint");
        }
    }
    if (static_cast<int>(seen.size()) != N + 1 || *seen.rbegin() != (N == 0 ? 0 : N))
        throw DomainError("blocks must cover {0} u [N]");
    std::sort(labeled_blocks.begin(), labeled_blocks.end(),
              [](const Block& a, const Block& b) { return a.elems.front() < b.elems.front(); });
    LabeledPartition p;
    p.N_ = N;
    p.m_ = modulus;
    p.zero_ = std::move(zero_block);
    p.blocks_ = std::move(labeled_blocks);
    return p;
}

std::string LabeledPartition::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < zero_.size(); ++i) {
        if (i) out << ' ';
        out << zero_[i];
    }
    for (const Block& b : blocks_) {
        out << '|';
        for (size_t i = 0; i < b.elems.size(); ++i) {
            if (i) out << ' ';
            out << b.elems[i] << '^' << b.labels[i];
        }
    }
    return out.str();
}

bool labeled_refines(const LabeledPartition& fine, const LabeledPartition& coarse) {
    if (fine.ground_max() != coarse.ground_max() || fine.modulus() != coarse.modulus())
        return false;
    const int N = fine.ground_max();
    const int m = fine.modulus();
    // locate everything in coarse
    std::vector<int> cblock(N + 1, 0); // 0 = zero block, i+1 = labeled block i
    std::vector<int> clabel(N + 1, 0);
    for (int e : coarse.zero_block()) cblock[e] = 0;
    for (size_t i = 0; i < coarse.labeled_blocks().size(); ++i) {
        const auto& b = coarse.labeled_blocks()[i];
        for (size_t k = 0; k < b.elems.size(); ++k) {
            cblock[b.elems[k]] = static_cast<int>(i) + 1;
            clabel[b.elems[k]] = b.labels[k];
        }
    }
    for (int e : fine.zero_block())
        if (cblock[e] != 0) return false;
    for (const auto& b : fine.labeled_blocks()) {
        const int target = cblock[b.elems.front()];
        if (target == 0) {
            for (int e : b.elems)
                if (cblock[e] != 0) return false;
            continue; // absorbed into the zero block, labels dropped
        }
        const int shift = ((clabel[b.elems.front()] - b.labels.front()) % m + m) % m;
        for (size_t k = 0; k < b.elems.size(); ++k) {
            if (cblock[b.elems[k]] != target) return false;
            if (((clabel[b.elems[k]] - b.labels[k]) % m + m) % m != shift) return false;
        }
    }
    return true;
}

std::vector<LabeledPartition> dowling_covers(const LabeledPartition& lambda) {
    const int N = lambda.ground_max();
    const int m = lambda.modulus();
    const auto& blocks = lambda.labeled_blocks();
    std::vector<LabeledPartition> out;

    for (size_t i = 0; i < blocks.size(); ++i) {
        // merge zero block with block i, erasing labels
        std::vector<int> zero = lambda.zero_block();
        zero.insert(zero.end(), blocks[i].elems.begin(), blocks[i].elems.end());
        std::vector<LabeledPartition::Block> rest;
        for (size_t j = 0; j < blocks.size(); ++j)
            if (j != i) rest.push_back(blocks[j]);
        out.push_back(LabeledPartition::make(N, m, std::move(zero), std::move(rest)));
    }
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = 0; j < blocks.size(); ++j) {
            if (i == j) continue;
            if (blocks[i].elems.front() > blocks[j].elems.front()) continue;
            // merge blocks i (labels kept) and j (labels shifted by l)
            for (int l = 0; l < m; ++l) {
                LabeledPartition::Block merged = blocks[i];
                for (size_t k = 0; k < blocks[j].elems.size(); ++k) {
                    merged.elems.push_back(blocks[j].elems[k]);
                    merged.labels.push_back((blocks[j].labels[k] + l) % m);
                }
                std::vector<LabeledPartition::Block> rest{std::move(merged)};
                for (size_t t = 0; t < blocks.size(); ++t)
                    if (t != i && t != j) rest.push_back(blocks[t]);
                out.push_back(LabeledPartition::make(N, m, lambda.zero_block(), std::move(rest)));
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int LabeledPartitionPoset::index_of(const LabeledPartition& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || !(*it == p)) return -1;
    return static_cast<int>(it - elements.begin());
}

namespace {

LabeledPartitionPoset build_labeled_poset(int N, std::vector<LabeledPartition> elems) {
    std::sort(elems.begin(), elems.end());
    const int n = static_cast<int>(elems.size());
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[i] = N - elems[i].labeled_block_count();
    auto leq = [&](int x, int y) { return labeled_refines(elems[x], elems[y]); };
    FinitePoset poset(n, leq, std::move(rank));
    return LabeledPartitionPoset{std::move(elems), std::move(poset)};
}

// All labelings of one block (minimum forced to 0, others free mod m).
void for_each_labeling(const std::vector<int>& elems, int m,
                       const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> labels(elems.size(), 0);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == elems.size()) {
            emit(labels);
            return;
        }
        for (int l = 0; l < m; ++l) {
            labels[k] = l;
            rec(k + 1);
        }
        labels[k] = 0;
    };
    if (elems.size() <= 1)
        emit(labels);
    else
        rec(1);
}

// Partition `pool` (ascending) into labeled blocks subject to an optional
// shape rule, then emit every labeling choice.
void assemble_labeled_blocks(const std::vector<int>& pool, int m,
                             const std::function<bool(const std::vector<int>&)>& block_ok,
                             std::vector<LabeledPartition::Block>& acc,
                             const std::function<void()>& emit) {
    if (pool.empty()) {
        emit();
        return;
    }
    const int e = pool.front();
    std::vector<int> rest(pool.begin() + 1, pool.end());
    const int k = static_cast<int>(rest.size());
    // choose the block containing e as {e} u (subset of rest)
    for (uint32_t sub = 0; sub < (1u << k); ++sub) {
        std::vector<int> block{e};
        std::vector<int> remaining;
        for (int i = 0; i < k; ++i)
            (sub >> i & 1 ? block : remaining).push_back(rest[i]);
        if (!block_ok(block)) continue;
        for_each_labeling(block, m, [&](const std::vector<int>& labels) {
            acc.push_back(LabeledPartition::Block{block, labels});
            assemble_labeled_blocks(remaining, m, block_ok, acc, emit);
            acc.pop_back();
        });
    }
}

} // namespace

LabeledPartitionPoset dowling_lattice(int N, int modulus) {
    if (N < 1 || N > 6) throw ParameterError("dowling_lattice supported for 1 <= N <= 6");
    if (modulus < 1 || modulus > 4) throw ParameterError("dowling_lattice supported for m <= 4");
    std::vector<LabeledPartition> elems;
    // choose the zero block as {0} u S over subsets S of [N]
    std::vector<int> ground(N);
    for (int i = 0; i < N; ++i) ground[i] = i + 1;
    for (uint32_t s = 0; s < (1u << N); ++s) {
        std::vector<int> zero{0};
        std::vector<int> pool;
        for (int i = 0; i < N; ++i)
            (s >> i & 1 ? zero : pool).push_back(ground[i]);
        std::vector<LabeledPartition::Block> acc;
        assemble_labeled_blocks(
            pool, modulus, [](const std::vector<int>&) { return true; }, acc,
            [&]() { elems.push_back(LabeledPartition::make(N, modulus, zero, acc)); });
    }
    return build_labeled_poset(N, std::move(elems));
}

LabeledPartitionPoset homogenized_subposet(int n, int modulus) {
    if (n < 1 || n > 4) throw ParameterError("homogenized_subposet supported for 1 <= n <= 4");
    if (modulus < 1) throw ParameterError("modulus must be >= 1");
    const int N = 2 * n - 1;
    std::vector<int> ground(N);
    for (int i = 0; i < N; ++i) ground[i] = i + 1;
    auto block_ok = [](const std::vector<int>& b) {
        return b.size() == 1 || (b.front() % 2 == 1 && b.back() % 2 == 0);
    };
    std::vector<LabeledPartition> elems;
    for (uint32_t s = 0; s < (1u << N); ++s) {
        std::vector<int> zero{0};
        std::vector<int> pool;
        for (int i = 0; i < N; ++i)
            (s >> i & 1 ? zero : pool).push_back(ground[i]);
        if (zero.size() > 1 && zero[1] % 2 == 0) continue; // min(B0 \ {0}) must be odd
        std::vector<LabeledPartition::Block> acc;
        assemble_labeled_blocks(pool, modulus, block_ok, acc, [&]() {
            elems.push_back(LabeledPartition::make(N, modulus, zero, acc));
        });
    }
    return build_labeled_poset(N, std::move(elems));
}

LabeledPartition labeled_cycle_support(const LabeledPermutation& sigma) {
    const auto& ground = sigma.base().ground();
    if (ground.empty()) throw DomainError("labeled_cycle_support needs a nonempty permutation");
    const int two_n = ground.back();
    for (size_t i = 0; i < ground.size(); ++i)
        if (ground[i] != static_cast<int>(i) + 1)
            throw DomainError("labeled_cycle_support needs ground [2n]");
    std::vector<int> zero{0};
    std::vector<LabeledPartition::Block> blocks;
    for (const auto& cyc : sigma.base().cycles()) {
        if (std::find(cyc.begin(), cyc.end(), two_n) != cyc.end()) {
            for (int e : cyc)
                if (e != two_n) zero.push_back(e);
        } else {
            LabeledPartition::Block b;
            b.elems = cyc;
            std::sort(b.elems.begin(), b.elems.end());
            for (int e : b.elems) b.labels.push_back(sigma.label_of(e));
            blocks.push_back(std::move(b));
        }
    }
    return LabeledPartition::make(two_n - 1, sigma.modulus(), std::move(zero), std::move(blocks));
}

IntPolynomial gandhi(int n) {
    if (n < 0) throw ParameterError("gandhi requires n >= 0");
    if (n == 0) return IntPolynomial::t(); // consistent extension: x^2(G_0(x+1)-G_0(x)) = x^2
    IntPolynomial g = IntPolynomial::monomial(2); // G_1 = x^2
    for (int k = 2; k <= n; ++k) g = IntPolynomial::monomial(2) * (g.shift_variable(1) - g);
    return g;
}

Int scaled_reciprocal_eval(const IntPolynomial& g, int m, int pow) {
    if (m < 1) throw ParameterError("modulus must be >= 1");
    // m^pow * sum c_j m^{-j} = sum c_j m^{pow-j}; requires pow >= deg(g).
    if (g.degree() > pow) {
        Rat scale = 1;
        for (int j = 0; j < pow; ++j) scale *= m;
        Rat v = g.eval(Rat(1, m)) * scale;
        if (denominator(v) != 1) throw IntegrityError("scaled_reciprocal_eval: not an integer");
        return numerator(v);
    }
    Int acc = 0;
    Int mp = 1;
    // walk j = deg .. 0 with m^{pow-j}
    for (int j = 0; j < pow - g.degree(); ++j) mp *= m;
    for (int j = g.degree(); j >= 0; --j) {
        acc += g.coeff(j) * mp;
        mp *= m;
    }
    return acc;
}

} // namespace homlin
