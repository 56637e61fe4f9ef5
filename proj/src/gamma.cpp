#include "homlin/gamma.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace homlin {

namespace {

std::vector<std::pair<int, int>> gamma_edge_pairs(int n, GammaEdgeOrder order) {
    struct Keyed {
        std::pair<int, int> key;
        std::pair<int, int> edge;
    };
    std::vector<Keyed> keys;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            std::pair<int, int> key;
            switch (order) {
                case GammaEdgeOrder::odd_asc_even_desc: key = {i, -j}; break;
                case GammaEdgeOrder::even_asc_odd_desc: key = {j, -i}; break;
                case GammaEdgeOrder::lex: key = {i, j}; break;
                case GammaEdgeOrder::colex: key = {j, i}; break;
            }
            keys.push_back({key, {2 * i - 1, 2 * j}});
        }
    std::sort(keys.begin(), keys.end(),
              [](const Keyed& x, const Keyed& y) { return x.key < y.key; });
    std::vector<std::pair<int, int>> edges;
    edges.reserve(keys.size());
    for (const Keyed& k : keys) edges.push_back(k.edge);
    return edges;
}

} // namespace

std::string to_string(GammaEdgeOrder o) {
    switch (o) {
        case GammaEdgeOrder::odd_asc_even_desc: return "odd_asc_even_desc";
        case GammaEdgeOrder::even_asc_odd_desc: return "even_asc_odd_desc";
        case GammaEdgeOrder::lex: return "lex";
        case GammaEdgeOrder::colex: return "colex";
    }
    throw ParameterError("unknown edge order");
}

Graph gamma_graph(int n) { return gamma_graph_ordered(n, GammaEdgeOrder::lex); }

Graph gamma_graph_ordered(int n, GammaEdgeOrder order) {
    if (n < 1) throw ParameterError("gamma_graph needs n >= 1");
    std::vector<int> verts(2 * n);
    for (int i = 0; i < 2 * n; ++i) verts[i] = i + 1;
    return Graph::make(std::move(verts), gamma_edge_pairs(n, order));
}

namespace {

// Shared block-assembly walk: partitions of [N] whose every nonsingleton
// block has odd minimum and even maximum.  The open block always contains
// the smallest element not yet assigned, so each partition appears once.
void assemble_valid_partitions(int N, const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    std::vector<std::vector<int>> blocks;

    std::function<void(uint32_t)> assemble = [&](uint32_t remaining) {
        if (!remaining) {
            emit(blocks);
            return;
        }
        const int e = __builtin_ctz(remaining) + 1;
        const uint32_t rest = remaining & (remaining - 1);

        blocks.push_back({e});
        assemble(rest);
        if (e % 2 == 1) {
            std::function<void(uint32_t, int)> extend = [&](uint32_t avail, int from) {
                for (int f = from; f <= N; ++f) {
                    if (!(avail >> (f - 1) & 1)) continue;
                    blocks.back().push_back(f);
                    const uint32_t next = avail & ~(1u << (f - 1));
                    if (f % 2 == 0) assemble(next); // block may close at an even max
                    extend(next, f + 1);
                    blocks.back().pop_back();
                }
            };
            extend(rest, e + 1);
        }
        blocks.pop_back();
    };
    assemble(N == 32 ? 0xffffffffu : (1u << N) - 1);
}

} // namespace

PartitionPoset gamma_subposet(int n) {
    if (n < 1 || n > 5) throw ParameterError("gamma_subposet supported for 1 <= n <= 5");
    std::vector<SetPartition> elems;
    assemble_valid_partitions(
        2 * n, [&](const std::vector<std::vector<int>>& blocks) {
            elems.push_back(SetPartition::from_blocks(blocks));
        });
    return make_partition_poset(std::move(elems));
}

std::vector<int> IDForest::roots() const {
    std::vector<int> r;
    for (int v : nodes)
        if (!parent.count(v)) r.push_back(v);
    return r;
}

std::vector<std::pair<int, int>> IDForest::edge_set() const {
    std::vector<std::pair<int, int>> es;
    for (const auto& [c, p] : parent) es.emplace_back(std::min(c, p), std::max(c, p));
    std::sort(es.begin(), es.end());
    return es;
}

void IDForest::validate() const {
    std::set<int> node_set(nodes.begin(), nodes.end());
    if (node_set.size() != nodes.size()) throw DomainError("repeated node");
    for (const auto& [c, p] : parent)
        if (!node_set.count(c) || !node_set.count(p) || c == p)
            throw DomainError("parent map endpoints invalid");
    std::map<int, std::vector<int>> children;
    for (const auto& [c, p] : parent) children[p].push_back(c);
    for (int v : nodes) {
        int steps = 0, x = v;
        while (parent.count(x)) {
            x = parent.at(x);
            if (++steps > static_cast<int>(nodes.size())) throw DomainError("parent map has a cycle");
        }
    }
    std::function<std::vector<int>(int)> descendants = [&](int v) {
        std::vector<int> out;
        auto it = children.find(v);
        if (it == children.end()) return out;
        for (int c : it->second) {
            out.push_back(c);
            auto sub = descendants(c);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    };
    for (int v : nodes) {
        auto desc = descendants(v);
        if (!parent.count(v)) {
            for (int d : desc)
                if (d > v) throw DomainError("tree not rooted at its maximum");
        }
        auto it = children.find(v);
        if (it == children.end()) continue;
        if (v % 2 == 1) {
            for (int d : desc)
                if (!(v < d)) throw DomainError("internal odd node not below all descendants");
            for (int c : it->second)
                if (c % 2 == 1) throw DomainError("odd node with odd child");
        } else {
            for (int d : desc)
                if (!(v > d)) throw DomainError("internal even node not above all descendants");
            for (int c : it->second)
                if (c % 2 == 0) throw DomainError("even node with even child");
        }
    }
}

std::string IDForest::to_edge_list() const {
    std::ostringstream out;
    std::set<int> touched;
    for (const auto& [c, p] : parent) {
        out << std::min(c, p) << ' ' << std::max(c, p) << '\n';
        touched.insert(c);
        touched.insert(p);
    }
    for (int v : nodes)
        if (!touched.count(v)) out << v << '\n';
    return out.str();
}

IDForest IDForest::from_edge_list(std::istream& in) {
    Graph g = Graph::from_edge_list(in);
    // Orient every component toward its largest vertex.
    IDForest f;
    f.nodes = g.vertices;
    std::map<int, std::vector<int>> adj;
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::set<int> seen;
    for (auto it = f.nodes.rbegin(); it != f.nodes.rend(); ++it) {
        if (seen.count(*it)) continue;
        std::vector<int> stack{*it};
        seen.insert(*it);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (!seen.count(y)) {
                    seen.insert(y);
                    f.parent[y] = x;
                    stack.push_back(y);
                }
        }
    }
    if (f.parent.size() != g.edges.size()) throw DomainError("edge list is not a forest");
    f.validate();
    return f;
}

namespace {

// ID subtrees over a sorted node set, as child->parent maps.  A subtree
// hanging under an even node is rooted at its minimum (odd); one hanging
// under an odd node is rooted at its maximum (even).
using ParentMap = std::map<int, int>;

std::vector<ParentMap> odd_rooted(const std::vector<int>& S);
std::vector<ParentMap> even_rooted(const std::vector<int>& S);

// All ways to split elems into child subtrees of attach_to, where each block
// is enumerated by block_trees and its local root attaches to attach_to.
void child_partitions(const std::vector<int>& elems, bool blocks_odd_rooted, int attach_to,
                      std::vector<ParentMap>& out) {
    const int k = static_cast<int>(elems.size());
    std::vector<std::pair<int, std::vector<ParentMap>>> chosen; // (local root, trees)

    std::function<void(uint32_t)> rec = [&](uint32_t mask) {
        if (!mask) {
            ParentMap acc;
            std::function<void(size_t)> combine = [&](size_t bi) {
                if (bi == chosen.size()) {
                    out.push_back(acc);
                    return;
                }
                const auto& [local_root, trees] = chosen[bi];
                for (const ParentMap& t : trees) {
                    auto saved = acc;
                    for (const auto& [c, p] : t) acc[c] = p;
                    acc[local_root] = attach_to;
                    combine(bi + 1);
                    acc = std::move(saved);
                }
            };
            combine(0);
            return;
        }
        const uint32_t lowbit = mask & (-mask);
        for (uint32_t B = mask; B; B = (B - 1) & mask) {
            if (!(B & lowbit)) continue;
            std::vector<int> block;
            for (int i = 0; i < k; ++i)
                if (B >> i & 1) block.push_back(elems[i]);
            auto trees = blocks_odd_rooted ? odd_rooted(block) : even_rooted(block);
            if (trees.empty()) continue;
            int local_root = blocks_odd_rooted ? block.front() : block.back();
            chosen.push_back({local_root, std::move(trees)});
            rec(mask ^ B);
            chosen.pop_back();
        }
    };
    rec(k == 32 ? 0xffffffffu : (1u << k) - 1);
}

std::vector<ParentMap> odd_rooted(const std::vector<int>& S) {
    if (S.front() % 2 == 0) return {}; // a leaf child still obeys the parity rule
    if (S.size() == 1) return {ParentMap{}};
    std::vector<ParentMap> out;
    std::vector<int> rest(S.begin() + 1, S.end());
    child_partitions(rest, /*blocks_odd_rooted=*/false, S.front(), out);
    return out;
}

std::vector<ParentMap> even_rooted(const std::vector<int>& S) {
    if (S.back() % 2 == 1) return {};
    if (S.size() == 1) return {ParentMap{}};
    std::vector<ParentMap> out;
    std::vector<int> rest(S.begin(), S.end() - 1);
    child_partitions(rest, /*blocks_odd_rooted=*/true, S.back(), out);
    return out;
}

} // namespace

std::vector<IDForest> id_trees_on(const std::vector<int>& A) {
    std::vector<int> S = A;
    std::sort(S.begin(), S.end());
    if (std::adjacent_find(S.begin(), S.end()) != S.end())
        throw ParameterError("id_trees_on: repeated node");
    if (S.size() > 16) throw ParameterError("id_trees_on guarded to <= 16 nodes");
    if (S.empty()) return {};
    std::vector<IDForest> out;
    if (S.size() == 1) {
        IDForest f;
        f.nodes = S;
        out.push_back(std::move(f));
    } else {
        // a standalone tree is rooted at its maximum
        for (ParentMap& pm : even_rooted(S)) {
            IDForest f;
            f.nodes = S;
            f.parent = std::move(pm);
            out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IDForest> id_forests(int n) {
    if (n < 1 || n > 5) throw ParameterError("id_forests supported for 1 <= n <= 5");
    std::vector<IDForest> out;
    std::map<std::vector<int>, std::vector<IDForest>> tree_cache;
    auto trees_of = [&](const std::vector<int>& block) -> const std::vector<IDForest>& {
        auto it = tree_cache.find(block);
        if (it == tree_cache.end()) it = tree_cache.emplace(block, id_trees_on(block)).first;
        return it->second;
    };
    assemble_valid_partitions(2 * n, [&](const std::vector<std::vector<int>>& blocks) {
        // cartesian product of tree shapes over the blocks
        IDForest acc;
        std::function<void(size_t)> combine = [&](size_t bi) {
            if (bi == blocks.size()) {
                IDForest f = acc;
                std::sort(f.nodes.begin(), f.nodes.end());
                out.push_back(std::move(f));
                return;
            }
            for (const IDForest& t : trees_of(blocks[bi])) {
                auto saved_nodes = acc.nodes;
                auto saved_parent = acc.parent;
                acc.nodes.insert(acc.nodes.end(), t.nodes.begin(), t.nodes.end());
                for (const auto& [c, p] : t.parent) acc.parent[c] = p;
                combine(bi + 1);
                acc.nodes = std::move(saved_nodes);
                acc.parent = std::move(saved_parent);
            }
        };
        combine(0);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int, Int> f_counts(int n) {
    std::map<int, Int> out;
    for (const IDForest& f : id_forests(n)) out[f.tree_count()] += 1;
    return out;
}

Permutation psi(const IDForest& tree) {
    tree.validate();
    if (tree.nodes.empty()) throw DomainError("psi needs a nonempty tree");
    if (!tree.is_single_tree()) throw DomainError("psi expects a single ID tree");
    std::map<int, std::vector<int>> children;
    for (const auto& [c, p] : tree.parent) children[p].push_back(c);
    for (auto& [v, kids] : children) {
        std::sort(kids.begin(), kids.end());
        if (v % 2 == 1) std::reverse(kids.begin(), kids.end());
    }
    std::vector<int> word;
    std::function<void(int)> post = [&](int v) {
        auto it = children.find(v);
        if (it != children.end())
            for (int c : it->second) post(c);
        word.push_back(v);
    };
    post(tree.roots().front());
    return Permutation::from_cycles({word});
}

bool nbc_id_forest_equality(int n, GammaEdgeOrder order) {
    Graph g = gamma_graph_ordered(n, order);
    std::set<std::vector<std::pair<int, int>>> nbc;
    for (uint32_t mask : nbc_masks(g)) {
        std::vector<std::pair<int, int>> es;
        for (int e = 0; e < g.edge_count(); ++e)
            if (mask >> e & 1) es.push_back(g.edges[e]);
        std::sort(es.begin(), es.end());
        nbc.insert(std::move(es));
    }
    std::set<std::vector<std::pair<int, int>>> idf;
    for (const IDForest& f : id_forests(n)) idf.insert(f.edge_set());
    return nbc == idf;
}

std::optional<GammaEdgeOrder> find_id_edge_order(int n_max) {
    for (GammaEdgeOrder order :
         {GammaEdgeOrder::odd_asc_even_desc, GammaEdgeOrder::even_asc_odd_desc,
          GammaEdgeOrder::lex, GammaEdgeOrder::colex}) {
        bool ok = true;
        for (int n = 2; n <= n_max && ok; ++n) ok = nbc_id_forest_equality(n, order);
        if (ok) return order;
    }
    return std::nullopt;
}

} // namespace homlin
