#include "homlin/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace homlin {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Graph Graph::make(std::vector<int> vertices, std::vector<std::pair<int, int>> edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw DomainError("repeated vertex");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u == v) throw DomainError("loop edge");
        if (u > v) std::swap(u, v);
        if (!std::binary_search(vertices.begin(), vertices.end(), u) ||
            !std::binary_search(vertices.begin(), vertices.end(), v))
            throw DomainError("edge endpoint outside vertex set");
        if (!seen.insert({u, v}).second) throw DomainError("duplicate edge");
    }
    return Graph{std::move(vertices), std::move(edges)};
}

SetPartition Graph::components(uint32_t edge_mask) const {
    const int n = static_cast<int>(vertices.size());
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[vertices[i]] = i;
    UnionFind uf(n);
    for (int e = 0; e < edge_count(); ++e)
        if (edge_mask >> e & 1) uf.unite(idx[edges[e].first], idx[edges[e].second]);
    std::map<int, std::vector<int>> comp;
    for (int i = 0; i < n; ++i) comp[uf.find(i)].push_back(vertices[i]);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, verts] : comp) blocks.push_back(std::move(verts));
    return SetPartition::from_blocks(std::move(blocks));
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph Graph::from_edge_list(std::istream& in) {
    std::set<int> verts;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue; // blank line
        if (ls >> v) {
            edges.emplace_back(u, v);
            verts.insert(u);
            verts.insert(v);
        } else {
            verts.insert(u); // isolated vertex
        }
    }
    return Graph::make({verts.begin(), verts.end()}, std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 1) throw ParameterError("complete_graph needs n >= 1");
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i + 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return Graph::make(std::move(verts), std::move(edges));
}

std::vector<uint32_t> circuits(const Graph& g) {
    const int ne = g.edge_count();
    if (ne > 20) throw ParameterError("circuit enumeration guarded to <= 20 edges");
    std::vector<uint32_t> out;
    std::map<int, int> deg;
    for (uint32_t s = 1; s < (1u << ne); ++s) {
        deg.clear();
        int ecnt = 0;
        for (int e = 0; e < ne; ++e)
            if (s >> e & 1) {
                deg[g.edges[e].first]++;
                deg[g.edges[e].second]++;
                ++ecnt;
            }
        bool two_regular = true;
        for (const auto& [v, d] : deg)
            if (d != 2) {
                two_regular = false;
                break;
            }
        if (!two_regular || static_cast<int>(deg.size()) != ecnt) continue;
        // connected support <=> single cycle
        SetPartition parts = g.components(s);
        int nontrivial = 0;
        for (const auto& b : parts.blocks())
            if (b.size() > 1) ++nontrivial;
        if (nontrivial == 1) out.push_back(s);
    }
    return out;
}

std::vector<uint32_t> nbc_masks(const Graph& g) {
    const int ne = g.edge_count();
    std::vector<uint32_t> broken;
    for (uint32_t c : circuits(g)) broken.push_back(c & (c - 1)); // drop least edge
    std::vector<uint32_t> out;
    for (uint32_t s = 0; s < (1u << ne); ++s) {
        bool ok = true;
        for (uint32_t b : broken)
            if ((s & b) == b) {
                ok = false;
                break;
            }
        if (ok) out.push_back(s);
    }
    return out;
}

void nbc_sets(const Graph& g,
              const std::function<void(uint32_t, const SetPartition&)>& emit) {
    for (uint32_t s : nbc_masks(g)) emit(s, g.components(s));
}

int PartitionPoset::index_of(const SetPartition& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || !(*it == p)) return -1;
    return static_cast<int>(it - elements.begin());
}

PartitionPoset make_partition_poset(std::vector<SetPartition> elements) {
    std::sort(elements.begin(), elements.end());
    if (elements.empty()) throw DomainError("empty poset");
    const auto& ground = elements.front().ground();
    const int gmax = ground.empty() ? 0 : ground.back();

    // Flat block-id arrays make the refinement test a linear scan.
    const int n = static_cast<int>(elements.size());
    std::vector<std::vector<int>> block_id(n, std::vector<int>(gmax + 1, -1));
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) {
        if (elements[i].ground() != ground) throw DomainError("mixed grounds in poset");
        const auto& blocks = elements[i].blocks();
        for (size_t b = 0; b < blocks.size(); ++b)
            for (int e : blocks[b]) block_id[i][e] = static_cast<int>(b);
        rank[i] = static_cast<int>(ground.size()) - elements[i].block_count();
    }
    auto leq = [&](int x, int y) {
        // x refines y: endpoints of every x-block edge stay together in y.
        const auto& bx = elements[x].blocks();
        const auto& idy = block_id[y];
        for (const auto& blk : bx) {
            int target = idy[blk.front()];
            for (size_t k = 1; k < blk.size(); ++k)
                if (idy[blk[k]] != target) return false;
        }
        return true;
    };
    FinitePoset poset(n, leq, std::move(rank));
    return PartitionPoset{std::move(elements), std::move(poset)};
}

PartitionPoset bond_lattice(const Graph& g) {
    const int n = static_cast<int>(g.vertices.size());
    if (n > 10) throw ParameterError("bond_lattice guarded to <= 10 vertices");
    // Adjacency on vertex indices for the connectivity filter.
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[g.vertices[i]] = i;
    std::vector<uint32_t> adj(n, 0);
    for (const auto& [u, v] : g.edges) {
        adj[idx[u]] |= 1u << idx[v];
        adj[idx[v]] |= 1u << idx[u];
    }
    auto connected = [&](const std::vector<int>& block) {
        if (block.size() <= 1) return true;
        uint32_t want = 0;
        for (int e : block) want |= 1u << idx[e];
        uint32_t reach = 1u << idx[block.front()];
        uint32_t frontier = reach;
        while (frontier) {
            uint32_t next = 0;
            while (frontier) {
                int v = __builtin_ctz(frontier);
                frontier &= frontier - 1;
                next |= adj[v] & want & ~reach;
            }
            reach |= next;
            frontier = next;
        }
        return reach == want;
    };

    std::vector<SetPartition> elems;
    std::function<void(const SetPartition&)> sink = [&](const SetPartition& p) {
        for (const auto& b : p.blocks())
            if (!connected(b)) return;
        elems.push_back(p);
    };
    // Enumerate partitions of the vertex set (relabel through the index map).
    std::vector<int> verts = g.vertices;
    for_each_partition(n, [&](const SetPartition& p) {
        std::vector<std::vector<int>> blocks;
        for (const auto& b : p.blocks()) {
            std::vector<int> blk;
            for (int e : b) blk.push_back(verts[e - 1]);
            blocks.push_back(std::move(blk));
        }
        sink(SetPartition::from_blocks(std::move(blocks)));
    });
    return make_partition_poset(std::move(elems));
}

bool whitney_rota_check(const Graph& g, const PartitionPoset& bond) {
    std::map<std::string, Int> nbc_count;
    nbc_sets(g, [&](uint32_t, const SetPartition& pi) { nbc_count[pi.to_string()] += 1; });
    Int total_nbc = 0;
    for (int i = 0; i < bond.poset.size(); ++i) {
        Int mu = bond.poset.mobius_from_bottom(i);
        Int expected = bond.poset.rank(i) % 2 == 0 ? mu : Int(-mu);
        auto it = nbc_count.find(bond.elements[i].to_string());
        Int actual = it == nbc_count.end() ? Int(0) : it->second;
        if (expected != actual) return false;
        total_nbc += actual;
    }
    // Every NBC set must induce a partition inside the bond lattice.
    Int all = 0;
    for (const auto& [key, v] : nbc_count) all += v;
    return all == total_nbc;
}

} // namespace homlin
