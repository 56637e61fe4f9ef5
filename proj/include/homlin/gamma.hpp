#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homlin/graph.hpp"
#include "homlin/permutation.hpp"

namespace homlin {

/// Bipartite graph on {1,3,...,2n-1} | {2,4,...,2n} with an edge between
/// 2i-1 and 2j exactly when i <= j.  Edges in lexicographic (i,j) order.
Graph gamma_graph(int n);

/// Total orders on the Gamma edge set (2i-1, 2j).
enum class GammaEdgeOrder {
    odd_asc_even_desc,  // key (i, -j): ascending odd endpoint, descending even
    even_asc_odd_desc,  // key (j, -i)
    lex,                // key (i, j)
    colex,              // key (j, i)
};
std::string to_string(GammaEdgeOrder o);

Graph gamma_graph_ordered(int n, GammaEdgeOrder order);

/// Induced subposet of Pi_2n of partitions whose nonsingleton blocks all
/// have odd minimum and even maximum, built by direct block assembly.
PartitionPoset gamma_subposet(int n);

/// Rooted forest on a subset of Z+ where each tree is rooted at its largest
/// node, internal odd nodes lie below all their descendants with even
/// children, and internal even nodes lie above all their descendants with
/// odd children ("increasing-decreasing").
struct IDForest {
    std::vector<int> nodes;      // ascending
    std::map<int, int> parent;   // child -> parent; roots omitted

    std::vector<int> roots() const;
    int tree_count() const { return static_cast<int>(roots().size()); }
    bool is_single_tree() const { return tree_count() == 1; }
    /// Normalized u < v pairs, ascending.
    std::vector<std::pair<int, int>> edge_set() const;
    /// Throws DomainError when the structure is not a valid ID forest.
    void validate() const;

    std::string to_edge_list() const;
    static IDForest from_edge_list(std::istream& in);

    friend bool operator==(const IDForest&, const IDForest&) = default;
    friend bool operator<(const IDForest& a, const IDForest& b) {
        return a.nodes != b.nodes ? a.nodes < b.nodes : a.parent < b.parent;
    }
};

/// All ID trees on node set A (possibly none, e.g. when max(A) is odd).
std::vector<IDForest> id_trees_on(const std::vector<int>& A);

/// All ID forests on [2n].
std::vector<IDForest> id_forests(int n);

/// f_{2n,k}: number of ID forests on [2n] with exactly k trees.
std::map<int, Int> f_counts(int n);

/// The bijection from ID trees on A to D-cycles on A: order children of even
/// nodes increasingly and of odd nodes decreasingly, traverse in postorder,
/// and read the word as a cycle.
Permutation psi(const IDForest& tree);

/// True iff, under the given edge order, the NBC sets of Gamma_2n are
/// exactly the edge sets of the ID forests on [2n].
bool nbc_id_forest_equality(int n, GammaEdgeOrder order);

/// Search utility: first candidate order for which the NBC/ID-forest
/// equality holds on Gamma_4..Gamma_2n_max.
std::optional<GammaEdgeOrder> find_id_edge_order(int n_max);

/// The order frozen into the test fixtures (discovered by the search).
inline constexpr GammaEdgeOrder kIdForestEdgeOrder = GammaEdgeOrder::odd_asc_even_desc;

} // namespace homlin
