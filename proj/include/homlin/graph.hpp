#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "homlin/partition.hpp"
#include "homlin/poset.hpp"

namespace homlin {

/// Simple graph on positive-integer vertices.  The edge list position is the
/// edge order used by broken-circuit computations.
struct Graph {
    std::vector<int> vertices;              // ascending
    std::vector<std::pair<int, int>> edges; // each normalized u < v

    static Graph make(std::vector<int> vertices, std::vector<std::pair<int, int>> edges);
    int edge_count() const { return static_cast<int>(edges.size()); }

    /// Partition of the vertices into connected components of (V, S) where S
    /// is the edge subset selected by mask bits (bit i = edges[i]).
    SetPartition components(uint32_t edge_mask) const;

    /// Edge-list text form, one "u v" line per edge.
    std::string to_edge_list() const;
    static Graph from_edge_list(std::istream& in);
};

Graph complete_graph(int n);

/// All circuits (vertex-simple cycles) as edge masks.  Guarded to <= 20 edges.
std::vector<uint32_t> circuits(const Graph& g);

/// Masks of all NBC sets: edge subsets containing no broken circuit (a
/// circuit minus its least edge in the graph's edge order).  Ascending masks.
std::vector<uint32_t> nbc_masks(const Graph& g);

/// Streams each NBC set together with the partition it induces.
void nbc_sets(const Graph& g,
              const std::function<void(uint32_t, const SetPartition&)>& emit);

/// A graded poset whose elements are set partitions.
struct PartitionPoset {
    std::vector<SetPartition> elements;
    FinitePoset poset;

    int index_of(const SetPartition& p) const; // -1 when absent
};

/// Bond lattice of g: partitions whose blocks all induce connected
/// subgraphs, ordered by refinement, rank = |V| - #blocks.
PartitionPoset bond_lattice(const Graph& g);

/// Rota-Whitney: for every pi in the bond lattice,
/// (-1)^rk(pi) mu(0^,pi) = #{NBC sets S : pi_S = pi}, in g's edge order.
bool whitney_rota_check(const Graph& g, const PartitionPoset& bond);

/// Builds a graded partition poset from explicitly enumerated elements under
/// refinement order (shared by bond lattices and the Gamma subposets).
PartitionPoset make_partition_poset(std::vector<SetPartition> elements);

} // namespace homlin
