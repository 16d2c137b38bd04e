#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sturan {

/// An r-uniform hypergraph on vertices labeled 1..n.
///
/// Edges are stored canonically: each edge strictly sorted, the edge list
/// sorted lexicographically. Immutable after construction, so instances can
/// be shared freely across threads.
class Hypergraph {
public:
    /// Validates and canonicalizes. Throws std::invalid_argument on an edge
    /// of wrong arity, a vertex outside [1, n], a repeated vertex inside an
    /// edge, or a duplicate edge.
    Hypergraph(int n, int r, std::vector<std::vector<int>> edges);

    static Hypergraph empty(int n, int r) { return Hypergraph(n, r, {}); }

    int vertex_count() const { return n_; }
    int uniformity() const { return r_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }

    /// Membership test; `edge` need not be pre-sorted.
    bool has_edge(std::vector<int> edge) const;

    bool operator==(const Hypergraph&) const = default;

private:
    int n_ = 0;
    int r_ = 2;
    std::vector<std::vector<int>> edges_;
};

/// A pattern hypergraph together with its automorphism count
/// |Aut(Q)| = |Inj(Q, Q)|. Build via pattern_of().
struct Pattern {
    Hypergraph graph;
    int q = 0;                ///< vertex count of the pattern
    std::int64_t aut_count = 1;
};

/// Sizes of the parts of a vertex partition; all parts nonempty.
struct PartitionSpec {
    std::vector<int> part_sizes;

    /// Throws if any size is < 1.
    explicit PartitionSpec(std::vector<int> sizes);

    int total() const;
    bool balanced() const;  ///< max size - min size <= 1
};

/// Balanced partition of n into m parts: the t = n mod m larger parts
/// (size s+1, where s = n / m) come first.
std::vector<int> balanced_part_sizes(int m, int n);

Hypergraph make_hypergraph(int n, int r, std::vector<std::vector<int>> edges);

/// Complete m-partite q-uniform hypergraph on n vertices with balanced
/// parts: all q-subsets meeting every part in at most one vertex.
/// Allows n < m (trailing parts are empty and contribute nothing).
/// Throws if m < q.
Hypergraph turan_hypergraph(int m, int q, int n);

/// Closed-form edge count of turan_hypergraph(m, q, n):
/// sum_i C(t,i) C(m-t,q-i) (s+1)^i s^(q-i), where n = m s + t.
std::int64_t turan_edge_count(int m, int q, int n);

/// Blowup of the 5-cycle: parts B_1..B_5, complete bipartite between
/// consecutive parts (indices mod 5). Requires exactly 5 positive sizes.
Hypergraph c5_blowup(const std::vector<int>& part_sizes);

// Small generator zoo used by verification families and the CLI.
Hypergraph complete_graph(int n);
Hypergraph complete_hypergraph(int n, int r);  ///< all r-subsets of [n]
Hypergraph path_graph(int n);                  ///< n >= 1 vertices, n-1 edges
Hypergraph cycle_graph(int n);                 ///< n >= 3
Hypergraph petersen_graph();
Hypergraph single_edge(int r);                 ///< K_r^r: one edge on r vertices

/// Result of an induced-subgraph operation. Vertices are relabeled to
/// 1..|S| preserving order; the maps record the relabeling.
struct InducedSubgraph {
    Hypergraph graph;
    std::vector<int> old_to_new;  ///< size n+1, index by old label; 0 = dropped
    std::vector<int> new_to_old;  ///< size |S|+1, index by new label
};

/// H[S]: keeps exactly the edges inside S. Throws on out-of-range vertices.
InducedSubgraph induced_subgraph(const Hypergraph& h, const std::vector<int>& keep);

/// H - v, shorthand for induced_subgraph on V \ {v}.
InducedSubgraph remove_vertex(const Hypergraph& h, int v);

/// Computes |Aut(Q)| by enumerating Inj(Q, Q). Throws if Q has no vertices.
Pattern pattern_of(const Hypergraph& q);

std::int64_t binomial(int n, int k);

}  // namespace sturan
