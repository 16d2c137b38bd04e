#pragma once

#include <cstdint>
#include <vector>

#include "sturan/hypergraph.hpp"

namespace sturan {

/// An injective homomorphism Q -> H, identified with the ordered tuple of
/// images of the pattern vertices u_1..u_q taken in label order.
using Embedding = std::vector<int>;

/// All injective homomorphisms from a pattern into a host, in lexicographic
/// tuple order.
struct EmbeddingList {
    int pattern_size = 0;  ///< q
    int host_size = 0;     ///< n
    std::vector<Embedding> items;

    std::int64_t count() const { return static_cast<std::int64_t>(items.size()); }
};

/// Backtracking enumeration of Inj(Q, H) with edge-consistency pruning.
/// Pattern vertices are visited most-constrained-first; the output is
/// sorted, so the result is independent of the visit order.
/// Throws std::invalid_argument on a uniformity mismatch.
EmbeddingList enumerate_injective(const Pattern& q, const Hypergraph& h);

/// inj(Q, H) = |Inj(Q, H)|.
std::int64_t inj_count(const Pattern& q, const Hypergraph& h);

/// N(Q, H) = inj(Q, H) / |Aut(Q)|. Throws std::logic_error if the division
/// were inexact (it never is, by orbit counting).
std::int64_t count_copies(const Pattern& q, const Hypergraph& h);

/// Q-degree of v: the number of embeddings whose image contains v.
std::int64_t q_degree(const Pattern& q, const Hypergraph& h, int v);

struct DegreeStats {
    std::int64_t min_degree = 0;  ///< delta_Q(H)
    double avg_degree = 0.0;      ///< d_Q(H) = q inj(Q,H) / n
};

DegreeStats degree_stats(const Pattern& q, const Hypergraph& h);

/// The ordered Q-link of v: the multiset { phi - v : phi in Inj(Q,H), v in phi },
/// stored as (tuple, multiplicity) pairs in lexicographic tuple order.
/// Total multiplicity equals the Q-degree of v; each multiplicity is <= q.
struct QLink {
    int vertex = 0;
    std::vector<std::pair<std::vector<int>, int>> tuples;

    std::int64_t total_multiplicity() const;
};

QLink q_link(const Pattern& q, const Hypergraph& h, int v);

}  // namespace sturan
