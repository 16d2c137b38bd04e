#include "sturan/embeddings.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sturan {

namespace {

// Orders pattern vertices most-constrained-first: start at a maximum-degree
// vertex, then repeatedly take the vertex with the most already-placed
// neighbors (ties: higher degree, then lower label). Isolated pattern
// vertices end up last, where they only cost the injectivity filter.
std::vector<int> visit_order(const Hypergraph& q) {
    const int nq = q.vertex_count();
    std::vector<int> degree(nq + 1, 0);
    std::vector<std::vector<char>> coincident(nq + 1, std::vector<char>(nq + 1, 0));
    for (const auto& e : q.edges())
        for (int a : e)
            for (int b : e)
                if (a != b) {
                    if (!coincident[a][b]) ++degree[a];
                    coincident[a][b] = 1;
                }

    std::vector<int> order;
    std::vector<char> placed(nq + 1, 0);
    for (int step = 0; step < nq; ++step) {
        int best = -1, best_links = -1, best_degree = -1;
        for (int v = 1; v <= nq; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order) links += coincident[v][u];
            if (links > best_links ||
                (links == best_links && degree[v] > best_degree)) {
                best = v;
                best_links = links;
                best_degree = degree[v];
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    return order;
}

struct Enumerator {
    const Hypergraph& q;
    const Hypergraph& h;
    std::vector<int> order;            // pattern vertices in visit order
    std::vector<int> position;         // pattern vertex -> index in order
    // Q-edges grouped by the step at which their last vertex is placed.
    std::vector<std::vector<const std::vector<int>*>> edges_closing_at;
    std::vector<int> image;            // pattern vertex -> host vertex, 0 = unset
    std::vector<char> used;            // host vertex in use
    std::vector<char> adjacency;       // r == 2 fast path, size (n+1)^2
    std::vector<Embedding>* out = nullptr;

    Enumerator(const Hypergraph& q_, const Hypergraph& h_) : q(q_), h(h_) {
        order = visit_order(q);
        const int nq = q.vertex_count();
        position.assign(nq + 1, 0);
        for (int i = 0; i < nq; ++i) position[order[i]] = i;
        edges_closing_at.assign(nq, {});
        for (const auto& e : q.edges()) {
            int last = 0;
            for (int v : e) last = std::max(last, position[v]);
            edges_closing_at[last].push_back(&e);
        }
        image.assign(nq + 1, 0);
        used.assign(h.vertex_count() + 1, 0);
        if (h.uniformity() == 2) {
            const int n = h.vertex_count();
            adjacency.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
            for (const auto& e : h.edges()) {
                adjacency[static_cast<std::size_t>(e[0]) * (n + 1) + e[1]] = 1;
                adjacency[static_cast<std::size_t>(e[1]) * (n + 1) + e[0]] = 1;
            }
        }
    }

    bool image_edge_ok(const std::vector<int>& pattern_edge) const {
        if (!adjacency.empty()) {
            const int n = h.vertex_count();
            return adjacency[static_cast<std::size_t>(image[pattern_edge[0]]) * (n + 1) +
                             image[pattern_edge[1]]];
        }
        std::vector<int> img;
        img.reserve(pattern_edge.size());
        for (int v : pattern_edge) img.push_back(image[v]);
        return h.has_edge(std::move(img));
    }

    void extend(int step) {
        const int nq = q.vertex_count();
        if (step == nq) {
            Embedding tuple(nq);
            for (int v = 1; v <= nq; ++v) tuple[v - 1] = image[v];
            out->push_back(std::move(tuple));
            return;
        }
        const int pv = order[step];
        for (int hv = 1; hv <= h.vertex_count(); ++hv) {
            if (used[hv]) continue;
            image[pv] = hv;
            bool ok = true;
            for (const auto* e : edges_closing_at[step])
                if (!image_edge_ok(*e)) {
                    ok = false;
                    break;
                }
            if (ok) {
                used[hv] = 1;
                extend(step + 1);
                used[hv] = 0;
            }
        }
        image[pv] = 0;
    }
};

}  // namespace

EmbeddingList enumerate_injective(const Pattern& q, const Hypergraph& h) {
    if (q.graph.uniformity() != h.uniformity())
        throw std::invalid_argument("pattern and host uniformity differ");
    EmbeddingList list;
    list.pattern_size = q.q;
    list.host_size = h.vertex_count();
    if (q.q > h.vertex_count() || (q.graph.edge_count() > 0 && h.edge_count() == 0))
        return list;
    Enumerator en(q.graph, h);
    en.out = &list.items;
    en.extend(0);
    std::sort(list.items.begin(), list.items.end());
    return list;
}

std::int64_t inj_count(const Pattern& q, const Hypergraph& h) {
    return enumerate_injective(q, h).count();
}

std::int64_t count_copies(const Pattern& q, const Hypergraph& h) {
    const std::int64_t inj = inj_count(q, h);
    if (inj % q.aut_count != 0)
        throw std::logic_error("inj(Q,H) not divisible by |Aut(Q)|");
    return inj / q.aut_count;
}

std::int64_t q_degree(const Pattern& q, const Hypergraph& h, int v) {
    if (v < 1 || v > h.vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    const auto list = enumerate_injective(q, h);
    std::int64_t degree = 0;
    for (const auto& phi : list.items)
        if (std::find(phi.begin(), phi.end(), v) != phi.end()) ++degree;
    return degree;
}

DegreeStats degree_stats(const Pattern& q, const Hypergraph& h) {
    const int n = h.vertex_count();
    const auto list = enumerate_injective(q, h);
    std::vector<std::int64_t> degree(n + 1, 0);
    for (const auto& phi : list.items)
        for (int v : phi) ++degree[v];
    DegreeStats stats;
    stats.min_degree = n > 0 ? *std::min_element(degree.begin() + 1, degree.end()) : 0;
    stats.avg_degree = n > 0 ? static_cast<double>(q.q) * list.count() / n : 0.0;
    return stats;
}

std::int64_t QLink::total_multiplicity() const {
    std::int64_t total = 0;
    for (const auto& [tuple, mult] : tuples) total += mult;
    return total;
}

Pattern pattern_of(const Hypergraph& q) {
    if (q.vertex_count() < 1)
        throw std::invalid_argument("pattern must have at least one vertex");
    Pattern p{q, q.vertex_count(), 1};
    p.aut_count = inj_count(p, q);  // |Aut(Q)| = |Inj(Q, Q)|
    return p;
}

QLink q_link(const Pattern& q, const Hypergraph& h, int v) {
    if (v < 1 || v > h.vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    const auto list = enumerate_injective(q, h);
    std::map<std::vector<int>, int> mult;
    for (const auto& phi : list.items) {
        auto it = std::find(phi.begin(), phi.end(), v);
        if (it == phi.end()) continue;
        std::vector<int> rest;
        rest.reserve(phi.size() - 1);
        for (int u : phi)
            if (u != v) rest.push_back(u);
        ++mult[std::move(rest)];
    }
    QLink link;
    link.vertex = v;
    link.tuples.assign(mult.begin(), mult.end());
    return link;
}

}  // namespace sturan
