#include "sturan/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sturan {

namespace {

std::string edge_to_string(const std::vector<int>& e) {
    std::string s = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + "}";
}

}  // namespace

Hypergraph::Hypergraph(int n, int r, std::vector<std::vector<int>> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    for (auto& e : edges_) {
        if (static_cast<int>(e.size()) != r_)
            throw std::invalid_argument("edge " + edge_to_string(e) + " has arity " +
                                        std::to_string(e.size()) + ", expected " +
                                        std::to_string(r_));
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > n_)
                throw std::invalid_argument("vertex " + std::to_string(e[i]) +
                                            " out of range [1," + std::to_string(n_) + "]");
            if (i > 0 && e[i] == e[i - 1])
                throw std::invalid_argument("repeated vertex in edge " + edge_to_string(e));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("duplicate edge " + edge_to_string(*dup));
}

bool Hypergraph::has_edge(std::vector<int> edge) const {
    std::sort(edge.begin(), edge.end());
    return std::binary_search(edges_.begin(), edges_.end(), edge);
}

PartitionSpec::PartitionSpec(std::vector<int> sizes) : part_sizes(std::move(sizes)) {
    for (int s : part_sizes)
        if (s < 1) throw std::invalid_argument("partition parts must be nonempty");
}

int PartitionSpec::total() const {
    return std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
}

bool PartitionSpec::balanced() const {
    auto [mn, mx] = std::minmax_element(part_sizes.begin(), part_sizes.end());
    return part_sizes.empty() || *mx - *mn <= 1;
}

std::vector<int> balanced_part_sizes(int m, int n) {
    const int s = n / m, t = n % m;
    std::vector<int> sizes(m, s);
    for (int i = 0; i < t; ++i) sizes[i] = s + 1;
    return sizes;
}

Hypergraph make_hypergraph(int n, int r, std::vector<std::vector<int>> edges) {
    return Hypergraph(n, r, std::move(edges));
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

Hypergraph turan_hypergraph(int m, int q, int n) {
    if (m < q) throw std::invalid_argument("turan_hypergraph requires m >= q");
    if (q < 1 || n < 1) throw std::invalid_argument("turan_hypergraph requires q, n >= 1");

    // part_of[v] for v in 1..n under the balanced partition
    const auto sizes = balanced_part_sizes(m, n);
    std::vector<int> part_of(n + 1);
    {
        int v = 1;
        for (int p = 0; p < m; ++p)
            for (int i = 0; i < sizes[p]; ++i) part_of[v++] = p;
    }

    // Enumerate one vertex from each of q chosen nonempty parts.
    std::vector<std::vector<int>> part_members(m);
    for (int v = 1; v <= n; ++v) part_members[part_of[v]].push_back(v);

    std::vector<std::vector<int>> edges;
    std::vector<int> chosen_parts(q);
    std::vector<int> edge(q);
    auto pick_vertices = [&](auto&& self, int idx) -> void {
        if (idx == q) {
            edges.push_back(edge);
            return;
        }
        for (int v : part_members[chosen_parts[idx]]) {
            edge[idx] = v;
            self(self, idx + 1);
        }
    };
    auto pick_parts = [&](auto&& self, int idx, int first) -> void {
        if (idx == q) {
            pick_vertices(pick_vertices, 0);
            return;
        }
        for (int p = first; p < m; ++p) {
            if (part_members[p].empty()) continue;
            chosen_parts[idx] = p;
            self(self, idx + 1, p + 1);
        }
    };
    pick_parts(pick_parts, 0, 0);

    Hypergraph result(n, q, std::move(edges));
    return result;
}

std::int64_t turan_edge_count(int m, int q, int n) {
    const int s = n / m, t = n % m;
    auto ipow = [](std::int64_t base, int exp) {
        std::int64_t r = 1;
        while (exp-- > 0) r *= base;
        return r;
    };
    std::int64_t total = 0;
    for (int i = 0; i <= q; ++i) {
        // s == 0 makes s^(q-i) vanish except when i == q
        if (s == 0 && i < q) continue;
        total += binomial(t, i) * binomial(m - t, q - i) * ipow(s + 1, i) * ipow(s, q - i);
    }
    return total;
}

Hypergraph c5_blowup(const std::vector<int>& part_sizes) {
    if (part_sizes.size() != 5)
        throw std::invalid_argument("c5_blowup requires exactly 5 parts");
    PartitionSpec spec(part_sizes);  // rejects empty parts

    std::vector<std::vector<int>> members(5);
    int v = 1;
    for (int p = 0; p < 5; ++p)
        for (int i = 0; i < part_sizes[p]; ++i) members[p].push_back(v++);

    std::vector<std::vector<int>> edges;
    for (int p = 0; p < 5; ++p)
        for (int a : members[p])
            for (int b : members[(p + 1) % 5]) edges.push_back({a, b});
    return Hypergraph(spec.total(), 2, std::move(edges));
}

Hypergraph complete_graph(int n) { return complete_hypergraph(n, 2); }

Hypergraph complete_hypergraph(int n, int r) {
    std::vector<std::vector<int>> edges;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int first) -> void {
        if (static_cast<int>(cur.size()) == r) {
            edges.push_back(cur);
            return;
        }
        for (int v = first; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    if (n >= r) rec(rec, 1);
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph path_graph(int n) {
    std::vector<std::vector<int>> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
    return Hypergraph(n, 2, std::move(edges));
}

Hypergraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
    std::vector<std::vector<int>> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({1, n});
    return Hypergraph(n, 2, std::move(edges));
}

Hypergraph petersen_graph() {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i + 1, (i + 1) % 5 + 1});      // outer 5-cycle
        edges.push_back({i + 1, i + 6});                // spokes
        edges.push_back({i + 6, (i + 2) % 5 + 6});      // inner pentagram
    }
    return Hypergraph(10, 2, std::move(edges));
}

Hypergraph single_edge(int r) {
    std::vector<int> e(r);
    std::iota(e.begin(), e.end(), 1);
    return Hypergraph(r, r, {e});
}

InducedSubgraph induced_subgraph(const Hypergraph& h, const std::vector<int>& keep) {
    const int n = h.vertex_count();
    std::vector<char> in_set(n + 1, 0);
    for (int v : keep) {
        if (v < 1 || v > n)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        in_set[v] = 1;
    }

    InducedSubgraph out{Hypergraph::empty(0, h.uniformity()), {}, {}};
    out.old_to_new.assign(n + 1, 0);
    out.new_to_old.assign(1, 0);
    int next = 1;
    for (int v = 1; v <= n; ++v) {
        if (!in_set[v]) continue;
        out.old_to_new[v] = next++;
        out.new_to_old.push_back(v);
    }

    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges()) {
        bool inside = std::all_of(e.begin(), e.end(), [&](int v) { return in_set[v]; });
        if (!inside) continue;
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(out.old_to_new[v]);
        edges.push_back(std::move(mapped));
    }
    out.graph = Hypergraph(next - 1, h.uniformity(), std::move(edges));
    return out;
}

InducedSubgraph remove_vertex(const Hypergraph& h, int v) {
    if (v < 1 || v > h.vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    std::vector<int> keep;
    keep.reserve(h.vertex_count() - 1);
    for (int u = 1; u <= h.vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(h, keep);
}

}  // namespace sturan
