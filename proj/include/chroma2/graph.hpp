#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "chroma2/errors.hpp"

namespace chroma2 {

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {
        if (n < 0) throw Error(ErrorKind::bad_argument, "negative vertex count");
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error(ErrorKind::bad_argument, "loop edge in simple graph");
        if (has_edge(u, v)) throw Error(ErrorKind::bad_argument, "duplicate edge");
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        ++m_;
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int max_degree() const {
        int d = 0;
        for (const auto& a : adj_) d = std::max<int>(d, static_cast<int>(a.size()));
        return d;
    }

    int min_degree() const {
        if (adj_.empty()) return 0;
        int d = degree(0);
        for (const auto& a : adj_) d = std::min<int>(d, static_cast<int>(a.size()));
        return d;
    }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(m_);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    bool connected() const {
        int n = vertex_count();
        if (n <= 1) return true;
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj_[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++cnt;
                    q.push(v);
                }
        }
        return cnt == n;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw Error(ErrorKind::bad_argument, "vertex id out of range", {v});
    }

    static void insert_sorted(std::vector<int>& a, int v) {
        a.insert(std::upper_bound(a.begin(), a.end(), v), v);
    }

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// All vertices at distance exactly 1 or 2 from v, sorted, excluding v itself.
inline std::vector<int> distance2_neighborhood(const Graph& g, int v) {
    std::vector<char> mark(g.vertex_count(), 0);
    for (int u : g.neighbors(v)) {
        mark[u] = 1;
        for (int w : g.neighbors(u)) mark[w] = 1;
    }
    mark[v] = 0;
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (mark[u]) out.push_back(u);
    return out;
}

// Square of g: same vertex set, edges between vertices at distance <= 2.
inline Graph square(const Graph& g) {
    Graph h(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : distance2_neighborhood(g, v))
            if (v < u) h.add_edge(v, u);
    return h;
}

// Degree-threshold classification. big holds vertices of degree >= beta,
// small the rest; s_by_big_neighbors[i] lists small vertices with exactly i
// big neighbors (only observed counts appear as keys).
struct VertexClass {
    int beta = 0;
    std::vector<char> is_big;
    std::vector<int> big;
    std::vector<int> small;
    std::map<int, std::vector<int>> s_by_big_neighbors;

    int big_neighbor_count(const Graph& g, int v) const {
        int c = 0;
        for (int u : g.neighbors(v)) c += is_big[u];
        return c;
    }
};

inline VertexClass classify_vertices(const Graph& g, int beta) {
    if (beta <= 0) throw Error(ErrorKind::bad_argument, "beta must be positive");
    VertexClass vc;
    vc.beta = beta;
    vc.is_big.assign(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) >= beta) {
            vc.is_big[v] = 1;
            vc.big.push_back(v);
        } else {
            vc.small.push_back(v);
        }
    }
    for (int v : vc.small) vc.s_by_big_neighbors[vc.big_neighbor_count(g, v)].push_back(v);
    return vc;
}

// All simple cycles of the requested lengths, each reported once in canonical
// form: the minimum vertex first, then the rotation direction whose second
// vertex is smaller than its last. Search depth is capped to keep the
// exhaustive DFS tractable.
inline std::vector<std::vector<int>> forbidden_cycle_check(const Graph& g,
                                                           const std::set<int>& lengths,
                                                           int cap = 12) {
    if (cap < 3 || cap > 12)
        throw Error(ErrorKind::cap_exceeded, "cycle-search cap must lie in [3,12]", {cap});
    for (int len : lengths) {
        if (len < 3) throw Error(ErrorKind::bad_argument, "cycle length below 3", {len});
        if (len > cap)
            throw Error(ErrorKind::cap_exceeded, "requested cycle length exceeds cap", {len, cap});
    }
    if (lengths.empty()) return {};
    int max_len = *lengths.rbegin();

    std::vector<std::vector<int>> found;
    int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<int> path;

    // Root is always the minimum vertex of the cycle; larger vertices only.
    auto dfs = [&](auto&& self, int root, int v) -> void {
        for (int w : g.neighbors(v)) {
            if (w == root && path.size() >= 3) {
                int len = static_cast<int>(path.size());
                if (lengths.count(len) && path[1] < path.back())
                    found.push_back(path);
            }
            if (w <= root || on_path[w]) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self, root, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };

    for (int r = 0; r < n; ++r) {
        path = {r};
        on_path[r] = 1;
        dfs(dfs, r, r);
        on_path[r] = 0;
    }
    return found;
}

} // namespace chroma2
