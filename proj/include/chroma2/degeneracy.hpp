#pragma once

#include <vector>

#include "chroma2/graph.hpp"

namespace chroma2 {

struct DegeneracyOrder {
    std::vector<int> order; // each vertex has <= degeneracy earlier neighbors
    int degeneracy = 0;
};

// Min-degree peeling with lowest-id tie break. The reported order is the
// reverse extraction sequence, so back-degrees are bounded by the degeneracy.
inline DegeneracyOrder degeneracy_order(const Graph& h) {
    int n = h.vertex_count();
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = h.degree(v);

    DegeneracyOrder res;
    std::vector<int> extraction;
    extraction.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
        gone[best] = 1;
        extraction.push_back(best);
        res.degeneracy = std::max(res.degeneracy, deg[best]);
        for (int u : h.neighbors(best))
            if (!gone[u]) --deg[u];
    }
    res.order.assign(extraction.rbegin(), extraction.rend());
    return res;
}

// Margin by which the square of a plane graph without 4-cycles stays
// degenerate: every vertex sees at most max_degree + 72 earlier
// square-neighbors in the certified order.
constexpr int k_back_degree_margin = 72;

struct DegeneracyCertificate {
    std::vector<int> order;       // order on the square's vertices
    std::vector<int> back_degrees; // per vertex, earlier square-neighbors
    int max_back_degree = 0;
    int bound = 0; // max_degree(g) + margin
    bool ok = false;
};

inline DegeneracyCertificate good_order_certificate(const Graph& g) {
    Graph h = square(g);
    DegeneracyOrder d = degeneracy_order(h);

    int n = g.vertex_count();
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[d.order[i]] = i;

    DegeneracyCertificate cert;
    cert.order = d.order;
    cert.back_degrees.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        int back = 0;
        for (int u : h.neighbors(v))
            if (position[u] < position[v]) ++back;
        cert.back_degrees[v] = back;
        cert.max_back_degree = std::max(cert.max_back_degree, back);
    }
    cert.bound = g.max_degree() + k_back_degree_margin;
    cert.ok = cert.max_back_degree <= cert.bound;
    return cert;
}

// First-fit coloring along the order; 1-based colors. Uses at most
// 1 + max back-degree colors.
inline std::vector<int> greedy_color_from_order(const Graph& h, const std::vector<int>& order) {
    int n = h.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw Error(ErrorKind::bad_argument, "order length != vertex count");
    std::vector<int> color(n, 0);
    std::vector<char> used(n + 2, 0);
    for (int v : order) {
        for (int u : h.neighbors(v))
            if (color[u] > 0) used[color[u]] = 1;
        int c = 1;
        while (used[c]) ++c;
        color[v] = c;
        for (int u : h.neighbors(v))
            if (color[u] > 0) used[color[u]] = 0;
    }
    return color;
}

inline int color_count(const std::vector<int>& coloring) {
    int k = 0;
    for (int c : coloring) k = std::max(k, c);
    return k;
}

} // namespace chroma2
