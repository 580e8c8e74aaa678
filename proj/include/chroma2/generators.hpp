#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "chroma2/plane.hpp"

namespace chroma2 {

inline Graph cycle_graph(int n) {
    if (n < 3) throw Error(ErrorKind::bad_argument, "cycle needs n >= 3", {n});
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path_graph(int n) {
    if (n < 1) throw Error(ErrorKind::bad_argument, "path needs n >= 1", {n});
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

// Star K_{1,n-1}: center 0.
inline Graph star_graph(int n) {
    if (n < 2) throw Error(ErrorKind::bad_argument, "star needs n >= 2", {n});
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

inline Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);      // outer 5-cycle
        g.add_edge(i, i + 5);            // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return g;
}

// Three outer vertices v1,v2,v3 (ids 0,1,2) with edges v1v2 and v2v3, plus
// three fans of shared degree-2 neighbors sized a (v1,v2), b (v1,v3),
// c (v2,v3). Every pair of vertices ends within distance two, so the square
// is complete on 3+a+b+c vertices.
inline Graph three_fan_graph(int a, int b, int c) {
    Graph g(3 + a + b + c);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    int id = 3;
    for (int i = 0; i < a; ++i, ++id) {
        g.add_edge(0, id);
        g.add_edge(1, id);
    }
    for (int i = 0; i < b; ++i, ++id) {
        g.add_edge(0, id);
        g.add_edge(2, id);
    }
    for (int i = 0; i < c; ++i, ++id) {
        g.add_edge(1, id);
        g.add_edge(2, id);
    }
    return g;
}

// Maximum-degree-k member of the family: fan sizes chosen so the three outer
// degrees stay <= k while the square clique reaches floor(3k/2)+1.
inline Graph wegner_family(int k) {
    if (k < 2) throw Error(ErrorKind::bad_argument, "wegner family needs k >= 2", {k});
    int a, b, c;
    if (k % 2 == 0) {
        a = k / 2 - 1;
        b = k / 2;
        c = k / 2 - 1;
    } else {
        a = (k - 1) / 2;
        b = (k - 1) / 2;
        c = (k - 3) / 2;
    }
    return three_fan_graph(a, b, c);
}

namespace detail {

// Clockwise rotation from straight-line coordinates: neighbors in order of
// decreasing angle, as seen with the y axis pointing up.
inline std::vector<std::vector<int>> rotations_by_angle(const Graph& g,
                                                        const std::vector<std::pair<double, double>>& xy) {
    std::vector<std::vector<int>> rot(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        rot[v] = g.neighbors(v);
        std::sort(rot[v].begin(), rot[v].end(), [&](int p, int q) {
            double ap = std::atan2(xy[p].second - xy[v].second, xy[p].first - xy[v].first);
            double aq = std::atan2(xy[q].second - xy[v].second, xy[q].first - xy[v].first);
            return ap > aq;
        });
    }
    return rot;
}

} // namespace detail

// The 17-vertex figure with fan sizes 5,5,4 (degrees 11,11,10), embedded as
// drawn: fans nested beside the straight outer edges.
inline PlaneGraph wegner_figure() {
    Graph g = three_fan_graph(5, 5, 4);
    std::vector<std::pair<double, double>> xy(17);
    xy[0] = {0.0, 10.0};   // v1
    xy[1] = {-10.0, 0.0};  // v2
    xy[2] = {10.0, 0.0};   // v3
    const double s = 0.5 * 0.7071;
    for (int i = 1; i <= 5; ++i) xy[2 + i] = {-5.0 + s * i, 5.0 - s * i};
    for (int i = 1; i <= 5; ++i) xy[7 + i] = {5.0 - s * i, 5.0 - s * i};
    for (int i = 1; i <= 4; ++i) xy[12 + i] = {0.0, -0.6 * i};
    return PlaneGraph(g, detail::rotations_by_angle(g, xy));
}

// k-cycle with every edge replaced by K_{2,t}: hubs 0..k-1 keep the cycle
// positions, edge i carries fresh degree-2 vertices k + i*t .. k + i*t + t-1.
inline Graph gadget(int k, int t) {
    if (k < 3) throw Error(ErrorKind::bad_argument, "gadget needs k >= 3", {k});
    if (k % 2 == 0) throw Error(ErrorKind::bad_parity, "gadget needs odd k", {k});
    if (t < 1) throw Error(ErrorKind::bad_argument, "gadget needs t >= 1", {t});
    Graph g(k + k * t);
    for (int i = 0; i < k; ++i) {
        int h1 = i, h2 = (i + 1) % k;
        for (int j = 0; j < t; ++j) {
            int mid = k + i * t + j;
            g.add_edge(h1, mid);
            g.add_edge(h2, mid);
        }
    }
    return g;
}

// Point-line incidence graph of the projective plane of prime order q:
// vertices 0..N-1 are points, N..2N-1 lines, N = q^2+q+1. (q+1)-regular,
// girth 6.
inline Graph incidence_pg(int q) {
    if (q < 2 || q > 7) throw Error(ErrorKind::bad_argument, "order must lie in [2,7]", {q});
    for (int d = 2; d < q; ++d)
        if (q % d == 0) throw Error(ErrorKind::not_prime, "projective plane order must be prime", {q});

    // Homogeneous coordinates normalized so the first nonzero entry is 1.
    std::vector<std::array<int, 3>> pts;
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
    for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
    pts.push_back({0, 0, 1});

    int n = q * q + q + 1;
    Graph g(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int dot = pts[i][0] * pts[j][0] + pts[i][1] * pts[j][1] + pts[i][2] * pts[j][2];
            if (dot % q == 0) g.add_edge(i, n + j);
        }
    return g;
}

// Random plane graph without 4-cycles: grow a random plane triangulation by
// repeated face subdivision, then delete one edge of every 4-cycle and prune
// vertices of degree <= 1. Deterministic for a fixed seed; vertex ids are
// compacted at the end.
inline PlaneGraph random_plane_c4free(int n, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorKind::bad_argument, "need n >= 3", {n});
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };

    // Triangulation as an explicit face list of oriented corner triples.
    std::vector<std::vector<int>> rot(3);
    rot[0] = {1, 2};
    rot[1] = {2, 0};
    rot[2] = {0, 1};
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 2, 1}};
    auto insert_after = [&](int at, int anchor, int added) {
        auto& r = rot[at];
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] == anchor) {
                r.insert(r.begin() + i + 1, added);
                return;
            }
        throw Error(ErrorKind::invalid_rotation, "anchor neighbor missing");
    };
    for (int x = 3; x < n; ++x) {
        std::size_t fi = pick(faces.size());
        auto [a, b, c] = faces[fi];
        rot.push_back({a, c, b});
        insert_after(b, a, x);
        insert_after(c, b, x);
        insert_after(a, c, x);
        faces[fi] = {a, b, x};
        faces.push_back({b, c, x});
        faces.push_back({c, a, x});
    }

    // Mutable adjacency mirror of rot.
    auto degree = [&](int v) { return static_cast<int>(rot[v].size()); };
    auto remove_edge = [&](int u, int v) {
        rot[u].erase(std::find(rot[u].begin(), rot[u].end(), v));
        rot[v].erase(std::find(rot[v].begin(), rot[v].end(), u));
    };

    // Destroy 4-cycles. A 4-cycle exists iff two vertices share two common
    // neighbors, and every 4-cycle is seen from its minimum vertex v through
    // neighbors > v. Deleting an edge never creates a cycle, so after center
    // v scans clean we move on and never revisit it.
    std::vector<int> stamp(rot.size(), -1), via(rot.size(), -1);
    int round = 0;
    for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
        for (;;) {
            ++round;
            bool found = false;
            int cv = -1, cw = -1, cx = -1;
            for (int u : rot[v]) {
                if (u < v) continue;
                for (int w : rot[u]) {
                    if (w == v || w < v) continue;
                    if (stamp[w] == round && via[w] != u) {
                        cv = via[w];
                        cw = w;
                        cx = u; // 4-cycle v-cv-cw-cx
                        found = true;
                        break;
                    }
                    stamp[w] = round;
                    via[w] = u;
                }
                if (found) break;
            }
            if (!found) break;
            switch (pick(4)) {
                case 0: remove_edge(v, cv); break;
                case 1: remove_edge(cv, cw); break;
                case 2: remove_edge(cw, cx); break;
                default: remove_edge(cx, v); break;
            }
        }
    }

    // Prune low-degree vertices until min degree >= 2 (or nothing remains).
    std::vector<char> dead(rot.size(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
            if (dead[v] || degree(v) >= 2) continue;
            for (int u : std::vector<int>(rot[v]))
                remove_edge(v, u);
            dead[v] = 1;
            changed = true;
        }
    }

    std::vector<int> remap(rot.size(), -1);
    int nn = 0;
    for (int v = 0; v < static_cast<int>(rot.size()); ++v)
        if (!dead[v]) remap[v] = nn++;
    if (nn == 0) throw Error(ErrorKind::bad_argument, "generation degenerated to the empty graph");
    Graph g(nn);
    std::vector<std::vector<int>> rot2(nn);
    for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
        if (dead[v]) continue;
        for (int u : rot[v]) {
            rot2[remap[v]].push_back(remap[u]);
            if (remap[v] < remap[u]) g.add_edge(remap[v], remap[u]);
        }
    }
    return PlaneGraph(g, rot2);
}

} // namespace chroma2
