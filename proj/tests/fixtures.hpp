#pragma once

// Hand-built plane graphs and deterministic random instance builders shared
// by the test suites. Every builder is pure: the same arguments always give
// the same object, so frozen expectations stay stable.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "chroma2/generators.hpp"
#include "chroma2/graph.hpp"
#include "chroma2/kernel.hpp"
#include "chroma2/plane.hpp"

namespace fixtures {

using chroma2::Digraph;
using chroma2::Graph;
using chroma2::PlaneGraph;

// Unit cube drawn as a square inside a square; all six faces have length 4.
inline PlaneGraph cube_plane() {
    Graph g(8);
    for (int i = 0; i < 4; ++i) {
        g.add_edge(i, (i + 1) % 4);
        g.add_edge(4 + i, 4 + (i + 1) % 4);
        g.add_edge(i, 4 + i);
    }
    std::vector<std::pair<double, double>> xy = {
        {-2, -2}, {2, -2}, {2, 2}, {-2, 2}, {-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    return PlaneGraph(g, chroma2::detail::rotations_by_angle(g, xy));
}

// Dodecahedron as four concentric rings: outer pentagon o0..o4 (ids 0..4),
// spoke ring m0..m4 (5..9), zig ring w0..w4 (10..14) offset by half a step,
// inner pentagon n0..n4 (15..19). 3-regular, twelve pentagonal faces.
inline PlaneGraph dodecahedron_plane() {
    Graph g(20);
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        g.add_edge(i, j);                // outer cycle
        g.add_edge(i, 5 + i);            // spoke o-m
        g.add_edge(5 + i, 10 + i);       // m_i - w_i
        g.add_edge(5 + j, 10 + i);       // m_{i+1} - w_i
        g.add_edge(10 + i, 15 + i);      // w_i - n_i
        g.add_edge(15 + i, 15 + j);      // inner cycle
    }
    std::vector<std::pair<double, double>> xy(20);
    const double pi = 3.141592653589793;
    for (int i = 0; i < 5; ++i) {
        double a = pi / 2 - 2 * pi * i / 5;
        double b = a - pi / 5;
        xy[i] = {4.0 * std::cos(a), 4.0 * std::sin(a)};
        xy[5 + i] = {2.6 * std::cos(a), 2.6 * std::sin(a)};
        xy[10 + i] = {1.7 * std::cos(b), 1.7 * std::sin(b)};
        xy[15 + i] = {1.0 * std::cos(b), 1.0 * std::sin(b)};
    }
    return PlaneGraph(g, chroma2::detail::rotations_by_angle(g, xy));
}

// Icosahedron: apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11.
// Drawn with 0 in the center and 11 on the outer face; the rotation at 11
// cannot come from coordinates, so both cyclic directions are tried.
inline PlaneGraph icosahedron_plane() {
    Graph g(12);
    for (int i = 0; i < 5; ++i) {
        int u = 1 + i, un = 1 + (i + 1) % 5;
        int l = 6 + i, ln = 6 + (i + 1) % 5;
        g.add_edge(0, u);
        g.add_edge(u, un);
        g.add_edge(u, l);
        g.add_edge(u, ln);
        g.add_edge(l, ln);
        g.add_edge(l, 11);
    }
    std::vector<std::pair<double, double>> xy(12);
    const double pi = 3.141592653589793;
    xy[0] = {0.0, 0.0};
    for (int i = 0; i < 5; ++i) {
        double a = pi / 2 - 2 * pi * i / 5;
        xy[1 + i] = {1.0 * std::cos(a), 1.0 * std::sin(a)};
        xy[6 + i] = {2.2 * std::cos(a + pi / 5), 2.2 * std::sin(a + pi / 5)};
    }
    // Vertex 11 sits in the outer face: each ring vertex sends its edge to 11
    // radially outward, so 11 borrows a far point in that direction while the
    // ring rotations are computed, and its own rotation is the ring read
    // backwards (both cyclic directions are tried to settle the convention).
    std::vector<std::vector<int>> rot(12);
    for (int v = 0; v < 11; ++v) {
        std::vector<std::pair<double, double>> local = xy;
        local[11] = {xy[v].first * 40.0, xy[v].second * 40.0};
        rot[v] = chroma2::detail::rotations_by_angle(g, local)[v];
    }
    rot[11] = {6, 7, 8, 9, 10};
    PlaneGraph pg(g, rot);
    if (!chroma2::euler_check(pg)) {
        std::reverse(rot[11].begin(), rot[11].end());
        pg = PlaneGraph(g, rot);
    }
    return pg;
}

// Two triangles joined by a bridge: 0-1-2 and 3-4-5 with the cut edge 2-3.
// Faces: the two triangles and an outer face of length 8 that carries both
// darts of the bridge.
inline PlaneGraph two_triangle_bridge_plane() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    g.add_edge(2, 3);
    std::vector<std::pair<double, double>> xy = {
        {-3, 1}, {-3, -1}, {-2, 0}, {2, 0}, {3, 1}, {3, -1}};
    return PlaneGraph(g, chroma2::detail::rotations_by_angle(g, xy));
}

// Star with every edge subdivided once: center 0, middles 1..k, tips k+1..2k.
inline Graph subdivided_star(int k) {
    Graph g(1 + 2 * k);
    for (int i = 1; i <= k; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, k + i);
    }
    return g;
}

// Two degree-(1+n5+n6) hubs v=0 and w=1 joined by a guard path through u=2,
// n5 chains v-a-b-w and n6 chains v-c-d-e-w, embedded as a book of parallel
// strands (guard first). With beta = deg(v) the hubs are the only big
// vertices; a,b,c,e merge into their hub, d is suppressed, and the strands
// collapse to parallel v-w edges whose consecutive 2-faces form regions.
struct BundleFixture {
    PlaneGraph pg;
    int beta = 0;
    std::vector<int> merged_into_v, merged_into_w, suppressed;
};

inline BundleFixture bundle_plane(int n5, int n6) {
    BundleFixture fx;
    int n = 3 + 2 * n5 + 3 * n6;
    Graph g(n);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    std::vector<int> at_v{2}, at_w{2};
    int next = 3;
    for (int i = 0; i < n5; ++i) {
        int a = next++, b = next++;
        g.add_edge(0, a);
        g.add_edge(a, b);
        g.add_edge(b, 1);
        at_v.push_back(a);
        at_w.push_back(b);
        fx.merged_into_v.push_back(a);
        fx.merged_into_w.push_back(b);
    }
    for (int i = 0; i < n6; ++i) {
        int c = next++, d = next++, e = next++;
        g.add_edge(0, c);
        g.add_edge(c, d);
        g.add_edge(d, e);
        g.add_edge(e, 1);
        at_v.push_back(c);
        at_w.push_back(e);
        fx.merged_into_v.push_back(c);
        fx.merged_into_w.push_back(e);
        fx.suppressed.push_back(d);
    }
    std::vector<std::vector<int>> rot(n);
    rot[0] = at_v;
    rot[1] = at_w;
    std::reverse(rot[1].begin(), rot[1].end());
    for (int v = 2; v < n; ++v) rot[v] = g.neighbors(v);
    fx.pg = PlaneGraph(g, rot);
    fx.beta = g.degree(0);
    return fx;
}

// One big hub v=0 of degree 9 and a small collector w=1 of degree 5, joined
// by five chains v-x_i-y_i-w (x_i ids 2..6, y_i ids 7..11). Two triangles
// hang off the hub (v,12,13 and v,2,14) and 15 is a pendant neighbor of v.
// With beta = 9 every x and 14, 15 merge into v, every y is suppressed, and
// the triangles turn into loops at v; w stays, so no region appears.
inline PlaneGraph hub_fan_plane() {
    Graph g(16);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(0, 2 + i);
        g.add_edge(2 + i, 7 + i);
        g.add_edge(7 + i, 1);
    }
    g.add_edge(0, 12);
    g.add_edge(12, 13);
    g.add_edge(0, 13);
    g.add_edge(0, 14);
    g.add_edge(2, 14);
    g.add_edge(0, 15);
    std::vector<std::vector<int>> rot(16);
    rot[0] = {14, 2, 3, 4, 5, 6, 12, 13, 15};
    rot[1] = {11, 10, 9, 8, 7};
    rot[2] = {0, 14, 7};
    for (int i = 1; i < 5; ++i) rot[2 + i] = {0, 7 + i};
    for (int i = 0; i < 5; ++i) rot[7 + i] = {2 + i, 1};
    rot[12] = {0, 13};
    rot[13] = {12, 0};
    rot[14] = {0, 2};
    rot[15] = {0};
    return PlaneGraph(g, rot);
}

// Random two-hub instance that exercises the whole reduction pipeline:
// hubs 0 and 1, one guard strand, a shuffled mix of direct / length-3 /
// length-4 strands, optional hub triangles (loops after contraction) and an
// optional three-chain satellite around a surviving degree-3 center. A
// direct strand excludes length-3 strands, and only one guard exists, so the
// result never contains a 4-cycle; beta is fixed at 6 and only the hubs
// reach it.
struct PipelineInstance {
    PlaneGraph pg;
    int beta = 6;
};

inline PipelineInstance pipeline_corpus_plane(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    bool direct = pick(0, 1) == 1;
    int n5 = direct ? 0 : pick(2, 4);
    int n6 = direct ? pick(4, 6) : pick(1, 3);
    if (n5 + n6 + (direct ? 1 : 0) < 5) n6 = 5 - n5;
    bool loop1 = pick(0, 1) == 1, loop2 = pick(0, 1) == 1, sat = pick(0, 1) == 1;

    enum Strand { guard, straight, len3, len5 };
    std::vector<Strand> strands{guard};
    if (direct) strands.push_back(straight);
    for (int i = 0; i < n5; ++i) strands.push_back(len3);
    for (int i = 0; i < n6; ++i) strands.push_back(len5);
    std::shuffle(strands.begin(), strands.end(), rng);

    int n = 2;
    int u = -1;
    std::vector<std::array<int, 3>> interiors; // ids per strand, -1 padded
    for (Strand s : strands) {
        switch (s) {
            case guard: u = n++; interiors.push_back({u, -1, -1}); break;
            case straight: interiors.push_back({-1, -1, -1}); break;
            case len3: interiors.push_back({n, n + 1, -1}); n += 2; break;
            case len5: interiors.push_back({n, n + 1, n + 2}); n += 3; break;
        }
    }
    int l1a = -1, l1b = -1, l2a = -1, l2b = -1, sc = -1;
    std::array<int, 3> sx{}, sy{};
    if (loop1) { l1a = n++; l1b = n++; }
    if (loop2) { l2a = n++; l2b = n++; }
    if (sat) {
        sc = n++;
        for (int i = 0; i < 3; ++i) { sx[i] = n++; sy[i] = n++; }
    }

    Graph g(n);
    std::vector<int> darts1, darts2;
    for (std::size_t i = 0; i < strands.size(); ++i) {
        auto [p, q, r] = interiors[i];
        switch (strands[i]) {
            case guard:
                g.add_edge(0, p);
                g.add_edge(p, 1);
                darts1.push_back(p);
                darts2.push_back(p);
                break;
            case straight:
                g.add_edge(0, 1);
                darts1.push_back(1);
                darts2.push_back(0);
                break;
            case len3:
                g.add_edge(0, p);
                g.add_edge(p, q);
                g.add_edge(q, 1);
                darts1.push_back(p);
                darts2.push_back(q);
                break;
            case len5:
                g.add_edge(0, p);
                g.add_edge(p, q);
                g.add_edge(q, r);
                g.add_edge(r, 1);
                darts1.push_back(p);
                darts2.push_back(r);
                break;
        }
    }
    std::reverse(darts2.begin(), darts2.end());
    if (loop1) {
        g.add_edge(0, l1a);
        g.add_edge(l1a, l1b);
        g.add_edge(0, l1b);
        int gap = pick(0, static_cast<int>(darts1.size()));
        darts1.insert(darts1.begin() + gap, {l1a, l1b});
    }
    if (loop2) {
        g.add_edge(1, l2a);
        g.add_edge(l2a, l2b);
        g.add_edge(1, l2b);
        int gap = pick(0, static_cast<int>(darts2.size()));
        darts2.insert(darts2.begin() + gap, {l2a, l2b});
    }
    if (sat) {
        for (int i = 0; i < 3; ++i) {
            g.add_edge(sc, sy[i]);
            g.add_edge(sy[i], sx[i]);
            g.add_edge(sx[i], 0);
        }
        int gap = pick(0, static_cast<int>(darts1.size()));
        darts1.insert(darts1.begin() + gap, {sx[0], sx[1], sx[2]});
    }

    std::vector<std::vector<int>> rot(n);
    rot[0] = darts1;
    rot[1] = darts2;
    for (int v = 2; v < n; ++v) rot[v] = g.neighbors(v);
    if (sat) rot[sc] = {sy[2], sy[1], sy[0]};
    PipelineInstance inst;
    inst.pg = PlaneGraph(g, rot);
    return inst;
}

// Erdos-Renyi graph on n labeled vertices.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Random digraph biased toward symmetric pairs, resampled until it is
// kernel-perfect. One-way arcs keep the instances from being plain graphs.
inline Digraph random_kernel_perfect_digraph(std::mt19937_64& rng, int n) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        Digraph d(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                switch (rng() % 5) {
                    case 0:
                    case 1: break;
                    case 2: d.add_arc(u, v); d.add_arc(v, u); break;
                    case 3: d.add_arc(u, v); break;
                    case 4: d.add_arc(v, u); break;
                }
            }
        if (chroma2::is_kernel_perfect(d)) return d;
    }
    throw chroma2::Error(chroma2::ErrorKind::bad_argument,
                         "no kernel-perfect sample found", {n});
}

// Per-vertex lists of size out-degree + 1 with distinct colors from 1..12.
inline std::vector<std::vector<int>> lists_beating_out_degree(std::mt19937_64& rng,
                                                              const Digraph& d) {
    std::vector<std::vector<int>> lists(d.vertex_count());
    std::vector<int> palette(12);
    for (int i = 0; i < 12; ++i) palette[i] = i + 1;
    for (int v = 0; v < d.vertex_count(); ++v) {
        std::shuffle(palette.begin(), palette.end(), rng);
        lists[v].assign(palette.begin(), palette.begin() + d.out_degree(v) + 1);
        std::sort(lists[v].begin(), lists[v].end());
    }
    return lists;
}

// Small instance (two 7-cliques, unit parameters) whose orientation can be
// checked for kernel-perfection exhaustively, and a scaled instance (two
// 60-cliques, caps 3/3/4) for the coloring pipeline.
inline chroma2::TwoCliqueInstance small_two_clique_instance(std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    int n1 = 7, n2 = 7;
    std::vector<int> is(n1), js(n2);
    for (int i = 0; i < n1; ++i) is[i] = i;
    for (int j = 0; j < n2; ++j) js[j] = j;
    std::shuffle(is.begin(), is.end(), rng);
    std::shuffle(js.begin(), js.end(), rng);
    int cross_count = pick(0, 4);
    std::vector<std::pair<int, int>> cross;
    for (int c = 0; c < cross_count; ++c) cross.emplace_back(is[c], js[c]);

    chroma2::TwoCliqueInstance inst;
    inst.h = chroma2::two_clique_graph(n1, n2, cross);
    for (int v = 0; v < n1; ++v) inst.b1.push_back(v);
    for (int v = 0; v < n2; ++v) inst.b2.push_back(n1 + v);
    int k1 = pick(0, 2), k2 = pick(0, 2);
    std::shuffle(is.begin(), is.end(), rng);
    std::shuffle(js.begin(), js.end(), rng);
    inst.t1.assign(is.begin(), is.begin() + k1);
    inst.t2.assign(js.begin(), js.begin() + k2);
    for (int& v : inst.t2) v += n1;
    std::sort(inst.t1.begin(), inst.t1.end());
    std::sort(inst.t2.begin(), inst.t2.end());
    inst.cross_degree_cap = 1;
    inst.tail_size = 1;
    inst.list_slack = 1;
    return inst;
}

inline chroma2::TwoCliqueInstance scaled_two_clique_instance(std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    int n1 = 60, n2 = 60, cap = 3;
    std::vector<int> cross_deg(n1 + n2, 0);
    std::vector<std::pair<int, int>> cross;
    std::set<std::pair<int, int>> seen;
    int want = pick(0, 40);
    for (int tries = 0; tries < 400 && static_cast<int>(cross.size()) < want; ++tries) {
        int i = pick(0, n1 - 1), j = pick(0, n2 - 1);
        if (cross_deg[i] >= cap || cross_deg[n1 + j] >= cap) continue;
        if (!seen.insert({i, j}).second) continue;
        cross.emplace_back(i, j);
        ++cross_deg[i];
        ++cross_deg[n1 + j];
    }

    chroma2::TwoCliqueInstance inst;
    inst.h = chroma2::two_clique_graph(n1, n2, cross);
    for (int v = 0; v < n1; ++v) inst.b1.push_back(v);
    for (int v = 0; v < n2; ++v) inst.b2.push_back(n1 + v);
    std::vector<int> is(n1), js(n2);
    for (int i = 0; i < n1; ++i) is[i] = i;
    for (int j = 0; j < n2; ++j) js[j] = j;
    std::shuffle(is.begin(), is.end(), rng);
    std::shuffle(js.begin(), js.end(), rng);
    int k1 = pick(0, 5), k2 = pick(0, 5);
    inst.t1.assign(is.begin(), is.begin() + k1);
    inst.t2.assign(js.begin(), js.begin() + k2);
    for (int& v : inst.t2) v += n1;
    std::sort(inst.t1.begin(), inst.t1.end());
    std::sort(inst.t2.begin(), inst.t2.end());
    inst.cross_degree_cap = 3;
    inst.tail_size = 3;
    inst.list_slack = 4;
    return inst;
}

// Random correspondence assignment for a two-clique instance: capacities n on
// plain vertices and n - slack on T-vertices, with a random partial matching
// on every edge.
inline chroma2::CorrAssignment random_corr_assignment(std::mt19937_64& rng,
                                                      const chroma2::TwoCliqueInstance& inst) {
    const Graph& h = inst.h;
    int n = static_cast<int>(inst.b1.size());
    chroma2::CorrAssignment corr;
    corr.capacity.assign(h.vertex_count(), n);
    for (int v : inst.t1) corr.capacity[v] = n - inst.list_slack;
    for (int v : inst.t2) corr.capacity[v] = n - inst.list_slack;
    for (auto [u, v] : h.edges()) {
        int cap = std::min(corr.capacity[u], corr.capacity[v]);
        int size = static_cast<int>(rng() % static_cast<std::uint64_t>(cap + 1));
        std::vector<int> a(corr.capacity[u]), b(corr.capacity[v]);
        for (int i = 0; i < corr.capacity[u]; ++i) a[i] = i;
        for (int i = 0; i < corr.capacity[v]; ++i) b[i] = i;
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < size; ++i) pairs.emplace_back(a[i], b[i]);
        corr.matchings[{u, v}] = pairs;
    }
    return corr;
}

} // namespace fixtures
