#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "chroma2/graph.hpp"
#include "chroma2/multigraph.hpp"

namespace chroma2 {

// Small vertices here are all non-big vertices. A vertex is suppressible if
// it has degree 2 and no big vertex in its closed neighborhood; it is merged
// if it is small with exactly one big neighbor.
inline bool is_suppressible(const Graph& g, const VertexClass& vc, int v) {
    return !vc.is_big[v] && g.degree(v) == 2 && vc.big_neighbor_count(g, v) == 0;
}

inline bool is_merged(const Graph& g, const VertexClass& vc, int v) {
    return !vc.is_big[v] && vc.big_neighbor_count(g, v) == 1;
}

inline int merge_target(const Graph& g, const VertexClass& vc, int v) {
    for (int u : g.neighbors(v))
        if (vc.is_big[u]) return u;
    throw Error(ErrorKind::bad_argument, "vertex has no big neighbor", {v});
}

// Suppresses every degree-2 vertex away from big neighborhoods, then
// contracts each edge between a one-big-neighbor small vertex and its big
// neighbor. Vertex ids are preserved; suppressed and merged vertices become
// inactive. Provenance paths record the original path behind each edge.
inline MultiGraph build_g_prime(const PlaneGraph& pg, const VertexClass& vc) {
    const Graph& g = pg.g;
    for (auto [u, v] : g.edges())
        if (is_suppressible(g, vc, u) && is_suppressible(g, vc, v))
            throw Error(ErrorKind::adjacent_suppressible, "two adjacent suppressible vertices",
                        {u, v});

    MultiGraph mg = MultiGraph::from_plane(pg);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_suppressible(g, vc, v)) mg.suppress_vertex(v);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!is_merged(g, vc, v)) continue;
        int b = merge_target(g, vc, v);
        int eid = -1;
        for (const auto& d : mg.rotation[v])
            if (mg.dart_to(d) == b && !mg.is_loop(d.first)) {
                const auto& path = mg.edges[d.first].provenance;
                if (path.size() == 2) {
                    eid = d.first;
                    break;
                }
            }
        if (eid == -1)
            throw Error(ErrorKind::bad_argument, "contraction edge missing", {v, b});
        mg.contract_into(v, eid);
    }
    return mg;
}

struct EdgeType {
    int type = 0;            // 1..6
    std::vector<int> anchors; // interior vertices of the provenance path
};

// Classifies every live edge by its provenance pattern. Loops must come out
// as type 5; any path outside the six-pattern catalog is a contract
// violation and reported as unclassifiable.
inline std::map<int, EdgeType> classify_edge_types(const MultiGraph& gp, const Graph& g,
                                                   const VertexClass& vc) {
    std::map<int, EdgeType> out;
    for (std::size_t i = 0; i < gp.edges.size(); ++i) {
        const auto& e = gp.edges[i];
        if (!e.alive) continue;
        const auto& path = e.provenance;
        int id = static_cast<int>(i);
        auto fail = [&](const char* why) {
            return Error(ErrorKind::unclassifiable_edge, why,
                         {id, static_cast<long long>(path.size())});
        };
        if (path.size() < 2 || path.size() > 5) throw fail("provenance length out of range");
        EdgeType t;
        t.anchors.assign(path.begin() + 1, path.end() - 1);
        auto merged = [&](int x) { return is_merged(g, vc, x); };
        auto supp = [&](int x) { return is_suppressible(g, vc, x); };
        switch (path.size()) {
            case 2:
                t.type = 1;
                break;
            case 3: {
                int m = path[1];
                if (supp(m)) t.type = 4;
                else if (merged(m)) t.type = 2;
                else throw fail("middle vertex neither suppressed nor merged");
                break;
            }
            case 4: {
                int a = path[1], b = path[2];
                if (merged(a) && merged(b)) t.type = 5;
                else if (supp(a) && merged(b)) t.type = 3;
                else if (merged(a) && supp(b)) t.type = 3;
                else throw fail("interior pair outside the catalog");
                break;
            }
            case 5: {
                if (merged(path[1]) && supp(path[2]) && merged(path[3])) t.type = 6;
                else throw fail("interior triple outside the catalog");
                break;
            }
        }
        if (gp.is_loop(id) && t.type != 5) throw fail("loop not of type 5");
        bool u_big = vc.is_big[e.u], v_big = vc.is_big[e.v];
        if (u_big && v_big && t.type != 1 && t.type != 5 && t.type != 6)
            throw fail("big-big edge outside types 1, 5, 6");
        if ((!u_big || !v_big) && (t.type == 5 || t.type == 6) && !gp.is_loop(id))
            throw fail("small endpoint on a big-big type");
        out[id] = std::move(t);
    }
    return out;
}

inline MultiGraph build_g_double_prime(const MultiGraph& gp) {
    MultiGraph mg = gp;
    for (std::size_t e = 0; e < mg.edges.size(); ++e)
        if (mg.edges[e].alive && mg.is_loop(static_cast<int>(e)))
            mg.delete_edge(static_cast<int>(e));
    return mg;
}

// Removes all 2-faces by repeatedly deleting, from some 2-face bounded by two
// distinct parallel edges, the edge with the higher id. A run of r consecutive
// 2-faces separated from the rest of the surface needs r deletions; when the
// parallel edges close into a full cycle of 2-faces around the sphere, the
// last deletion kills two of them at once, so such a run needs one fewer.
inline MultiGraph build_g_triple_prime(const MultiGraph& gpp) {
    MultiGraph mg = gpp;
    auto expected_deletions = [&](const MultiFaceSet& fs) {
        std::vector<std::array<int, 2>> bigons;
        for (std::size_t f = 0; f < fs.faces.size(); ++f)
            if (fs.lengths[f] == 2 && fs.faces[f][0].first != fs.faces[f][1].first)
                bigons.push_back({fs.faces[f][0].first, fs.faces[f][1].first});
        std::map<int, std::vector<int>> by_edge;
        for (std::size_t i = 0; i < bigons.size(); ++i) {
            by_edge[bigons[i][0]].push_back(static_cast<int>(i));
            by_edge[bigons[i][1]].push_back(static_cast<int>(i));
        }
        int total = 0;
        std::vector<char> seen(bigons.size(), 0);
        for (std::size_t i = 0; i < bigons.size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> stack{static_cast<int>(i)};
            seen[i] = 1;
            int run_size = 0;
            std::set<int> run_edges;
            while (!stack.empty()) {
                int b = stack.back();
                stack.pop_back();
                ++run_size;
                for (int e : {bigons[b][0], bigons[b][1]}) {
                    run_edges.insert(e);
                    for (int nb : by_edge[e])
                        if (!seen[nb]) { seen[nb] = 1; stack.push_back(nb); }
                }
            }
            bool closed = static_cast<int>(run_edges.size()) == run_size;
            total += closed ? run_size - 1 : run_size;
        }
        return total;
    };
    int expected = expected_deletions(trace_faces(mg));
    int deleted = 0;
    while (true) {
        MultiFaceSet fs = trace_faces(mg);
        int target = -1;
        for (std::size_t f = 0; f < fs.faces.size(); ++f) {
            if (fs.lengths[f] != 2) continue;
            int e1 = fs.faces[f][0].first, e2 = fs.faces[f][1].first;
            if (e1 == e2) continue;
            target = std::max(e1, e2);
            break;
        }
        if (target == -1) break;
        mg.delete_edge(target);
        ++deleted;
    }
    if (deleted != expected)
        throw Error(ErrorKind::precondition, "2-face deletions diverged from the 2-face count",
                    {deleted, expected});
    return mg;
}

struct Region {
    int b1 = -1, b2 = -1;          // b1 < b2, both big
    std::vector<int> faces;        // consecutive 2-face ids in the loop-free graph
    std::vector<int> edge_ids;     // the run of parallel edges, in rotation order at b1
    bool cyclic = false;           // true when the bigons close into a cycle
    std::vector<int> interior_loops; // loop edge ids of the loop-bearing graph
    std::vector<int> b1_set, b2_set, d_set; // decomposition of the hidden vertices

    int size() const { return static_cast<int>(faces.size()); }
    std::vector<int> hidden_vertices() const {
        std::vector<int> all;
        all.insert(all.end(), b1_set.begin(), b1_set.end());
        all.insert(all.end(), b2_set.begin(), b2_set.end());
        all.insert(all.end(), d_set.begin(), d_set.end());
        std::sort(all.begin(), all.end());
        return all;
    }
};

// Finds all maximal runs of consecutive 2-faces whose boundary vertices are
// the same pair of big vertices, working on the loop-bearing multigraph (the
// 2-faces live in its loop-free derivative; loops embedded between two
// consecutive parallel edges of a run sit inside the region). Each region
// carries the vertices of the original graph that disappeared into its
// edges, split into neighbors merged into b1, neighbors merged into b2, and
// suppressed 2-vertices.
inline std::vector<Region> find_regions(const MultiGraph& gp, const Graph& g,
                                        const VertexClass& vc) {
    MultiGraph gpp = build_g_double_prime(gp);
    MultiFaceSet fs = trace_faces(gpp);

    // Bigons between distinct big vertices, grouped into maximal runs by
    // shared edges.
    std::vector<int> bigons;
    for (std::size_t f = 0; f < fs.faces.size(); ++f) {
        if (fs.lengths[f] != 2) continue;
        int e1 = fs.faces[f][0].first, e2 = fs.faces[f][1].first;
        if (e1 == e2) continue;
        int u = gpp.edges[e1].u, v = gpp.edges[e1].v;
        if (u == v || !vc.is_big[u] || !vc.is_big[v]) continue;
        bigons.push_back(static_cast<int>(f));
    }
    std::map<int, std::vector<int>> by_edge; // edge id -> bigons it bounds
    for (int f : bigons)
        for (const auto& d : fs.faces[f]) by_edge[d.first].push_back(f);

    std::vector<Region> regions;
    std::set<int> used;
    for (int f0 : bigons) {
        if (used.count(f0)) continue;
        // Flood the run.
        std::vector<int> run{f0};
        used.insert(f0);
        for (std::size_t i = 0; i < run.size(); ++i)
            for (const auto& d : fs.faces[run[i]])
                for (int f : by_edge[d.first])
                    if (!used.count(f)) {
                        used.insert(f);
                        run.push_back(f);
                    }

        Region r;
        int u = gpp.edges[fs.faces[f0][0].first].u, v = gpp.edges[fs.faces[f0][0].first].v;
        r.b1 = std::min(u, v);
        r.b2 = std::max(u, v);

        // Edge multiset of the run; edges shared by two bigons are interior.
        std::map<int, int> edge_uses;
        for (int f : run)
            for (const auto& d : fs.faces[f]) ++edge_uses[d.first];
        for (auto [e, uses] : edge_uses) r.edge_ids.push_back(e);
        r.cyclic = true;
        for (auto [e, uses] : edge_uses)
            if (uses == 1) r.cyclic = false;

        // Order faces along the run: start from a face holding an extremal
        // edge (any face if cyclic) and follow shared edges.
        int start = run[0];
        if (!r.cyclic) {
            for (int f : run)
                for (const auto& d : fs.faces[f])
                    if (edge_uses[d.first] == 1) start = f;
        }
        std::vector<int> ordered{start};
        std::set<int> seen{start};
        while (ordered.size() < run.size()) {
            int cur = ordered.back();
            int next = -1;
            for (const auto& d : fs.faces[cur])
                for (int f : by_edge[d.first])
                    if (!seen.count(f)) next = f;
            if (next == -1) break;
            seen.insert(next);
            ordered.push_back(next);
        }
        r.faces = ordered;

        // Interior loops: walk each bigon's two corners in the loop-bearing
        // rotation; loop darts strictly inside a corner arc are inside the
        // region.
        std::set<int> loops;
        for (int f : r.faces) {
            for (int side = 0; side < 2; ++side) {
                MultiGraph::Dart arrive = fs.faces[f][side];
                MultiGraph::Dart depart = fs.faces[f][(side + 1) % 2];
                // The corner sits at the vertex where `arrive` lands.
                int corner = gpp.dart_to(arrive);
                MultiGraph::Dart from = MultiGraph::twin(arrive);
                const auto& rot = gp.rotation[corner];
                int pos = gp.dart_pos(corner, from);
                int deg = gp.degree(corner);
                for (int k = 1; k < deg; ++k) {
                    const MultiGraph::Dart& d = rot[(pos + k) % deg];
                    if (d == depart) break;
                    if (gp.is_loop(d.first)) loops.insert(d.first);
                    else break; // non-loop dart other than the departure: outside
                }
            }
        }
        r.interior_loops.assign(loops.begin(), loops.end());

        // Decomposition of the hidden vertices by disappearance reason.
        std::set<int> s1, s2, dd;
        auto absorb = [&](const std::vector<int>& path) {
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                int x = path[i];
                if (is_suppressible(g, vc, x)) dd.insert(x);
                else if (is_merged(g, vc, x)) {
                    int b = merge_target(g, vc, x);
                    if (b == r.b1) s1.insert(x);
                    else if (b == r.b2) s2.insert(x);
                    else
                        throw Error(ErrorKind::precondition,
                                    "hidden vertex merged outside the region pair", {x, b});
                } else {
                    throw Error(ErrorKind::precondition, "hidden vertex of unknown reason", {x});
                }
            }
        };
        for (int e : r.edge_ids) absorb(gp.edges[e].provenance);
        for (int e : r.interior_loops) absorb(gp.edges[e].provenance);
        r.b1_set.assign(s1.begin(), s1.end());
        r.b2_set.assign(s2.begin(), s2.end());
        r.d_set.assign(dd.begin(), dd.end());
        regions.push_back(std::move(r));
    }
    std::sort(regions.begin(), regions.end(), [](const Region& a, const Region& b) {
        return a.b1 != b.b1 ? a.b1 < b.b1 : (a.b2 != b.b2 ? a.b2 < b.b2 : a.faces < b.faces);
    });
    return regions;
}

// Checks a region's decomposition: sets pairwise disjoint, B_i within the
// respective big vertex's neighborhood, D an independent set of 2-vertices
// each with a neighbor in B1 and one in B2.
inline bool region_decomposition_ok(const Region& r, const Graph& g) {
    std::set<int> all;
    for (int x : r.b1_set)
        if (!all.insert(x).second) return false;
    for (int x : r.b2_set)
        if (!all.insert(x).second) return false;
    for (int x : r.d_set)
        if (!all.insert(x).second) return false;
    for (int x : r.b1_set)
        if (!g.has_edge(std::min(x, r.b1), std::max(x, r.b1))) return false;
    for (int x : r.b2_set)
        if (!g.has_edge(std::min(x, r.b2), std::max(x, r.b2))) return false;
    std::set<int> b1s(r.b1_set.begin(), r.b1_set.end());
    std::set<int> b2s(r.b2_set.begin(), r.b2_set.end());
    for (int x : r.d_set) {
        if (g.degree(x) != 2) return false;
        bool n1 = false, n2 = false;
        for (int y : g.neighbors(x)) {
            if (r.d_set.end() != std::find(r.d_set.begin(), r.d_set.end(), y)) return false;
            n1 = n1 || b1s.count(y);
            n2 = n2 || b2s.count(y);
        }
        if (!n1 || !n2) return false;
    }
    return true;
}

// Per-vertex count diagnostic from the region structure lemma: inside a
// region, each hidden neighbor of a big vertex has at most one neighbor in
// each B_i and at most eight in D.
struct RegionCountReport {
    struct Item {
        int vertex;
        int in_b1, in_b2, in_d;
    };
    std::vector<Item> violations;
    bool ok() const { return violations.empty(); }
};

inline RegionCountReport region_count_diagnostic(const Region& r, const Graph& g) {
    RegionCountReport rep;
    std::set<int> b1s(r.b1_set.begin(), r.b1_set.end());
    std::set<int> b2s(r.b2_set.begin(), r.b2_set.end());
    std::set<int> ds(r.d_set.begin(), r.d_set.end());
    for (const auto& side : {r.b1_set, r.b2_set})
        for (int w : side) {
            int c1 = 0, c2 = 0, cd = 0;
            for (int y : g.neighbors(w)) {
                c1 += b1s.count(y);
                c2 += b2s.count(y);
                cd += ds.count(y);
            }
            if (c1 > 1 || c2 > 1 || cd > 8) rep.violations.push_back({w, c1, c2, cd});
        }
    return rep;
}

struct HalfEdgeReport {
    struct DegreeItem {
        int vertex;
        int with_loops, without_loops;
    };
    struct LoopItem {
        int edge, vertex;
    };
    std::vector<DegreeItem> degree_violations; // 5 * loop-free degree < full degree
    std::vector<LoopItem> loop_violations;     // no flanking non-loop half-edge
    bool ok() const { return degree_violations.empty() && loop_violations.empty(); }
};

// Diagnostics around loops: every loop should have, next to one of its two
// half-edges in the rotation, a half-edge of a non-loop edge; consequently
// the loop-free degree is at least a fifth of the full degree.
inline HalfEdgeReport half_edge_diagnostics(const MultiGraph& gp) {
    HalfEdgeReport rep;
    for (int v = 0; v < gp.vertex_space(); ++v) {
        if (!gp.active[v]) continue;
        int full = gp.degree(v);
        if (full == 0) continue;
        int plain = 0;
        for (const auto& d : gp.rotation[v]) plain += !gp.is_loop(d.first);
        if (5 * plain < full) rep.degree_violations.push_back({v, full, plain});
    }
    for (std::size_t e = 0; e < gp.edges.size(); ++e) {
        if (!gp.edges[e].alive || !gp.is_loop(static_cast<int>(e))) continue;
        int v = gp.edges[e].u;
        const auto& rot = gp.rotation[v];
        int deg = gp.degree(v);
        bool flanked = false;
        for (int side = 0; side < 2 && !flanked; ++side) {
            int pos = gp.dart_pos(v, {static_cast<int>(e), side});
            for (int delta : {deg - 1, 1}) {
                const auto& d = rot[(pos + delta) % deg];
                if (!gp.is_loop(d.first)) flanked = true;
            }
        }
        if (!flanked) rep.loop_violations.push_back({static_cast<int>(e), v});
    }
    return rep;
}

// Edges whose endpoints both avoid closed big neighborhoods (plus the
// stronger form for edges between two 2-vertices). These patterns cannot
// occur in the graphs the pipeline is designed for; on arbitrary inputs they
// are informative only.
inline std::vector<std::pair<int, int>> first_red_violations(const Graph& g,
                                                             const VertexClass& vc) {
    auto in_nb = [&](int v) { return vc.is_big[v] || vc.big_neighbor_count(g, v) > 0; };
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges()) {
        bool both2 = g.degree(u) == 2 && g.degree(v) == 2;
        if (both2 ? !(in_nb(u) && in_nb(v)) : !(in_nb(u) || in_nb(v))) out.emplace_back(u, v);
    }
    return out;
}

// Triangles whose base joins two 2-vertices.
inline std::vector<std::array<int, 3>> notriangle_violations(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) != 2 || g.degree(v) != 2) continue;
        for (int w : g.neighbors(u))
            if (w != v && g.has_edge(std::min(w, v), std::max(w, v)))
                out.push_back({u, v, w});
    }
    return out;
}

// Expands every live edge's provenance into original-graph edges and checks
// the covering law: a non-contracted edge of the original graph appears
// exactly once; a contracted edge between a merged vertex and its big
// neighbor appears once per other edge at the merged vertex.
inline bool provenance_round_trip(const MultiGraph& gp, const Graph& g, const VertexClass& vc,
                                  std::string* why = nullptr) {
    std::map<std::pair<int, int>, int> seen;
    for (const auto& e : gp.edges) {
        if (!e.alive) continue;
        for (std::size_t i = 0; i + 1 < e.provenance.size(); ++i) {
            int a = e.provenance[i], b = e.provenance[i + 1];
            ++seen[{std::min(a, b), std::max(a, b)}];
        }
    }
    for (auto [u, v] : g.edges()) {
        int expect = 1;
        if (is_merged(g, vc, u) && merge_target(g, vc, u) == v)
            expect = g.degree(u) - 1;
        else if (is_merged(g, vc, v) && merge_target(g, vc, v) == u)
            expect = g.degree(v) - 1;
        int got = seen.count({u, v}) ? seen[{u, v}] : 0;
        if (got != expect) {
            if (why)
                *why = "edge " + std::to_string(u) + "-" + std::to_string(v) + " appears " +
                       std::to_string(got) + " times, expected " + std::to_string(expect);
            return false;
        }
        seen.erase({u, v});
    }
    if (!seen.empty()) {
        if (why)
            *why = "provenance uses a pair outside the edge set: " +
                   std::to_string(seen.begin()->first.first) + "-" +
                   std::to_string(seen.begin()->first.second);
        return false;
    }
    return true;
}

} // namespace chroma2
