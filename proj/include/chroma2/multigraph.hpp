#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "chroma2/plane.hpp"

namespace chroma2 {

// Embedded multigraph over a fixed vertex id space. Loops and parallel edges
// are allowed; deleted vertices/edges stay in place with a cleared flag so
// ids remain stable across pipeline stages. A dart (e, s) is the half-edge of
// e sitting at endpoint s (0 = u, 1 = v); a loop owns two darts at the same
// vertex. Rotations list darts clockwise.
struct MultiGraph {
    struct Edge {
        int u = -1, v = -1;
        bool alive = false;
        std::vector<int> provenance; // original-graph path from the u end to the v end
    };
    using Dart = std::pair<int, int>; // (edge id, side)

    std::vector<Edge> edges;
    std::vector<char> active;
    std::vector<std::vector<Dart>> rotation;

    static MultiGraph from_plane(const PlaneGraph& pg) {
        pg.validate();
        MultiGraph mg;
        int n = pg.g.vertex_count();
        mg.active.assign(n, 1);
        mg.rotation.assign(n, {});
        std::map<std::pair<int, int>, int> id;
        for (auto [u, v] : pg.g.edges()) {
            id[{u, v}] = static_cast<int>(mg.edges.size());
            mg.edges.push_back({u, v, true, {u, v}});
        }
        for (int v = 0; v < n; ++v)
            for (int w : pg.rotation[v]) {
                int e = id[{std::min(v, w), std::max(v, w)}];
                mg.rotation[v].emplace_back(e, mg.edges[e].u == v ? 0 : 1);
            }
        return mg;
    }

    int vertex_space() const { return static_cast<int>(active.size()); }
    int active_count() const {
        int c = 0;
        for (char a : active) c += a;
        return c;
    }
    int alive_edge_count() const {
        int c = 0;
        for (const auto& e : edges) c += e.alive;
        return c;
    }
    int degree(int v) const { return static_cast<int>(rotation[v].size()); }
    bool is_loop(int e) const { return edges[e].u == edges[e].v; }
    int loop_count() const {
        int c = 0;
        for (const auto& e : edges) c += e.alive && e.u == e.v;
        return c;
    }

    int dart_at(const Dart& d) const { return d.second == 0 ? edges[d.first].u : edges[d.first].v; }
    int dart_to(const Dart& d) const { return d.second == 0 ? edges[d.first].v : edges[d.first].u; }
    static Dart twin(const Dart& d) { return {d.first, 1 - d.second}; }

    int dart_pos(int v, const Dart& d) const {
        const auto& rot = rotation[v];
        for (std::size_t i = 0; i < rot.size(); ++i)
            if (rot[i] == d) return static_cast<int>(i);
        throw Error(ErrorKind::invalid_rotation, "dart not found at vertex", {v, d.first});
    }

    void delete_edge(int e) {
        if (!edges[e].alive) throw Error(ErrorKind::bad_argument, "edge already deleted", {e});
        auto strip = [&](int v, const Dart& d) {
            auto& rot = rotation[v];
            rot.erase(rot.begin() + dart_pos(v, d));
        };
        strip(edges[e].u, {e, 0});
        strip(edges[e].v, {e, 1});
        edges[e].alive = false;
    }

    // Replaces a degree-2 vertex by an edge joining its two neighbors, which
    // takes over the darts' rotation slots. Returns the new edge id.
    int suppress_vertex(int y) {
        if (!active[y] || degree(y) != 2)
            throw Error(ErrorKind::bad_argument, "only active degree-2 vertices suppress", {y});
        Dart d1 = rotation[y][0], d2 = rotation[y][1];
        if (d1.first == d2.first)
            throw Error(ErrorKind::bad_argument, "cannot suppress a loop vertex", {y});
        int u = dart_to(d1), w = dart_to(d2);
        std::vector<int> path(edges[d1.first].provenance);
        if (path.front() != u) std::reverse(path.begin(), path.end()); // now u .. y
        std::vector<int> tail(edges[d2.first].provenance);
        if (tail.front() != y) std::reverse(tail.begin(), tail.end()); // now y .. w
        path.insert(path.end(), tail.begin() + 1, tail.end());
        int e = static_cast<int>(edges.size());
        edges.push_back({u, w, true, std::move(path)});
        rotation[u][dart_pos(u, twin(d1))] = {e, 0};
        rotation[w][dart_pos(w, twin(d2))] = {e, 1};
        edges[d1.first].alive = false;
        edges[d2.first].alive = false;
        rotation[y].clear();
        active[y] = 0;
        return e;
    }

    // Contracts edge e, merging vertex v into the other endpoint b: v's
    // remaining darts are spliced into b's rotation where e sat, preserving
    // the cyclic order, and their provenance paths gain b at the v end.
    void contract_into(int v, int e) {
        if (!edges[e].alive || (edges[e].u != v && edges[e].v != v))
            throw Error(ErrorKind::bad_argument, "contraction edge must leave the vertex", {v, e});
        if (is_loop(e)) throw Error(ErrorKind::bad_argument, "cannot contract a loop", {e});
        int b = edges[e].u == v ? edges[e].v : edges[e].u;
        int pos_v = dart_pos(v, {e, edges[e].u == v ? 0 : 1});
        int pos_b = dart_pos(b, {e, edges[e].u == b ? 0 : 1});

        std::vector<Dart> moved;
        int dv = degree(v);
        for (int i = 1; i < dv; ++i) moved.push_back(rotation[v][(pos_v + i) % dv]);
        for (const Dart& d : moved) {
            Edge& ed = edges[d.first];
            auto& path = ed.provenance;
            if (d.second == 0) {
                ed.u = b;
                if (path.front() != v)
                    throw Error(ErrorKind::bad_argument, "provenance end mismatch", {d.first});
                path.insert(path.begin(), b);
            } else {
                ed.v = b;
                if (path.back() != v)
                    throw Error(ErrorKind::bad_argument, "provenance end mismatch", {d.first});
                path.push_back(b);
            }
        }
        auto& rot = rotation[b];
        rot.erase(rot.begin() + pos_b);
        rot.insert(rot.begin() + pos_b, moved.begin(), moved.end());
        edges[e].alive = false;
        rotation[v].clear();
        active[v] = 0;
    }
};

// Faces of an embedded multigraph: orbits of traveling darts under
// "twin, then clockwise successor".
struct MultiFaceSet {
    std::vector<std::vector<MultiGraph::Dart>> faces;
    std::vector<int> lengths;
    std::map<MultiGraph::Dart, int> dart_face;

    int face_of(const MultiGraph::Dart& d) const {
        auto it = dart_face.find(d);
        if (it == dart_face.end())
            throw Error(ErrorKind::bad_argument, "dart not on any face", {d.first, d.second});
        return it->second;
    }
};

inline MultiFaceSet trace_faces(const MultiGraph& mg) {
    MultiFaceSet fs;
    std::map<MultiGraph::Dart, char> seen;
    std::vector<MultiGraph::Dart> all;
    for (std::size_t e = 0; e < mg.edges.size(); ++e)
        if (mg.edges[e].alive) {
            all.push_back({static_cast<int>(e), 0});
            all.push_back({static_cast<int>(e), 1});
        }
    for (const auto& start : all) {
        if (seen.count(start)) continue;
        std::vector<MultiGraph::Dart> face;
        MultiGraph::Dart d = start;
        do {
            seen[d] = 1;
            fs.dart_face[d] = static_cast<int>(fs.faces.size());
            face.push_back(d);
            MultiGraph::Dart t = MultiGraph::twin(d);
            int w = mg.dart_at(t);
            int pos = mg.dart_pos(w, t);
            d = mg.rotation[w][(pos + 1) % mg.degree(w)];
        } while (d != start);
        fs.lengths.push_back(static_cast<int>(face.size()));
        fs.faces.push_back(std::move(face));
    }
    return fs;
}

// Per-component Euler check; an isolated active vertex counts one face.
inline bool multi_euler_check(const MultiGraph& mg) {
    int n = mg.vertex_space();
    std::vector<int> comp(n, -1);
    int comps = 0;
    for (int v = 0; v < n; ++v) {
        if (!mg.active[v] || comp[v] != -1) continue;
        std::vector<int> stack{v};
        comp[v] = comps;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const auto& d : mg.rotation[x]) {
                int y = mg.dart_to(d);
                if (comp[y] == -1) {
                    comp[y] = comps;
                    stack.push_back(y);
                }
            }
        }
        ++comps;
    }
    std::vector<int> nv(comps, 0), me(comps, 0), fc(comps, 0);
    for (int v = 0; v < n; ++v)
        if (mg.active[v]) ++nv[comp[v]];
    for (const auto& e : mg.edges)
        if (e.alive) ++me[comp[e.u]];
    MultiFaceSet fs = trace_faces(mg);
    for (const auto& face : fs.faces) ++fc[comp[mg.dart_at(face[0])]];
    for (int c = 0; c < comps; ++c) {
        if (me[c] == 0) fc[c] = 1;
        if (nv[c] - me[c] + fc[c] != 2) return false;
    }
    return true;
}

} // namespace chroma2
