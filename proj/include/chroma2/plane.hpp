#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "chroma2/graph.hpp"

namespace chroma2 {

// Plane embedding of a simple graph: rotation[v] lists the neighbors of v in
// clockwise order as drawn. Face walks turn by "next neighbor after the
// arrival edge in rotation order".
struct PlaneGraph {
    Graph g;
    std::vector<std::vector<int>> rotation;

    PlaneGraph() = default;
    PlaneGraph(Graph graph, std::vector<std::vector<int>> rot)
        : g(std::move(graph)), rotation(std::move(rot)) {
        validate();
    }

    void validate() const {
        if (static_cast<int>(rotation.size()) != g.vertex_count())
            throw Error(ErrorKind::invalid_rotation, "rotation size != vertex count");
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<int> a = rotation[v];
            std::sort(a.begin(), a.end());
            if (a != g.neighbors(v))
                throw Error(ErrorKind::invalid_rotation,
                            "rotation of vertex is not a permutation of its adjacency", {v});
        }
    }
};

// A face is the dart cycle traced by the rotation rule. lengths[] counts
// darts, so a bridge contributes twice to its single face.
struct FaceSet {
    std::vector<std::vector<std::pair<int, int>>> faces; // darts (from, to)
    std::vector<int> lengths;

    int face_of_dart(int u, int v) const { return dart_face_.at({u, v}); }

    std::map<std::pair<int, int>, int> dart_face_;
};

inline FaceSet trace_faces(const PlaneGraph& pg) {
    const Graph& g = pg.g;
    int n = g.vertex_count();

    // Position of each neighbor inside rotation[v].
    std::vector<std::map<int, int>> pos(n);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < static_cast<int>(pg.rotation[v].size()); ++i)
            pos[v][pg.rotation[v][i]] = i;

    FaceSet fs;
    std::map<std::pair<int, int>, char> used;
    for (int u = 0; u < n; ++u) {
        for (int v : pg.rotation[u]) {
            if (used.count({u, v})) continue;
            std::vector<std::pair<int, int>> face;
            int a = u, b = v;
            do {
                face.emplace_back(a, b);
                used[{a, b}] = 1;
                fs.dart_face_[{a, b}] = static_cast<int>(fs.faces.size());
                int i = pos[b][a];
                int next = pg.rotation[b][(i + 1) % pg.rotation[b].size()];
                a = b;
                b = next;
            } while (!(a == u && b == v));
            fs.lengths.push_back(static_cast<int>(face.size()));
            fs.faces.push_back(std::move(face));
        }
    }
    return fs;
}

// True iff the rotation system is a planar embedding: every connected
// component satisfies n - m + f = 2, an edgeless component counting one face.
inline bool euler_check(const PlaneGraph& pg) {
    const Graph& g = pg.g;
    int n = g.vertex_count();
    if (n == 0) return true;
    FaceSet fs = trace_faces(pg);

    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }

    std::vector<long long> nv(ncomp, 0), me(ncomp, 0), fc(ncomp, 0);
    for (int v = 0; v < n; ++v) ++nv[comp[v]];
    for (auto [u, v] : g.edges()) {
        (void)v;
        ++me[comp[u]];
    }
    for (const auto& face : fs.faces) ++fc[comp[face.front().first]];
    for (int c = 0; c < ncomp; ++c) {
        if (me[c] == 0) fc[c] = 1;
        if (nv[c] - me[c] + fc[c] != 2) return false;
    }
    return true;
}

// Faces incident to v, one per outgoing dart, in rotation order.
inline std::vector<int> incident_faces(const PlaneGraph& pg, const FaceSet& fs, int v) {
    std::vector<int> out;
    for (int w : pg.rotation[v]) out.push_back(fs.face_of_dart(v, w));
    return out;
}

// The faces on the two sides of edge uv; a bridge reports its single face
// twice, once per side.
inline std::vector<int> incident_faces(const PlaneGraph& pg, const FaceSet& fs, int u, int v) {
    if (!pg.g.has_edge(u, v)) throw Error(ErrorKind::bad_argument, "no such edge", {u, v});
    return {fs.face_of_dart(u, v), fs.face_of_dart(v, u)};
}

} // namespace chroma2
