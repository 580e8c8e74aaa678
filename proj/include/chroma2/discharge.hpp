#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chroma2/graph.hpp"
#include "chroma2/plane.hpp"
#include "chroma2/rational.hpp"

namespace chroma2 {

struct ChargeStage {
    std::string name;
    std::vector<Rat> vertex, edge, face;

    Rat total() const {
        Rat t(0);
        for (const Rat& r : vertex) t += r;
        for (const Rat& r : edge) t += r;
        for (const Rat& r : face) t += r;
        return t;
    }
};

struct ChargeLedger {
    std::vector<std::pair<int, int>> edge_list;   // index space of edge charges
    std::vector<std::vector<int>> face_vertices;  // index space of face charges
    std::vector<int> face_lengths;
    std::vector<ChargeStage> stages; // initial, then one per rule

    const ChargeStage& final_stage() const { return stages.back(); }
};

// One charged element: v = vertex, e = edge, f = face.
struct ChargeElement {
    char kind;
    int index;
};

inline std::pair<ChargeElement, Rat> min_final_charge(const ChargeLedger& led) {
    const ChargeStage& s = led.final_stage();
    ChargeElement where{'v', 0};
    Rat best = s.vertex.at(0);
    auto consider = [&](char kind, int i, const Rat& r) {
        if (r < best) {
            best = r;
            where = {kind, i};
        }
    };
    for (std::size_t i = 0; i < s.vertex.size(); ++i) consider('v', static_cast<int>(i), s.vertex[i]);
    for (std::size_t i = 0; i < s.edge.size(); ++i) consider('e', static_cast<int>(i), s.edge[i]);
    for (std::size_t i = 0; i < s.face.size(); ++i) consider('f', static_cast<int>(i), s.face[i]);
    return {where, best};
}

namespace detail {

// Distinct vertices around a face, in walk order.
inline std::vector<int> face_vertex_list(const std::vector<std::pair<int, int>>& darts) {
    std::vector<int> out;
    for (const auto& d : darts) out.push_back(d.first);
    return out;
}

inline std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace detail

// Runs the six-stage transfer scheme over vertices, edges and faces. The
// input must be connected with minimum degree 2 and carry no 4-cycle; the
// threshold beta separates big vertices from the rest. Transfers within a
// stage all read the state the stage started with; stages apply in order.
// The grand total stays at -8 throughout, and that identity is re-checked
// after every stage.
inline ChargeLedger run_discharging(const PlaneGraph& pg, int beta = 10) {
    const Graph& g = pg.g;
    int n = g.vertex_count();
    if (n == 0) throw Error(ErrorKind::precondition, "empty graph");
    if (!g.connected()) throw Error(ErrorKind::precondition, "graph must be connected");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2)
            throw Error(ErrorKind::precondition, "vertex of degree below 2", {v, g.degree(v)});
    {
        auto c4 = forbidden_cycle_check(g, {4});
        if (!c4.empty())
            throw Error(ErrorKind::precondition, "4-cycle present",
                        {c4[0][0], c4[0][1], c4[0][2], c4[0][3]});
    }
    if (beta < 5) throw Error(ErrorKind::bad_argument, "threshold below 5", {beta});
    if (!euler_check(pg))
        throw Error(ErrorKind::invalid_rotation, "rotation system is not a plane embedding");

    FaceSet fs = trace_faces(pg);
    VertexClass vc = classify_vertices(g, beta);
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    int nf = static_cast<int>(fs.faces.size());

    ChargeLedger led;
    led.edge_list = edges;
    led.face_lengths = fs.lengths;
    for (const auto& fdarts : fs.faces) led.face_vertices.push_back(detail::face_vertex_list(fdarts));

    std::vector<Rat> cv(n), ce(m), cf(nf);
    for (int v = 0; v < n; ++v) cv[v] = Rat(g.degree(v) - 4);
    for (int f = 0; f < nf; ++f) cf[f] = Rat(fs.lengths[f] - 4);

    auto push_stage = [&](const std::string& name) {
        led.stages.push_back({name, cv, ce, cf});
        if (led.stages.back().total() != Rat(-8))
            throw Error(ErrorKind::precondition, "charge conservation broken",
                        {static_cast<long long>(led.stages.size()) - 1});
    };
    push_stage("initial");

    // The one or two distinct faces along an edge, plus its unique 3-face if
    // it has one. Two 3-faces on one edge would close a 4-cycle, so that case
    // only signals an input outside the domain.
    auto incident_face_pair = [&](int u, int v) {
        std::vector<int> out{fs.face_of_dart(u, v)};
        int f2 = fs.face_of_dart(v, u);
        if (f2 != out[0]) out.push_back(f2);
        return out;
    };
    auto unique_3face_of_edge = [&](int u, int v) -> int {
        int hit = -1;
        for (int f : incident_face_pair(u, v)) {
            if (fs.lengths[f] != 3) continue;
            if (hit != -1)
                throw Error(ErrorKind::precondition, "two 3-faces share an edge", {u, v});
            hit = f;
        }
        return hit;
    };
    auto three_faces_at_vertex = [&](int v) {
        std::set<int> out;
        for (int w : pg.rotation[v]) {
            int f = fs.face_of_dart(v, w);
            if (fs.lengths[f] == 3) out.insert(f);
        }
        return std::vector<int>(out.begin(), out.end());
    };
    // Small in the transfer rules means degree at least 5 but below big.
    auto is_mid_small = [&](int v) { return g.degree(v) >= 5 && !vc.is_big[v]; };

    // Each edge takes 1/5 per dart from 5+-faces (a cut edge meets the same
    // face twice and so takes 2/5), plus 1/10 from each big endpoint.
    for (int ei = 0; ei < m; ++ei) {
        auto [u, v] = edges[ei];
        for (auto [a, b] : {std::pair<int, int>{u, v}, {v, u}}) {
            int f = fs.face_of_dart(a, b);
            if (fs.lengths[f] >= 5) {
                cf[f] -= Rat(1, 5);
                ce[ei] += Rat(1, 5);
            }
        }
        for (int x : {u, v})
            if (vc.is_big[x]) {
                cv[x] -= Rat(1, 10);
                ce[ei] += Rat(1, 10);
            }
    }
    push_stage("R1");

    // Each edge passes everything on: to its 3-face when it lies on one,
    // otherwise split over its endpoints of minimum degree.
    {
        std::vector<Rat> snap = ce;
        for (int ei = 0; ei < m; ++ei) {
            auto [u, v] = edges[ei];
            Rat amount = snap[ei];
            ce[ei] -= amount;
            int f3 = unique_3face_of_edge(u, v);
            if (f3 != -1) {
                cf[f3] += amount;
            } else if (g.degree(u) < g.degree(v)) {
                cv[u] += amount;
            } else if (g.degree(v) < g.degree(u)) {
                cv[v] += amount;
            } else {
                cv[u] += amount / 2;
                cv[v] += amount / 2;
            }
        }
        for (int ei = 0; ei < m; ++ei)
            if (ce[ei] != Rat(0))
                throw Error(ErrorKind::precondition, "edge kept charge", {ei});
    }
    push_stage("R2");

    // Each big vertex pays 1/2 to every neighbor.
    for (int v : vc.big)
        for (int w : g.neighbors(v)) {
            cv[v] -= Rat(1, 2);
            cv[w] += Rat(1, 2);
        }
    push_stage("R3");

    // 3-, 4- and small vertices support their 2-neighbors; 4-vertices with
    // two big neighbors and small vertices also support incident 3-faces
    // carrying another non-big vertex.
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        bool donor = d == 3 || d == 4 || is_mid_small(v);
        if (!donor) continue;
        for (int w : g.neighbors(v))
            if (g.degree(w) == 2) {
                cv[v] -= Rat(3, 5);
                cv[w] += Rat(3, 5);
            }
        bool face_donor = (d == 4 && vc.big_neighbor_count(g, v) >= 2) || is_mid_small(v);
        if (!face_donor) continue;
        for (int f : three_faces_at_vertex(v)) {
            bool other_nonbig = false;
            for (int x : led.face_vertices[f])
                if (x != v && !vc.is_big[x]) other_nonbig = true;
            if (other_nonbig) {
                cv[v] -= Rat(1, 2);
                cf[f] += Rat(1, 2);
            }
        }
    }
    push_stage("R4");

    // On a 3-face with a big-big edge vw, the two halves exchanged across vw
    // move on: to the third vertex when it has degree at most 4, else to the
    // face itself.
    for (int f = 0; f < nf; ++f) {
        if (fs.lengths[f] != 3) continue;
        const auto& verts = led.face_vertices[f];
        for (int i = 0; i < 3; ++i) {
            int a = verts[i], b = verts[(i + 1) % 3], x = verts[(i + 2) % 3];
            if (!vc.is_big[a] || !vc.is_big[b]) continue;
            cv[a] -= Rat(1, 2);
            cv[b] -= Rat(1, 2);
            if (g.degree(x) <= 4)
                cv[x] += Rat(1);
            else
                cf[f] += Rat(1);
        }
    }
    push_stage("R5");

    // A 3-vertex tops up its 3-face when that face is still negative. The
    // incident 3-face is unique here: two of them would close a 4-cycle.
    {
        std::vector<Rat> snap_v = cv, snap_f = cf;
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) != 3) continue;
            auto f3 = three_faces_at_vertex(v);
            if (f3.size() > 1)
                throw Error(ErrorKind::precondition, "two 3-faces at a 3-vertex", {v});
            if (f3.empty() || snap_f[f3[0]] >= Rat(0)) continue;
            Rat excess = snap_v[v] > Rat(0) ? snap_v[v] : Rat(0);
            cv[v] -= excess;
            cf[f3[0]] += excess;
        }
    }
    push_stage("R6");
    return led;
}

enum class ConfigKind {
    one_vertex,
    key_lemma,
    face_2vertex,
    face_33,
    three_vertex_no_big,
    face3_off_neighbor,
};

inline const char* config_kind_name(ConfigKind k) {
    switch (k) {
        case ConfigKind::one_vertex: return "oneVertex";
        case ConfigKind::key_lemma: return "keyLemma";
        case ConfigKind::face_2vertex: return "face2vertex";
        case ConfigKind::face_33: return "face33";
        case ConfigKind::three_vertex_no_big: return "threeVertexNoBig";
        case ConfigKind::face3_off_neighbor: return "face3OffNeighbor";
    }
    return "?";
}

struct ConfigurationFinding {
    ConfigKind kind;
    std::vector<int> witness;
};

struct ConfigurationReport {
    std::vector<ConfigurationFinding> findings;

    bool empty() const { return findings.empty(); }
    int count(ConfigKind k) const {
        int c = 0;
        for (const auto& f : findings) c += f.kind == k;
        return c;
    }
};

// Vertex-local patterns that cannot appear once the structural lemmas apply:
// a degree-1 vertex; an edge of two non-big vertices neither of which has two
// big neighbors; a 3-vertex with no big neighbor.
inline ConfigurationReport find_reducible_configurations(const Graph& g, int beta) {
    VertexClass vc = classify_vertices(g, beta);
    ConfigurationReport rep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) rep.findings.push_back({ConfigKind::one_vertex, {v}});
    for (auto [u, v] : g.edges()) {
        if (vc.is_big[u] || vc.is_big[v]) continue;
        if (vc.big_neighbor_count(g, u) <= 1 && vc.big_neighbor_count(g, v) <= 1)
            rep.findings.push_back({ConfigKind::key_lemma, {u, v}});
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 3 && vc.big_neighbor_count(g, v) == 0)
            rep.findings.push_back({ConfigKind::three_vertex_no_big, {v}});
    return rep;
}

// Adds the face-based patterns: a 3-face with a 2-vertex next to a non-big
// companion; a 3-face with two 3-vertices and no big vertex; a 3-face with a
// 3-vertex, at most one big vertex, and a non-big neighbor off the face.
inline ConfigurationReport find_reducible_configurations(const PlaneGraph& pg, int beta) {
    const Graph& g = pg.g;
    VertexClass vc = classify_vertices(g, beta);
    ConfigurationReport rep = find_reducible_configurations(g, beta);
    FaceSet fs = trace_faces(pg);
    for (std::size_t f = 0; f < fs.faces.size(); ++f) {
        if (fs.lengths[f] != 3) continue;
        std::vector<int> verts = detail::face_vertex_list(fs.faces[f]);
        std::vector<int> sorted = detail::sorted_unique(verts);
        if (sorted.size() != 3) continue;

        int big_on_face = 0;
        for (int x : sorted) big_on_face += vc.is_big[x];

        int two = -1;
        for (int x : sorted)
            if (g.degree(x) == 2 && two == -1) two = x;
        if (two != -1) {
            int companion = -1;
            for (int x : sorted)
                if (x != two && !vc.is_big[x] && companion == -1) companion = x;
            if (companion != -1) {
                int third = -1;
                for (int x : sorted)
                    if (x != two && x != companion) third = x;
                rep.findings.push_back({ConfigKind::face_2vertex, {two, companion, third}});
            }
        }

        std::vector<int> threes;
        for (int x : sorted)
            if (g.degree(x) == 3) threes.push_back(x);
        if (threes.size() >= 2 && big_on_face == 0) {
            int third = -1;
            for (int x : sorted)
                if (x != threes[0] && x != threes[1]) third = x;
            rep.findings.push_back({ConfigKind::face_33, {threes[0], threes[1], third}});
        }

        if (big_on_face <= 1) {
            for (int v : sorted) {
                if (g.degree(v) != 3) continue;
                for (int u : g.neighbors(v)) {
                    if (u == sorted[0] || u == sorted[1] || u == sorted[2]) continue;
                    if (!vc.is_big[u]) {
                        std::vector<int> rest;
                        for (int x : sorted)
                            if (x != v) rest.push_back(x);
                        rep.findings.push_back(
                            {ConfigKind::face3_off_neighbor, {v, u, rest[0], rest[1]}});
                    }
                }
            }
        }
    }
    return rep;
}

namespace detail {

inline bool is_3face(const PlaneGraph& pg, const FaceSet& fs, const std::vector<int>& verts) {
    std::vector<int> want = sorted_unique(verts);
    if (want.size() != 3) return false;
    for (std::size_t f = 0; f < fs.faces.size(); ++f) {
        if (fs.lengths[f] != 3) continue;
        if (sorted_unique(face_vertex_list(fs.faces[f])) == want) return true;
    }
    (void)pg;
    return false;
}

} // namespace detail

// Re-checks one finding against its defining predicate.
inline bool finding_holds(const Graph& g, int beta, const ConfigurationFinding& fd) {
    VertexClass vc = classify_vertices(g, beta);
    auto in_range = [&](int v) { return v >= 0 && v < g.vertex_count(); };
    for (int v : fd.witness)
        if (!in_range(v)) return false;
    switch (fd.kind) {
        case ConfigKind::one_vertex:
            return fd.witness.size() == 1 && g.degree(fd.witness[0]) == 1;
        case ConfigKind::key_lemma: {
            if (fd.witness.size() != 2) return false;
            int u = fd.witness[0], v = fd.witness[1];
            return u != v && g.has_edge(std::min(u, v), std::max(u, v)) && !vc.is_big[u] &&
                   !vc.is_big[v] && vc.big_neighbor_count(g, u) <= 1 &&
                   vc.big_neighbor_count(g, v) <= 1;
        }
        case ConfigKind::three_vertex_no_big:
            return fd.witness.size() == 1 && g.degree(fd.witness[0]) == 3 &&
                   vc.big_neighbor_count(g, fd.witness[0]) == 0;
        default:
            throw Error(ErrorKind::bad_argument, "face finding needs an embedding");
    }
}

inline bool finding_holds(const PlaneGraph& pg, int beta, const ConfigurationFinding& fd) {
    const Graph& g = pg.g;
    switch (fd.kind) {
        case ConfigKind::one_vertex:
        case ConfigKind::key_lemma:
        case ConfigKind::three_vertex_no_big:
            return finding_holds(g, beta, fd);
        default:
            break;
    }
    VertexClass vc = classify_vertices(g, beta);
    FaceSet fs = trace_faces(pg);
    switch (fd.kind) {
        case ConfigKind::face_2vertex: {
            if (fd.witness.size() != 3) return false;
            int two = fd.witness[0], companion = fd.witness[1];
            return detail::is_3face(pg, fs, fd.witness) && g.degree(two) == 2 &&
                   !vc.is_big[companion];
        }
        case ConfigKind::face_33: {
            if (fd.witness.size() != 3) return false;
            if (!detail::is_3face(pg, fs, fd.witness)) return false;
            if (g.degree(fd.witness[0]) != 3 || g.degree(fd.witness[1]) != 3) return false;
            for (int x : fd.witness)
                if (vc.is_big[x]) return false;
            return true;
        }
        case ConfigKind::face3_off_neighbor: {
            if (fd.witness.size() != 4) return false;
            int v = fd.witness[0], u = fd.witness[1];
            std::vector<int> face{v, fd.witness[2], fd.witness[3]};
            if (!detail::is_3face(pg, fs, face)) return false;
            if (g.degree(v) != 3 || vc.is_big[u]) return false;
            if (u == fd.witness[2] || u == fd.witness[3]) return false;
            if (!g.has_edge(std::min(u, v), std::max(u, v))) return false;
            int big_on_face = 0;
            for (int x : face) big_on_face += vc.is_big[x];
            return big_on_face <= 1;
        }
        default:
            return false;
    }
}

struct ContradictionVerdict {
    bool ok = false;             // a reducible configuration was found
    bool all_nonnegative = false; // every element ended with charge >= 0
    ConfigurationReport report;
    ChargeLedger ledger;
};

// For a connected, C4-free plane graph with minimum degree 2 and a vertex of
// degree at least beta: either a reducible configuration is present, or the
// transfer scheme would leave only nonnegative charges summing to -8, which
// is absurd. A verdict with ok == false therefore exposes a bug.
inline ContradictionVerdict discharging_contradiction_check(const PlaneGraph& pg, int beta = 10) {
    if (pg.g.vertex_count() == 0 || pg.g.max_degree() < beta)
        throw Error(ErrorKind::precondition, "no vertex reaches the big threshold",
                    {pg.g.vertex_count() == 0 ? -1 : pg.g.max_degree(), beta});
    ContradictionVerdict v;
    v.ledger = run_discharging(pg, beta);
    v.report = find_reducible_configurations(pg, beta);
    v.ok = !v.report.empty();
    v.all_nonnegative = true;
    const ChargeStage& s = v.ledger.final_stage();
    for (const auto& bucket : {s.vertex, s.edge, s.face})
        for (const Rat& r : bucket)
            if (r < Rat(0)) v.all_nonnegative = false;
    return v;
}

} // namespace chroma2
