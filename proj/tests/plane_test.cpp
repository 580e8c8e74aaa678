#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "chroma2/generators.hpp"
#include "chroma2/plane.hpp"
#include "fixtures.hpp"

using namespace chroma2;

namespace {

std::vector<int> sorted_lengths(const FaceSet& fs) {
    std::vector<int> l = fs.lengths;
    std::sort(l.begin(), l.end());
    return l;
}

// Per-vertex and per-face defect sum; -8 for every connected plane graph.
long long charge_total(const PlaneGraph& pg) {
    FaceSet fs = trace_faces(pg);
    long long total = 0;
    for (int v = 0; v < pg.g.vertex_count(); ++v) total += pg.g.degree(v) - 4;
    for (int l : fs.lengths) total += l - 4;
    return total;
}

} // namespace

TEST_CASE("rotation must be a permutation of the adjacency", "[plane]") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    CHECK_THROWS_AS(PlaneGraph(g, {{1, 2}, {0}, {0, 1}}), Error);
    CHECK_THROWS_AS(PlaneGraph(g, {{1, 2}, {0, 2}}), Error);
    CHECK_THROWS_AS(PlaneGraph(g, {{1, 1}, {0, 2}, {0, 1}}), Error);
    PlaneGraph ok(g, {{1, 2}, {0, 2}, {0, 1}});
    CHECK(ok.g.edge_count() == 3);
}

TEST_CASE("face tracing covers every dart exactly once", "[plane]") {
    PlaneGraph pg = fixtures::dodecahedron_plane();
    FaceSet fs = trace_faces(pg);
    long long total = std::accumulate(fs.lengths.begin(), fs.lengths.end(), 0ll);
    CHECK(total == 2ll * pg.g.edge_count());
    std::set<std::pair<int, int>> darts;
    for (const auto& face : fs.faces)
        for (auto d : face) CHECK(darts.insert(d).second);
    CHECK(static_cast<long long>(darts.size()) == total);
}

TEST_CASE("triangle, tree and cube face counts", "[plane]") {
    SECTION("triangle has two faces of length 3") {
        Graph g(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        PlaneGraph pg(g, {{1, 2}, {0, 2}, {0, 1}});
        FaceSet fs = trace_faces(pg);
        CHECK(sorted_lengths(fs) == std::vector<int>{3, 3});
    }
    SECTION("a tree has one face of length 2m") {
        Graph g = star_graph(6);
        std::vector<std::vector<int>> rot(6);
        rot[0] = {1, 2, 3, 4, 5};
        for (int i = 1; i < 6; ++i) rot[i] = {0};
        FaceSet fs = trace_faces(PlaneGraph(g, rot));
        REQUIRE(fs.lengths.size() == 1);
        CHECK(fs.lengths[0] == 10);
    }
    SECTION("the cube has six quadrilateral faces") {
        FaceSet fs = trace_faces(fixtures::cube_plane());
        CHECK(sorted_lengths(fs) == std::vector<int>(6, 4));
    }
}

TEST_CASE("platonic fixtures pass the euler check", "[plane]") {
    CHECK(euler_check(fixtures::cube_plane()));
    CHECK(euler_check(fixtures::dodecahedron_plane()));
    CHECK(euler_check(fixtures::icosahedron_plane()));
    CHECK(euler_check(fixtures::two_triangle_bridge_plane()));
    CHECK(euler_check(wegner_figure()));

    FaceSet ico = trace_faces(fixtures::icosahedron_plane());
    CHECK(sorted_lengths(ico) == std::vector<int>(20, 3));
    FaceSet dod = trace_faces(fixtures::dodecahedron_plane());
    CHECK(sorted_lengths(dod) == std::vector<int>(12, 5));
}

TEST_CASE("a twisted rotation fails the euler check", "[plane]") {
    PlaneGraph pg = fixtures::dodecahedron_plane();
    auto rot = pg.rotation;
    std::swap(rot[0][0], rot[0][1]);
    PlaneGraph bad(pg.g, rot);
    CHECK_FALSE(euler_check(bad));
}

TEST_CASE("a single edge satisfies the euler formula", "[plane]") {
    Graph g(2);
    g.add_edge(0, 1);
    PlaneGraph pg(g, {{1}, {0}});
    FaceSet fs = trace_faces(pg);
    REQUIRE(fs.lengths.size() == 1);
    CHECK(fs.lengths[0] == 2);
    CHECK(euler_check(pg));
}

TEST_CASE("euler check handles each component separately", "[plane]") {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    PlaneGraph pg(g, {{1, 2}, {0, 2}, {0, 1}, {4, 5}, {3, 5}, {3, 4}});
    CHECK(euler_check(pg));
}

TEST_CASE("incident faces around vertices and edges", "[plane]") {
    SECTION("bridge edge borders its face on both sides") {
        PlaneGraph pg = fixtures::two_triangle_bridge_plane();
        FaceSet fs = trace_faces(pg);
        auto faces = incident_faces(pg, fs, 2, 3);
        REQUIRE(faces.size() == 2);
        CHECK(faces[0] == faces[1]);
    }
    SECTION("triangle edge borders two distinct faces") {
        Graph g(3);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        PlaneGraph pg(g, {{1, 2}, {0, 2}, {0, 1}});
        FaceSet fs = trace_faces(pg);
        auto faces = incident_faces(pg, fs, 0, 1);
        REQUIRE(faces.size() == 2);
        CHECK(faces[0] != faces[1]);
        CHECK_THROWS_AS(incident_faces(pg, fs, 0, 0), Error);
    }
    SECTION("a degree-5 corner of the icosahedron sees five triangles") {
        PlaneGraph pg = fixtures::icosahedron_plane();
        FaceSet fs = trace_faces(pg);
        REQUIRE(pg.g.degree(0) == 5);
        auto faces = incident_faces(pg, fs, 0);
        REQUIRE(faces.size() == 5);
        std::set<int> distinct(faces.begin(), faces.end());
        CHECK(distinct.size() == 5);
        for (int f : faces) CHECK(fs.lengths[f] == 3);
    }
}

TEST_CASE("vertex and face defects always sum to -8", "[plane]") {
    CHECK(charge_total(fixtures::cube_plane()) == -8);
    CHECK(charge_total(fixtures::dodecahedron_plane()) == -8);
    CHECK(charge_total(fixtures::icosahedron_plane()) == -8);
    CHECK(charge_total(fixtures::two_triangle_bridge_plane()) == -8);
    CHECK(charge_total(wegner_figure()) == -8);
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
        PlaneGraph pg = random_plane_c4free(60, seed);
        REQUIRE(pg.g.connected());
        CHECK(charge_total(pg) == -8);
    }
}

TEST_CASE("face multiset survives relabeling", "[plane]") {
    PlaneGraph pg = fixtures::dodecahedron_plane();
    int n = pg.g.vertex_count();
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = (7 * v + 3) % n;
    Graph h(n);
    for (auto [u, v] : pg.g.edges())
        h.add_edge(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v)
        for (int w : pg.rotation[v]) rot[perm[v]].push_back(perm[w]);
    PlaneGraph qg(h, rot);
    CHECK(sorted_lengths(trace_faces(qg)) == sorted_lengths(trace_faces(pg)));
    CHECK(euler_check(qg));
}

TEST_CASE("4-cycle-free embeddings separate their 3-faces", "[plane]") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        PlaneGraph pg = random_plane_c4free(50, seed);
        FaceSet fs = trace_faces(pg);
        std::map<std::pair<int, int>, int> tri_count;
        std::vector<int> tri_at_vertex(pg.g.vertex_count(), 0);
        for (std::size_t f = 0; f < fs.faces.size(); ++f) {
            if (fs.lengths[f] != 3) continue;
            std::set<int> verts;
            for (auto [u, v] : fs.faces[f]) {
                ++tri_count[{std::min(u, v), std::max(u, v)}];
                verts.insert(u);
            }
            for (int v : verts) ++tri_at_vertex[v];
        }
        for (auto& [e, c] : tri_count) CHECK(c <= 1);
        for (int v = 0; v < pg.g.vertex_count(); ++v)
            if (pg.g.degree(v) == 3) CHECK(tri_at_vertex[v] <= 1);
    }
}
