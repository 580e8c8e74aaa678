#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>

#include "chroma2/discharge.hpp"
#include "chroma2/generators.hpp"
#include "fixtures.hpp"

using namespace chroma2;

namespace {

// Hub of degree 12 whose spokes are joined by an outer ring of 3-edge paths,
// so every cycle through the hub has length at least 5.
PlaneGraph pinwheel_plane() {
    Graph g(37);
    auto a = [](int i) { return 1 + (i % 12); };
    auto b = [](int i) { return 13 + (i % 12); };
    auto c = [](int i) { return 25 + (i % 12); };
    for (int i = 0; i < 12; ++i) {
        g.add_edge(0, a(i));
        g.add_edge(a(i), b(i));
        g.add_edge(b(i), c(i));
        g.add_edge(std::min(c(i), a(i + 1)), std::max(c(i), a(i + 1)));
    }
    std::vector<std::pair<double, double>> xy(37, {0.0, 0.0});
    for (int i = 0; i < 12; ++i) {
        double base = i * 3.1415926535 / 6.0;
        xy[a(i)] = {2.0 * std::cos(base), 2.0 * std::sin(base)};
        xy[b(i)] = {3.0 * std::cos(base + 0.17), 3.0 * std::sin(base + 0.17)};
        xy[c(i)] = {3.0 * std::cos(base + 0.35), 3.0 * std::sin(base + 0.35)};
    }
    return PlaneGraph(g, detail::rotations_by_angle(g, xy));
}

PlaneGraph k4_plane() {
    Graph g(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    std::vector<std::pair<double, double>> xy{{0.0, 0.0}, {4.0, 0.0}, {2.0, 3.0}, {2.0, 1.0}};
    return PlaneGraph(g, detail::rotations_by_angle(g, xy));
}

int edge_index(const ChargeLedger& led, int u, int v) {
    for (std::size_t i = 0; i < led.edge_list.size(); ++i)
        if (led.edge_list[i] == std::pair<int, int>{u, v}) return static_cast<int>(i);
    return -1;
}

} // namespace

TEST_CASE("discharging the dodecahedron, stage by stage", "[discharge]") {
    auto pg = fixtures::dodecahedron_plane();
    auto led = run_discharging(pg, 10);

    REQUIRE(led.stages.size() == 7);
    CHECK(led.stages[0].name == "initial");
    CHECK(led.stages[1].name == "R1");
    CHECK(led.stages[6].name == "R6");
    for (const auto& st : led.stages) CHECK(st.total() == Rat(-8));

    for (const Rat& r : led.stages[0].vertex) CHECK(r == Rat(-1));
    for (const Rat& r : led.stages[0].face) CHECK(r == Rat(1));

    for (const Rat& r : led.stages[1].vertex) CHECK(r == Rat(-1));
    for (const Rat& r : led.stages[1].edge) CHECK(r == Rat(2, 5));
    for (const Rat& r : led.stages[1].face) CHECK(r == Rat(0));

    for (const Rat& r : led.stages[2].vertex) CHECK(r == Rat(-2, 5));
    for (const Rat& r : led.stages[2].edge) CHECK(r == Rat(0));

    for (int stage = 3; stage <= 6; ++stage) {
        CHECK(led.stages[stage].vertex == led.stages[2].vertex);
        CHECK(led.stages[stage].edge == led.stages[2].edge);
        CHECK(led.stages[stage].face == led.stages[2].face);
    }

    auto [where, amount] = min_final_charge(led);
    CHECK(where.kind == 'v');
    CHECK(amount == Rat(-2, 5));
    CHECK(rat_string(amount) == "-2/5");
}

TEST_CASE("a cut edge collects from its face twice", "[discharge]") {
    auto pg = fixtures::two_triangle_bridge_plane();
    auto led = run_discharging(pg, 10);
    int bridge = edge_index(led, 2, 3);
    REQUIRE(bridge != -1);

    CHECK(led.stages[1].edge[bridge] == Rat(2, 5));
    for (std::size_t i = 0; i < led.edge_list.size(); ++i)
        if (static_cast<int>(i) != bridge) CHECK(led.stages[1].edge[i] == Rat(1, 5));

    CHECK(led.stages[2].vertex[2] == Rat(-4, 5));
    CHECK(led.stages[2].vertex[3] == Rat(-4, 5));
    CHECK(led.stages[2].vertex[0] == Rat(-2));
    for (const Rat& r : led.stages[2].edge) CHECK(r == Rat(0));

    CHECK(led.final_stage().vertex[0] == Rat(-7, 5));
    CHECK(led.final_stage().vertex[2] == Rat(-2));
    for (const auto& st : led.stages) CHECK(st.total() == Rat(-8));
}

TEST_CASE("discharging rejects inputs outside its domain", "[discharge]") {
    CHECK_THROWS_AS(run_discharging(PlaneGraph(Graph(0), {})), Error);

    Graph two_triangles(6);
    for (int base : {0, 3}) {
        two_triangles.add_edge(base, base + 1);
        two_triangles.add_edge(base, base + 2);
        two_triangles.add_edge(base + 1, base + 2);
    }
    PlaneGraph split(two_triangles, {{1, 2}, {0, 2}, {0, 1}, {4, 5}, {3, 5}, {3, 4}});
    CHECK_THROWS_AS(run_discharging(split), Error);

    Graph path = path_graph(3);
    PlaneGraph pp(path, {{1}, {0, 2}, {1}});
    try {
        run_discharging(pp);
        FAIL("expected the degree floor to fail");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition);
        CHECK(std::strstr(e.what(), "degree below 2") != nullptr);
    }

    try {
        run_discharging(fixtures::cube_plane());
        FAIL("expected the 4-cycle scan to fail");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition);
        CHECK(std::strstr(e.what(), "4-cycle") != nullptr);
        CHECK(e.witness().size() == 4);
    }
    CHECK_THROWS_AS(run_discharging(fixtures::icosahedron_plane()), Error);

    CHECK_THROWS_AS(run_discharging(fixtures::dodecahedron_plane(), 4), Error);

    auto bent = fixtures::dodecahedron_plane();
    std::swap(bent.rotation[0][0], bent.rotation[0][1]);
    try {
        run_discharging(bent);
        FAIL("expected the embedding check to fail");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_rotation);
    }

    Graph k3 = cycle_graph(3);
    PlaneGraph pk3(k3, {{1, 2}, {0, 2}, {0, 1}});
    try {
        run_discharging(pk3);
        FAIL("expected the shared 3-face check to fail");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition);
        CHECK(std::strstr(e.what(), "two 3-faces share an edge") != nullptr);
    }
}

TEST_CASE("charge conservation on random inputs", "[discharge]") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto pg = random_plane_c4free(60, seed);
        auto led = run_discharging(pg, 10);
        REQUIRE(led.stages.size() == 7);
        for (const auto& st : led.stages) REQUIRE(st.total() == Rat(-8));
        auto [where, amount] = min_final_charge(led);
        REQUIRE(amount < Rat(0));
    }
}

TEST_CASE("vertex-local patterns on subdivided stars", "[discharge]") {
    Graph star = fixtures::subdivided_star(12);
    auto rep = find_reducible_configurations(star, 10);
    CHECK(rep.count(ConfigKind::one_vertex) == 12);
    CHECK(rep.count(ConfigKind::key_lemma) == 12);
    CHECK(rep.count(ConfigKind::three_vertex_no_big) == 0);
    CHECK(rep.findings.size() == 24);
    for (const auto& fd : rep.findings) CHECK(finding_holds(star, 10, fd));
    for (const auto& fd : rep.findings)
        if (fd.kind == ConfigKind::key_lemma) {
            CHECK(fd.witness.size() == 2);
            CHECK(star.degree(fd.witness[0]) + star.degree(fd.witness[1]) == 3);
        }

    auto plain = find_reducible_configurations(star_graph(13), 10);
    CHECK(plain.count(ConfigKind::one_vertex) == 12);
    CHECK(plain.count(ConfigKind::key_lemma) == 0);
}

TEST_CASE("face patterns on small embeddings", "[discharge]") {
    auto k4 = k4_plane();
    REQUIRE(euler_check(k4));
    auto rep = find_reducible_configurations(k4, 10);
    CHECK(rep.count(ConfigKind::one_vertex) == 0);
    CHECK(rep.count(ConfigKind::key_lemma) == 6);
    CHECK(rep.count(ConfigKind::three_vertex_no_big) == 4);
    CHECK(rep.count(ConfigKind::face_2vertex) == 0);
    CHECK(rep.count(ConfigKind::face_33) == 4);
    CHECK(rep.count(ConfigKind::face3_off_neighbor) == 12);
    for (const auto& fd : rep.findings) CHECK(finding_holds(k4, 10, fd));

    auto hub = fixtures::hub_fan_plane();
    auto hrep = find_reducible_configurations(hub, 9);
    CHECK(hrep.count(ConfigKind::one_vertex) == 1);
    CHECK(hrep.count(ConfigKind::key_lemma) == 12);
    CHECK(hrep.count(ConfigKind::face_2vertex) == 2);
    CHECK(hrep.count(ConfigKind::face_33) == 0);
    CHECK(hrep.count(ConfigKind::three_vertex_no_big) == 0);
    CHECK(hrep.count(ConfigKind::face3_off_neighbor) == 1);
    for (const auto& fd : hrep.findings) CHECK(finding_holds(hub, 9, fd));
}

TEST_CASE("findings are re-checkable and tampering shows", "[discharge]") {
    Graph star = fixtures::subdivided_star(12);
    CHECK(finding_holds(star, 10, {ConfigKind::one_vertex, {13}}));
    CHECK_FALSE(finding_holds(star, 10, {ConfigKind::one_vertex, {0}}));
    CHECK_FALSE(finding_holds(star, 10, {ConfigKind::one_vertex, {99}}));
    CHECK(finding_holds(star, 10, {ConfigKind::key_lemma, {1, 13}}));
    CHECK_FALSE(finding_holds(star, 10, {ConfigKind::key_lemma, {0, 1}}));
    CHECK_THROWS_AS(finding_holds(star, 10, {ConfigKind::face_33, {0, 1, 2}}), Error);

    auto k4 = k4_plane();
    CHECK(finding_holds(k4, 10, {ConfigKind::face_33, {0, 1, 3}}));
    CHECK_FALSE(finding_holds(k4, 10, {ConfigKind::face_33, {0, 1, 1}}));
    CHECK(finding_holds(k4, 10, {ConfigKind::face3_off_neighbor, {0, 3, 1, 2}}));
    CHECK_FALSE(finding_holds(k4, 10, {ConfigKind::face3_off_neighbor, {0, 1, 1, 2}}));
}

TEST_CASE("configuration kind names", "[discharge]") {
    CHECK(std::string(config_kind_name(ConfigKind::one_vertex)) == "oneVertex");
    CHECK(std::string(config_kind_name(ConfigKind::key_lemma)) == "keyLemma");
    CHECK(std::string(config_kind_name(ConfigKind::face_2vertex)) == "face2vertex");
    CHECK(std::string(config_kind_name(ConfigKind::face_33)) == "face33");
    CHECK(std::string(config_kind_name(ConfigKind::three_vertex_no_big)) == "threeVertexNoBig");
    CHECK(std::string(config_kind_name(ConfigKind::face3_off_neighbor)) == "face3OffNeighbor");
}

TEST_CASE("the contradiction check always finds a pattern", "[discharge]") {
    CHECK_THROWS_AS(discharging_contradiction_check(fixtures::dodecahedron_plane(), 10), Error);
    try {
        discharging_contradiction_check(fixtures::dodecahedron_plane(), 10);
        FAIL("expected the threshold check to fail");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition);
        CHECK(std::strstr(e.what(), "big threshold") != nullptr);
    }

    auto pin = pinwheel_plane();
    REQUIRE(euler_check(pin));
    auto verdict = discharging_contradiction_check(pin, 10);
    CHECK(verdict.ok);
    CHECK_FALSE(verdict.all_nonnegative);
    CHECK(verdict.report.count(ConfigKind::key_lemma) == 36);
    for (const auto& st : verdict.ledger.stages) CHECK(st.total() == Rat(-8));

    for (std::uint64_t seed = 11; seed <= 14; ++seed) {
        auto pg = random_plane_c4free(200, seed);
        REQUIRE(pg.g.max_degree() >= 10);
        auto v = discharging_contradiction_check(pg, 10);
        REQUIRE(v.ok);
        for (const auto& fd : v.report.findings) REQUIRE(finding_holds(pg, 10, fd));
    }
}
