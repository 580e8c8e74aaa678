#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include "chroma2/exact_color.hpp"
#include "chroma2/generators.hpp"
#include "chroma2/graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace chroma2;

TEST_CASE("proper-coloring predicate", "[exact]") {
    Graph g = cycle_graph(4);
    CHECK(is_proper(g, {1, 2, 1, 2}));
    CHECK_FALSE(is_proper(g, {1, 2, 1, 1}));
    CHECK_FALSE(is_proper(g, {1, 2, 1}));
}

TEST_CASE("maximum cliques of classic graphs", "[exact]") {
    Graph k5(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
    CHECK(max_clique(k5).size() == 5);
    CHECK(max_clique(cycle_graph(6)).size() == 2);
    CHECK(max_clique(square(cycle_graph(6))).size() == 3);
    CHECK(max_clique(square(incidence_pg(2))).size() == 7);
}

TEST_CASE("chromatic numbers of squared benchmarks", "[exact]") {
    auto c5 = chromatic_number(square(cycle_graph(5)));
    CHECK(c5.chi == 5);
    CHECK(is_proper(square(cycle_graph(5)), c5.coloring));

    auto pet = chromatic_number(square(petersen_graph()));
    CHECK(pet.chi == 10);

    auto gad = chromatic_number(square(gadget(3, 3)));
    CHECK(gad.chi == 9);
    CHECK(is_proper(square(gadget(3, 3)), gad.coloring));
}

TEST_CASE("solver agrees with brute force on every small graph", "[exact]") {
    for (int n = 1; n <= 5; ++n) {
        int slots = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1) g.add_edge(u, v);
            auto res = chromatic_number(g);
            REQUIRE(res.chi == oracles::brute_chromatic(g));
            REQUIRE(is_proper(g, res.coloring));
        }
    }
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 6 + trial % 2;
        Graph g = fixtures::random_graph(rng, n, 0.5);
        auto res = chromatic_number(g);
        REQUIRE(res.chi == oracles::brute_chromatic(g));
        REQUIRE(is_proper(g, res.coloring));
    }
}

TEST_CASE("list coloring matches feasibility by enumeration", "[exact]") {
    SECTION("a shared single color blocks an edge") {
        Graph k2(2);
        k2.add_edge(0, 1);
        CHECK_FALSE(list_color(k2, {{1}, {1}}).has_value());
        auto pick = list_color(k2, {{1, 2}, {1, 2}});
        REQUIRE(pick.has_value());
        CHECK((*pick)[0] != (*pick)[1]);
    }
    SECTION("an odd cycle with three-color lists") {
        Graph c5 = cycle_graph(5);
        std::vector<std::vector<int>> lists(5, {1, 2, 3});
        auto pick = list_color(c5, lists);
        REQUIRE(pick.has_value());
        CHECK(is_proper(c5, *pick));
    }
    SECTION("random lists against the brute oracle") {
        std::mt19937_64 rng(808);
        for (int trial = 0; trial < 120; ++trial) {
            int n = 2 + static_cast<int>(rng() % 6);
            Graph g = fixtures::random_graph(rng, n, 0.5);
            std::vector<std::vector<int>> lists(n);
            for (int v = 0; v < n; ++v) {
                int len = 1 + static_cast<int>(rng() % 3);
                std::set<int> s;
                while (static_cast<int>(s.size()) < len)
                    s.insert(1 + static_cast<int>(rng() % 4));
                lists[v].assign(s.begin(), s.end());
            }
            auto pick = list_color(g, lists);
            REQUIRE(pick.has_value() == oracles::brute_list_colorable(g, lists));
            if (pick) {
                CHECK(is_proper(g, *pick));
                for (int v = 0; v < n; ++v)
                    CHECK(std::count(lists[v].begin(), lists[v].end(), (*pick)[v]) == 1);
            }
        }
    }
}

TEST_CASE("list chromatic numbers separate from chromatic numbers", "[exact]") {
    CHECK(list_chromatic_number(cycle_graph(4)) == 2);
    CHECK(list_chromatic_number(cycle_graph(5)) == 3);
    Graph k33(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
    CHECK(chromatic_number(k33).chi == 2);
    CHECK(list_chromatic_number(k33) == 3);
    Graph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK(list_chromatic_number(k4) == 4);
}

TEST_CASE("correspondence assignments validate and color", "[exact]") {
    Graph k2(2);
    k2.add_edge(0, 1);
    SECTION("identity matching with two colors per side is feasible") {
        CorrAssignment corr;
        corr.capacity = {2, 2};
        corr.matchings[{0, 1}] = {{0, 0}, {1, 1}};
        auto pick = corr_color(k2, corr);
        REQUIRE(pick.has_value());
        CHECK(corr_is_valid(k2, corr, *pick));
    }
    SECTION("one color fully matched is infeasible") {
        CorrAssignment corr;
        corr.capacity = {1, 1};
        corr.matchings[{0, 1}] = {{0, 0}};
        CHECK_FALSE(corr_color(k2, corr).has_value());
        CHECK_FALSE(corr_is_valid(k2, corr, {0, 0}));
    }
    SECTION("malformed assignments are rejected") {
        CorrAssignment corr;
        corr.capacity = {2, 2};
        corr.matchings[{0, 1}] = {{0, 0}, {0, 1}};
        CHECK_THROWS_AS(corr.validate(k2), Error); // color 0 matched twice
        corr.matchings[{0, 1}] = {{0, 3}};
        CHECK_THROWS_AS(corr.validate(k2), Error); // out of range
        Graph g3(3);
        g3.add_edge(0, 1);
        CorrAssignment corr3;
        corr3.capacity = {1, 1, 1};
        corr3.matchings[{0, 2}] = {{0, 0}};
        CHECK_THROWS_AS(corr3.validate(g3), Error); // non-edge
    }
    SECTION("identity matchings on a 4-cycle behave like proper coloring") {
        Graph c4 = cycle_graph(4);
        CorrAssignment corr;
        corr.capacity.assign(4, 2);
        for (auto [u, v] : c4.edges()) corr.matchings[{u, v}] = {{0, 0}, {1, 1}};
        auto pick = corr_color(c4, corr);
        REQUIRE(pick.has_value());
        CHECK(corr_is_valid(c4, corr, *pick));
    }
}

TEST_CASE("correspondence chromatic numbers on small graphs", "[exact]") {
    Graph k2(2);
    k2.add_edge(0, 1);
    auto r2 = corr_chromatic(k2);
    CHECK(r2.value == 2);
    CHECK(r2.exact);

    Graph k3 = cycle_graph(3);
    auto r3 = corr_chromatic(k3);
    CHECK(r3.value == 3);
    CHECK(r3.exact);

    auto r4 = corr_chromatic(cycle_graph(4));
    CHECK(r4.value == 3); // twisted matchings defeat two colors on even cycles
    CHECK(r4.exact);

    auto r6 = corr_chromatic(cycle_graph(6));
    CHECK(r6.value == 3);
    CHECK(r6.exact);

    Graph k5(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
    auto r5 = corr_chromatic(k5, 40);
    CHECK_FALSE(r5.exact); // above the exhaustive guard, lower bound only
    CHECK(r5.value >= 2);
}

TEST_CASE("coloring parameters chain on subcubic graphs", "[exact]") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : oracles::connected_graph_catalog(n)) {
            if (g.max_degree() > 3) continue;
            int chi = chromatic_number(g).chi;
            int lst = list_chromatic_number(g);
            auto corr = corr_chromatic(g);
            REQUIRE(corr.exact);
            CHECK(chi <= lst);
            CHECK(lst <= corr.value);
        }
}

TEST_CASE("solver size guards trip above their bounds", "[exact]") {
    CHECK_THROWS_AS(chromatic_number(Graph(65)), Error);
    CHECK_THROWS_AS(max_clique(Graph(65)), Error);
    CHECK_THROWS_AS(list_color(Graph(31), std::vector<std::vector<int>>(31)), Error);
    CHECK_THROWS_AS(corr_color(Graph(31), CorrAssignment{}), Error);
    CHECK_THROWS_AS(list_chromatic_number(Graph(9)), Error);
    try {
        chromatic_number(Graph(65));
        FAIL("expected a size guard");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::size_guard);
    }
}
