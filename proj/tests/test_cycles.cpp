#include "doctest.h"

#include "geodetic/cycles.hpp"
#include "geodetic/embedded.hpp"
#include "geodetic/generators.hpp"
#include "geodetic/geodesy.hpp"
#include "support/oracles.hpp"

using namespace geodetic;
namespace gen = geodetic::generators;

namespace {

Graph c8_with_antipodal_edge() {
    std::vector<Edge> edges = gen::cycle(8).edges();
    edges.emplace_back(0, 4);
    return from_edge_list(edges);
}

}  // namespace

TEST_CASE("CycleView canonical form") {
    const CycleView a({3, 1, 0, 2});
    CHECK(a.vertices() == std::vector<VertexId>{0, 1, 3, 2});
    const CycleView b({2, 3, 1, 0});
    CHECK(a == b);
    CHECK(a.arc_distance(0, 2) == 2);
    CHECK(a.arc_distance(3, 0) == 1);
    CHECK(a.position(3) == 2u);
    CHECK_FALSE(a.position(9).has_value());
    CHECK_THROWS_AS(CycleView({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(CycleView({1, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(CycleView::in_graph(gen::cycle(4), {0, 2, 1, 3}), std::invalid_argument);
}

TEST_CASE("enumerate_cycles") {
    SUBCASE("K4 up to length 4") {
        const auto cycles = enumerate_cycles(gen::complete(4), 4);
        CHECK(cycles.size() == 7);
        CHECK(std::ranges::count_if(cycles, [](const CycleView& c) { return c.length() == 3; }) == 4);
        CHECK(std::ranges::count_if(cycles, [](const CycleView& c) { return c.length() == 4; }) == 3);
    }
    SUBCASE("C6") {
        const auto cycles = enumerate_cycles(gen::cycle(6), 6);
        REQUIRE(cycles.size() == 1);
        CHECK(cycles[0].vertices() == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
        CHECK(enumerate_cycles(gen::cycle(6), 5).empty());
    }
    SUBCASE("tree") {
        const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}, {3, 4}};
        CHECK(enumerate_cycles(from_edge_list(star), 10).empty());
    }
    SUBCASE("bad cap") { CHECK_THROWS_AS(enumerate_cycles(gen::cycle(4), 2), std::invalid_argument); }
}

TEST_CASE("enumerate_cycles matches brute force and validates") {
    for (const auto& g : testing::small_graph_corpus(120)) {
        for (std::size_t cap : {std::size_t{3}, std::size_t{5}, g.vertex_count()}) {
            if (cap < 3) continue;
            const auto cycles = enumerate_cycles(g, cap);
            const auto expected = testing::brute_force_cycles(g, cap);
            REQUIRE(cycles.size() == expected.size());
            for (std::size_t i = 0; i < cycles.size(); ++i) {
                const auto& c = cycles[i];
                REQUIRE(expected.contains(c.vertices()));
                REQUIRE_NOTHROW(CycleView::in_graph(g, c.vertices()));
                if (i) REQUIRE(cycles[i - 1] < c);
            }
        }
    }
}

TEST_CASE("minimal_even_cycles") {
    SUBCASE("C8 plus an antipodal edge keeps 8 as the shortest even length") {
        const auto r = minimal_even_cycles(c8_with_antipodal_edge(), 10);
        REQUIRE(r.length == 8u);
        REQUIRE(r.cycles.size() == 1);
        CHECK(r.cycles[0].length() == 8);
        // The two cycles through the chord are 5-cycles.
        const auto all = enumerate_cycles(c8_with_antipodal_edge(), 10);
        CHECK(all.size() == 3);
        CHECK(std::ranges::count_if(all, [](const CycleView& c) { return c.length() == 5; }) == 2);
    }
    SUBCASE("odd cycle") { CHECK_FALSE(minimal_even_cycles(gen::cycle(7), 10).length.has_value()); }
    SUBCASE("K4") {
        const auto r = minimal_even_cycles(gen::complete(4), 8);
        CHECK(r.length == 4u);
        CHECK(r.cycles.size() == 3);
    }
}

TEST_CASE("c_opposite_pairs") {
    const auto c4 = c_opposite_pairs(CycleView({0, 1, 2, 3}));
    REQUIRE(c4.size() == 2);
    CHECK(c4[0] == OppositePair{0, 2, 2});
    CHECK(c4[1] == OppositePair{1, 3, 2});

    const auto c6 = c_opposite_pairs(CycleView({0, 1, 2, 3, 4, 5}));
    CHECK(c6.size() == 3);
    for (const auto& p : c6) CHECK(p.arc_length == 3);

    CHECK_THROWS_AS(c_opposite_pairs(CycleView({0, 1, 2, 3, 4})), std::domain_error);
}

TEST_CASE("opposite pairs sit at half the length inside the bare cycle") {
    for (std::size_t len = 4; len <= 12; len += 2) {
        const auto g = gen::cycle(len);
        const DistanceMatrix d(g);
        for (const auto& p : c_opposite_pairs(enumerate_cycles(g, len).front())) {
            CHECK(p.arc_length == len / 2);
            CHECK(d(p.u, p.v) == len / 2);
        }
    }
}

TEST_CASE("lemma1_scan") {
    SUBCASE("bare C6 is its own witness") {
        const auto v = lemma1_scan(gen::cycle(6), 6);
        REQUIRE(v.nongeodetic_witness.has_value());
        CHECK(v.nongeodetic_witness->vertices() == std::vector<VertexId>{0, 1, 2, 3, 4, 5});
        CHECK(v.exhaustive);
    }
    SUBCASE("Petersen has no witness") {
        const auto v = lemma1_scan(gen::petersen(), 10);
        CHECK_FALSE(v.nongeodetic_witness.has_value());
        CHECK(v.exhaustive);
    }
    SUBCASE("H1: chords shortcut every opposite pair") {
        const auto h1 = build({3, 2, {1, 2, 2, 1}, {2, 1}});
        const auto v = lemma1_scan(h1.graph, 7);
        CHECK_FALSE(v.nongeodetic_witness.has_value());
        CHECK(v.exhaustive);
    }
    SUBCASE("cap below the vertex count is not exhaustive") {
        const auto v = lemma1_scan(gen::petersen(), 6);
        CHECK_FALSE(v.exhaustive);
        CHECK(v.scanned_max_length == 6);
    }
    SUBCASE("shortest witness first") {
        // C4 glued to C8 at a vertex: the 4-cycle is reported.
        std::vector<Edge> edges = gen::cycle(8).edges();
        edges.insert(edges.end(), {{0, 8}, {8, 9}, {9, 10}, {10, 0}});
        const auto v = lemma1_scan(from_edge_list(edges), 11);
        REQUIRE(v.nongeodetic_witness.has_value());
        CHECK(v.nongeodetic_witness->length() == 4);
    }
    SUBCASE("disconnected") {
        const std::vector<Edge> edges{{0, 1}, {2, 3}};
        CHECK_THROWS_AS(lemma1_scan(from_edge_list(edges), 4), std::domain_error);
    }
}

TEST_CASE("a lemma1 witness always means K >= 2") {
    for (const auto& g : testing::small_graph_corpus(150)) {
        const auto v = lemma1_scan(g, std::max<std::size_t>(g.vertex_count(), 4));
        if (!v.nongeodetic_witness) continue;
        REQUIRE(count_geodesics(g).k_value() >= 2);
        const DistanceMatrix d(g);
        for (const auto& p : c_opposite_pairs(*v.nongeodetic_witness)) REQUIRE(d(p.u, p.v) == p.arc_length);
    }
}

TEST_CASE("the diamond is nongeodetic without a lemma1 witness") {
    // K4 minus the edge 2-3. The only even cycle 0-2-1-3 has the opposite pair
    // (0, 1) joined by an edge, so the all-pairs test cannot fire.
    const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    const auto g = from_edge_list(edges);
    CHECK(count_geodesics(g).k_value() == 2);
    const auto v = lemma1_scan(g, 4);
    CHECK(v.exhaustive);
    CHECK_FALSE(v.nongeodetic_witness.has_value());
}
