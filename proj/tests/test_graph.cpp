#include "doctest.h"

#include "geodetic/generators.hpp"
#include "geodetic/graph.hpp"
#include "support/oracles.hpp"

using namespace geodetic;
namespace gen = geodetic::generators;

TEST_CASE("from_edge_list builds simple graphs") {
    SUBCASE("triangle") {
        const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}};
        const auto g = from_edge_list(edges);
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 3);
    }
    SUBCASE("empty") {
        const auto g = from_edge_list({});
        CHECK(g.vertex_count() == 0);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("duplicates collapse") {
        const std::vector<Edge> edges{{0, 1}, {0, 1}, {1, 2}};
        const auto g = from_edge_list(edges);
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 2);
        CHECK(g.has_edge(1, 0));
    }
    SUBCASE("self-loop rejected") {
        const std::vector<Edge> edges{{0, 1}, {2, 2}};
        CHECK_THROWS_AS(from_edge_list(edges), std::invalid_argument);
    }
}

TEST_CASE("edge-list text format") {
    const auto g = parse_edge_list("# header\n0 1\n\n  1 2\n2 0\n");
    CHECK(g.edge_count() == 3);

    try {
        parse_edge_list("0 1\n# fine\n3 3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("a b\n"), ParseError);
}

TEST_CASE("edge-list round trip keeps adjacency") {
    for (const auto& g : testing::small_graph_corpus(60)) {
        if (g.edge_count() == 0) continue;
        const auto again = parse_edge_list(to_edge_list(g));
        // Trailing isolated vertices are not representable in the format.
        REQUIRE(again.vertex_count() <= g.vertex_count());
        for (VertexId v = 0; v < again.vertex_count(); ++v) {
            CHECK(std::ranges::equal(again.neighbors(v), g.neighbors(v)));
        }
    }
}

TEST_CASE("bfs distances") {
    SUBCASE("C6") {
        const auto t = bfs_distances(gen::cycle(6), 0);
        CHECK(*t.dist[3] == 3);
        CHECK(*t.dist[1] == 1);
        CHECK(*t.dist[5] == 1);
    }
    SUBCASE("K4") {
        for (VertexId s = 0; s < 4; ++s) {
            const auto t = bfs_distances(gen::complete(4), s);
            for (VertexId v = 0; v < 4; ++v) CHECK(*t.dist[v] == (v == s ? 0u : 1u));
        }
    }
    SUBCASE("Petersen") {
        const auto p = gen::petersen();
        for (VertexId s = 0; s < 10; ++s) {
            const auto t = bfs_distances(p, s);
            CHECK(std::ranges::count(t.dist, std::optional<std::uint32_t>{1}) == 3);
            CHECK(std::ranges::count(t.dist, std::optional<std::uint32_t>{2}) == 6);
        }
    }
    SUBCASE("unreachable is a distinct state") {
        const std::vector<Edge> edges{{0, 1}, {2, 3}};
        const auto t = bfs_distances(from_edge_list(edges), 0);
        CHECK_FALSE(t.dist[2].has_value());
    }
    CHECK_THROWS_AS(bfs_distances(gen::cycle(4), 4), std::domain_error);
}

TEST_CASE("connectivity and diameter") {
    CHECK(is_connected(gen::cycle(6)));
    const std::vector<Edge> two_triangles{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    CHECK_FALSE(is_connected(from_edge_list(two_triangles)));
    CHECK(is_connected(Graph(1, {})));
    CHECK(is_connected(Graph()));

    CHECK(diameter(gen::cycle(8)) == 4);
    CHECK(diameter(gen::complete(5)) == 1);
    CHECK(diameter(gen::path(4)) == 4);
    CHECK_THROWS_AS(diameter(from_edge_list(two_triangles)), std::domain_error);
}

TEST_CASE("distance metric properties on the corpus") {
    for (const auto& g : testing::small_graph_corpus(120)) {
        const DistanceMatrix d(g);
        const auto n = static_cast<VertexId>(g.vertex_count());
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = 0; v < n; ++v) {
                REQUIRE(d(u, v) == d(v, u));
                for (VertexId w = 0; w < n; ++w) REQUIRE(d(u, w) <= d(u, v) + d(v, w));
            }
        }
        const auto t = bfs_distances(g, 0);
        for (const auto& [a, b] : g.edges()) {
            REQUIRE(std::max(*t.dist[a], *t.dist[b]) - std::min(*t.dist[a], *t.dist[b]) <= 1);
        }
    }
}

TEST_CASE("graph invariants") {
    const auto p = gen::petersen();
    std::size_t degree_sum = 0;
    for (VertexId v = 0; v < p.vertex_count(); ++v) {
        degree_sum += p.degree(v);
        for (VertexId w : p.neighbors(v)) CHECK(p.has_edge(w, v));
        CHECK_FALSE(p.has_edge(v, v));
    }
    CHECK(degree_sum == 2 * p.edge_count());
    CHECK(p.edge_count() == 15);
}
