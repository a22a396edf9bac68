#include "doctest.h"

#include "geodetic/generators.hpp"
#include "geodetic/geodesy.hpp"
#include "support/oracles.hpp"

using namespace geodetic;
namespace gen = geodetic::generators;

namespace {

// `diamonds` 4-cycles glued end to end: 2^diamonds geodesics end to end.
Graph diamond_chain(std::size_t diamonds) {
    std::vector<Edge> edges;
    VertexId tip = 0, next = 1;
    for (std::size_t i = 0; i < diamonds; ++i) {
        const VertexId a = next++, b = next++, end = next++;
        edges.insert(edges.end(), {{tip, a}, {tip, b}, {a, end}, {b, end}});
        tip = end;
    }
    return from_edge_list(edges);
}

}  // namespace

TEST_CASE("count_geodesics small fixtures") {
    SUBCASE("C4") {
        const auto p = count_geodesics(gen::cycle(4));
        CHECK(p.count(0, 2) == 2);
        CHECK(p.count(1, 3) == 2);
        CHECK(p.count(0, 1) == 1);
        CHECK(p.k_value() == 2);
        CHECK(p.witness_pair() == Edge{0, 2});
    }
    SUBCASE("K4") {
        const auto p = count_geodesics(gen::complete(4));
        CHECK(p.k_value() == 1);
        for (VertexId u = 0; u < 4; ++u)
            for (VertexId v = 0; v < 4; ++v) CHECK(p.count(u, v) == 1);
    }
    SUBCASE("Petersen is geodetic") {
        CHECK(count_geodesics(gen::petersen()).k_value() == 1);
    }
    SUBCASE("diagonal") {
        const auto p = count_geodesics(gen::cycle(5));
        for (VertexId v = 0; v < 5; ++v) {
            CHECK(p.count(v, v) == 1);
            CHECK(p.distance(v, v) == 0);
        }
    }
    SUBCASE("disconnected") {
        const std::vector<Edge> edges{{0, 1}, {2, 3}};
        CHECK_THROWS_AS(count_geodesics(from_edge_list(edges)), std::domain_error);
    }
}

TEST_CASE("count_geodesics fails loudly on overflow") {
    CHECK(count_geodesics(diamond_chain(10)).k_value() == 1024);
    CHECK(count_geodesics(diamond_chain(63)).k_value() == (PathCount{1} << 63));
    CHECK_THROWS_AS(count_geodesics(diamond_chain(64)), std::overflow_error);
}

TEST_CASE("classify_k") {
    CHECK(class_for_k(1).kind == GeodeticKind::Geodetic);
    CHECK(class_for_k(2).kind == GeodeticKind::Bigeodetic);
    CHECK(class_for_k(3).kind == GeodeticKind::Trigeodetic);
    CHECK(class_for_k(7) == GeodeticClass{GeodeticKind::KGeodetic, 7});
    CHECK(classify_k(count_geodesics(gen::cycle(6))).kind == GeodeticKind::Bigeodetic);
    CHECK(to_string(class_for_k(1)) == "GEODETIC (K=1)");
    CHECK(to_string(class_for_k(5)) == "KGEODETIC (K=5)");
}

TEST_CASE("C6 antipodal pairs have exactly the two arcs as geodesics") {
    const auto c6 = gen::cycle(6);
    const auto paths = enumerate_geodesics(c6, 0, 3, 10);
    REQUIRE(paths.paths.size() == 2);
    CHECK(paths.paths[0] == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(paths.paths[1] == std::vector<VertexId>{0, 5, 4, 3});
}

TEST_CASE("enumerate_geodesics") {
    SUBCASE("C4 opposite") {
        const auto r = enumerate_geodesics(gen::cycle(4), 0, 2, 10);
        CHECK(r.paths.size() == 2);
        CHECK_FALSE(r.truncated);
        for (const auto& p : r.paths) CHECK(p.size() == 3);
    }
    SUBCASE("K4 edge") {
        const auto r = enumerate_geodesics(gen::complete(4), 1, 3, 10);
        REQUIRE(r.paths.size() == 1);
        CHECK(r.paths[0] == std::vector<VertexId>{1, 3});
    }
    SUBCASE("Petersen non-adjacent pairs") {
        const auto p = gen::petersen();
        const auto profile = count_geodesics(p);
        for (VertexId u = 0; u < 10; ++u) {
            for (VertexId v = 0; v < 10; ++v) {
                if (u == v || p.has_edge(u, v)) continue;
                const auto r = enumerate_geodesics(p, u, v, 10);
                REQUIRE(r.paths.size() == 1);
                CHECK(r.paths[0].size() == 3);
                CHECK(profile.count(u, v) == 1);
            }
        }
    }
    SUBCASE("truncation is flagged") {
        const auto r = enumerate_geodesics(diamond_chain(3), 0, 9, 5);
        CHECK(r.paths.size() == 5);
        CHECK(r.truncated);
    }
    SUBCASE("u == v") {
        const auto r = enumerate_geodesics(gen::cycle(4), 2, 2, 3);
        REQUIRE(r.paths.size() == 1);
        CHECK(r.paths[0] == std::vector<VertexId>{2});
    }
}

TEST_CASE("profile agrees with exhaustive enumeration of simple paths") {
    for (const auto& g : testing::small_graph_corpus(150)) {
        const auto profile = count_geodesics(g);
        const auto brute = testing::exhaustive_shortest_paths(g);
        const auto n = static_cast<VertexId>(g.vertex_count());
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = 0; v < n; ++v) {
                REQUIRE(profile.distance(u, v) == brute[u * n + v].min_length);
                REQUIRE(profile.count(u, v) == brute[u * n + v].count);
                REQUIRE(profile.count(u, v) == profile.count(v, u));
            }
        }
        if (n > 0) CHECK(profile.k_value() >= 1);
    }
}

TEST_CASE("enumerated geodesics match counts and climb BFS levels") {
    for (const auto& g : testing::small_graph_corpus(80)) {
        const auto profile = count_geodesics(g);
        const auto n = static_cast<VertexId>(g.vertex_count());
        for (VertexId u = 0; u < n; ++u) {
            const auto from_u = bfs_distances(g, u);
            for (VertexId v = 0; v < n; ++v) {
                const auto r = enumerate_geodesics(g, u, v, 1'000'000);
                REQUIRE(r.paths.size() == profile.count(u, v));
                for (const auto& path : r.paths) {
                    REQUIRE(path.size() == profile.distance(u, v) + 1);
                    for (std::size_t i = 0; i < path.size(); ++i) REQUIRE(*from_u.dist[path[i]] == i);
                    for (std::size_t i = 0; i + 1 < path.size(); ++i) REQUIRE(g.has_edge(path[i], path[i + 1]));
                }
            }
        }
    }
}
