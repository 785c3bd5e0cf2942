#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"
#include "osq/graph.hpp"

using osq::build_graph;
using osq::Graph;

TEST_CASE("build_graph constructs simple graphs") {
    const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.num_nodes == 3);
    CHECK(p3.num_edges() == 2);
    CHECK(p3.adj[1] == std::vector<int>{0, 2});

    SECTION("duplicates, reversals and self-loops collapse") {
        const Graph dyad = build_graph(2, {{0, 1}, {1, 0}, {0, 0}});
        CHECK(dyad.num_edges() == 1);
        CHECK(dyad.dropped_self_loops == 1);
        CHECK(dyad.has_edge(0, 1));
        CHECK(dyad.has_edge(1, 0));
        CHECK_FALSE(dyad.has_edge(0, 0));
    }

    SECTION("out-of-range endpoints are rejected with the offending edge") {
        CHECK_THROWS_WITH(build_graph(4, {{0, 5}}),
                          Catch::Matchers::ContainsSubstring("(0, 5)"));
        CHECK_THROWS_AS(build_graph(4, {{-1, 2}}), osq::InputError);
    }

    SECTION("rebuilding from the emitted edge list is idempotent") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            const Graph g = oracle::random_graph(rng, 1 + trial % 10, 0.4);
            CHECK(build_graph(g.num_nodes, g.edges) == g);
        }
    }
}

TEST_CASE("connected_components labels by smallest contained node") {
    SECTION("path is one component") {
        const auto c = osq::connected_components(build_graph(3, {{0, 1}, {1, 2}}));
        CHECK(c.num_components == 1);
        CHECK(c.sizes == std::vector<int>{3});
    }
    SECTION("two disjoint edges") {
        const auto c = osq::connected_components(build_graph(4, {{0, 1}, {2, 3}}));
        CHECK(c.num_components == 2);
        CHECK(c.sizes == std::vector<int>{2, 2});
        CHECK(c.label == std::vector<int>{0, 0, 1, 1});
    }
    SECTION("isolated node plus dyad") {
        const auto c = osq::connected_components(build_graph(3, {{1, 2}}));
        CHECK(c.num_components == 2);
        CHECK(c.sizes == std::vector<int>{1, 2});
    }
    SECTION("sizes always sum to the node count") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 30; ++trial) {
            const Graph g = oracle::random_graph(rng, 1 + trial % 12, 0.25);
            const auto c = osq::connected_components(g);
            int total = 0;
            for (int s : c.sizes) total += s;
            CHECK(total == g.num_nodes);
            for (int v = 0; v < g.num_nodes; ++v) {
                CHECK(c.label[v] >= 0);
                CHECK(c.label[v] < c.num_components);
            }
        }
    }
}

TEST_CASE("bfs_distances") {
    CHECK(osq::bfs_distances(build_graph(3, {{0, 1}, {1, 2}}), 0) ==
          std::vector<int>{0, 1, 2});
    CHECK(osq::bfs_distances(build_graph(3, {{0, 1}}), 0) ==
          std::vector<int>{0, 1, osq::kUnreachable});
    CHECK(osq::bfs_distances(build_graph(1, {}), 0) == std::vector<int>{0});
    CHECK_THROWS_AS(osq::bfs_distances(build_graph(2, {{0, 1}}), 5), osq::InputError);
}

TEST_CASE("diameter") {
    CHECK(osq::diameter(build_graph(3, {{0, 1}, {1, 2}})).value == 2);
    CHECK(osq::diameter(build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})).value ==
          1);
    SECTION("disconnected graphs take the max over components") {
        const Graph two_triangles =
            build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
        const auto d = osq::diameter(two_triangles);
        CHECK(d.value == 1);
        CHECK(d.per_component == std::vector<int>{1, 1});
    }
    SECTION("all-singleton graphs have diameter 0") {
        CHECK(osq::diameter(build_graph(3, {})).value == 0);
    }
    SECTION("matches the max finite Floyd-Warshall entry on random graphs") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 40; ++trial) {
            const Graph g = oracle::random_graph(rng, 2 + trial % 11, 0.3);
            const auto fw = oracle::floyd_warshall(g);
            int expect = 0;
            for (const auto& row : fw)
                for (int d : row) expect = std::max(expect, d);
            CHECK(osq::diameter(g).value == expect);

            // BFS agrees row by row; component labels agree with reachability
            const auto comps = osq::connected_components(g);
            for (int s = 0; s < g.num_nodes; ++s) {
                const auto dist = osq::bfs_distances(g, s);
                for (int v = 0; v < g.num_nodes; ++v) {
                    CHECK(dist[v] == fw[s][v]);
                    CHECK((comps.label[s] == comps.label[v]) == (fw[s][v] >= 0));
                }
            }
        }
    }
}
