#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "osq/sensitivity.hpp"

using osq::build_graph;
using osq::Graph;

namespace {

// Reference iteration with a scale factor injected at one step; used to show
// the rescaling cancels out of the normalized column.
std::vector<double> column_with_injected_scale(const Graph& g, int v, int layer,
                                               int inject_at, double scale) {
    std::vector<double> x(g.num_nodes, 0.0), y(g.num_nodes, 0.0);
    x[v] = 1.0;
    for (int step = 0; step < layer; ++step) {
        if (step == inject_at)
            for (double& e : x) e *= scale;
        osq::detail::mul_self_loop_adjacency(g, x, y);
        x.swap(y);
        osq::detail::rescale_by_sum(x);
    }
    osq::detail::rescale_by_sum(x);
    return x;
}

}  // namespace

TEST_CASE("layer_range follows the diameter") {
    CHECK(osq::layer_range_from_diameter(2).start == 2);
    CHECK(osq::layer_range_from_diameter(2).end == 3);
    SECTION("diameter 1 widens to two points") {
        const auto r = osq::layer_range_from_diameter(1);
        CHECK(r.start == 1);
        CHECK(r.end == 2);
    }
    SECTION("diameter 8 spans 8..15") {
        const auto r = osq::layer_range_from_diameter(8);
        CHECK(r.start == 8);
        CHECK(r.end == 15);
        CHECK(r.length() == 8);
    }
    SECTION("all-singleton graphs are not measurable") {
        CHECK_THROWS_AS(osq::layer_range(build_graph(4, {})), osq::NoMeasurablePairs);
    }
    SECTION("from a graph") {
        const auto r = osq::layer_range(build_graph(3, {{0, 1}, {1, 2}}));
        CHECK(r.start == 2);
        CHECK(r.end == 3);
    }
}

TEST_CASE("normalized_column matches hand values") {
    SECTION("layer 0 is the indicator vector") {
        const auto c = osq::normalized_column(build_graph(4, {{0, 1}, {2, 3}}), 2, 0);
        CHECK(c.values == std::vector<double>{0.0, 0.0, 1.0, 0.0});
    }
    SECTION("P3 column 0 at depth 2 is (2,2,1)/5") {
        const auto c = osq::normalized_column(build_graph(3, {{0, 1}, {1, 2}}), 0, 2);
        CHECK(c.values[0] == Catch::Approx(0.4).margin(1e-15));
        CHECK(c.values[1] == Catch::Approx(0.4).margin(1e-15));
        CHECK(c.values[2] == Catch::Approx(0.2).margin(1e-15));
    }
    SECTION("dyad columns are (1/2, 1/2) for every positive depth") {
        const Graph dyad = build_graph(2, {{0, 1}});
        for (int layer : {1, 2, 3, 10, 40}) {
            const auto c = osq::normalized_column(dyad, 0, layer);
            CHECK(c.values[0] == Catch::Approx(0.5).margin(1e-14));
            CHECK(c.values[1] == Catch::Approx(0.5).margin(1e-14));
        }
    }
}

TEST_CASE("streaming columns equal the dense matrix-power oracle") {
    std::mt19937_64 rng(101);
    double worst = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(rng, 2 + trial % 11, 0.4);
        const int v = std::uniform_int_distribution<int>(0, g.num_nodes - 1)(rng);
        for (int layer = 0; layer <= 10; ++layer) {
            const auto got = osq::normalized_column(g, v, layer);
            const auto want = oracle::normalized_column_dense(g, v, layer);
            for (int u = 0; u < g.num_nodes; ++u)
                worst = std::max(worst, std::fabs(got.values[u] - want[u]));
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("columns are stochastic with the right zero pattern") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_graph(rng, 2 + trial % 10, 0.3);
        const auto comps = osq::connected_components(g);
        const auto diam = osq::diameter(g, comps);
        if (diam.value < 1) continue;
        const auto fw = oracle::floyd_warshall(g);
        const auto range = osq::layer_range_from_diameter(diam.value);
        for (int v = 0; v < g.num_nodes; ++v) {
            for (int layer : {range.start, range.end}) {
                const auto c = osq::normalized_column(g, v, layer);
                double sum = 0.0;
                for (double x : c.values) sum += x;
                CHECK(std::fabs(sum - 1.0) <= 1e-12);
                for (int u = 0; u < g.num_nodes; ++u) {
                    const bool same_comp = comps.label[u] == comps.label[v];
                    const bool reachable = same_comp && fw[u][v] <= layer;
                    if (reachable)
                        CHECK(c.values[u] > 0.0);
                    else
                        CHECK(c.values[u] == 0.0);
                }
            }
        }
    }
}

TEST_CASE("column_series streams the same values as per-depth columns") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = oracle::random_connected_graph(rng, 3 + trial % 8, 0.3);
        const auto range = osq::layer_range(g);
        for (int v = 0; v < g.num_nodes; ++v) {
            const auto cs = osq::column_series(g, v, range);
            for (int layer = range.start; layer <= range.end; ++layer) {
                const auto col = osq::normalized_column(g, v, layer);
                for (int u = 0; u < g.num_nodes; ++u)
                    CHECK(cs.series[u][layer - range.start] == col.values[u]);  // bit-identical
            }
        }
    }

    SECTION("spec example: P3 target 0, source 2 over depths {2,3}") {
        const auto cs = osq::column_series(build_graph(3, {{0, 1}, {1, 2}}), 0, {2, 3});
        CHECK(cs.series[2][0] == Catch::Approx(0.2).margin(1e-15));
        CHECK(cs.series[2][1] == Catch::Approx(0.25).margin(1e-15));
        CHECK(cs.valid(2));
    }
    SECTION("cross-component sources yield an all-zero, invalid series") {
        const auto cs = osq::column_series(build_graph(3, {{0, 1}}), 0, {1, 2});
        CHECK_FALSE(cs.valid(2));
        CHECK(cs.series[2] == std::vector<double>{0.0, 0.0});
        CHECK(cs.valid(1));
    }
}

TEST_CASE("positive rescaling cancels out of the normalized column") {
    std::mt19937_64 rng(109);
    const Graph g = oracle::random_connected_graph(rng, 9, 0.35);
    const int layer = 7;
    for (int v = 0; v < g.num_nodes; ++v) {
        const auto base = osq::normalized_column(g, v, layer);
        // power-of-two scales pass through the arithmetic exactly
        for (double scale : {0.5, 2.0, 1024.0, 0x1p-40}) {
            for (int inject_at : {0, 3, 6}) {
                const auto scaled = column_with_injected_scale(g, v, layer, inject_at, scale);
                CHECK(scaled == base.values);  // bit-identical
            }
        }
        // arbitrary positive scales agree to roundoff
        const auto scaled = column_with_injected_scale(g, v, layer, 2, 3.7);
        for (int u = 0; u < g.num_nodes; ++u)
            CHECK(scaled[u] == Catch::Approx(base.values[u]).epsilon(1e-13).margin(1e-300));
    }
}

TEST_CASE("linear-network Jacobian ratios reproduce the normalized column") {
    std::mt19937_64 rng(113);
    std::uniform_int_distribution<int> dim(2, 4);
    std::normal_distribution<double> weight(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = oracle::random_graph(rng, 2 + trial % 7, 0.4);
        const int layers = 1 + trial % 4;
        std::vector<Eigen::MatrixXd> weights;
        int rows = dim(rng);
        for (int l = 0; l < layers; ++l) {
            const int cols = dim(rng);
            Eigen::MatrixXd w(rows, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) w(i, j) = weight(rng);
            weights.push_back(w);
            rows = cols;
        }
        for (int v = 0; v < g.num_nodes; ++v) {
            const auto want = oracle::linear_gnn_relative_jacobian(g, v, layers, weights);
            const auto got = osq::normalized_column(g, v, layers);
            for (int u = 0; u < g.num_nodes; ++u)
                worst = std::max(worst, std::fabs(got.values[u] - want[u]));
        }
    }
    CHECK(worst <= 1e-10);
}
