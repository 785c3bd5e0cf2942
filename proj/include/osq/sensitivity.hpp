#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "osq/graph.hpp"

namespace osq {

// Inclusive sweep of message-passing depths, [diameter, 2*diameter - 1],
// widened to [diameter, diameter + 1] when the diameter is 1 so a regression
// always has at least two points.
struct LayerRange {
    int start = 0;
    int end = 0;

    int length() const { return end - start + 1; }
    bool contains(int layer) const { return layer >= start && layer <= end; }
};

inline LayerRange layer_range_from_diameter(int diameter_hops) {
    if (diameter_hops < 1)
        throw NoMeasurablePairs("no measurable pairs: every component is a singleton");
    return {diameter_hops, std::max(2 * diameter_hops - 1, diameter_hops + 1)};
}

inline LayerRange layer_range(const Graph& g) {
    return layer_range_from_diameter(diameter(g).value);
}

// Column v of (A + I)^layer divided by its column sum: node v's relative
// sensitivity to every input node after `layer` rounds of message passing.
struct SensitivityColumn {
    int target = 0;
    int layer = 0;
    std::vector<double> values;  // per source node; sums to 1 over v's component
};

namespace detail {

// y = (A + I) x. Neighbor lists are sorted, so the accumulation order is
// fixed and results do not depend on scheduling.
inline void mul_self_loop_adjacency(const Graph& g, const std::vector<double>& x,
                                    std::vector<double>& y) {
    for (int u = 0; u < g.num_nodes; ++u) {
        double acc = x[u];
        for (int w : g.adj[u]) acc += x[w];
        y[u] = acc;
    }
}

// Fixed ascending-index summation; the normalizer must be reproducible.
inline double ascending_sum(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
}

// In-place x /= sum(x). The final column normalization cancels any positive
// scale factor, so this only guards against overflow of (A + I)^layer
// entries at depths up to 2*diameter - 1.
inline void rescale_by_sum(std::vector<double>& x) {
    const double s = ascending_sum(x);
    if (s > 0.0) {
        for (double& e : x) e /= s;
    }
}

}  // namespace detail

inline SensitivityColumn normalized_column(const Graph& g, int v, int layer) {
    if (v < 0 || v >= g.num_nodes) throw InputError("target node out of range");
    if (layer < 0) throw InputError("layer must be nonnegative");
    std::vector<double> x(g.num_nodes, 0.0), y(g.num_nodes, 0.0);
    x[v] = 1.0;
    for (int step = 0; step < layer; ++step) {
        detail::mul_self_loop_adjacency(g, x, y);
        x.swap(y);
        detail::rescale_by_sum(x);
    }
    detail::rescale_by_sum(x);
    return {v, layer, std::move(x)};
}

// Per-source sensitivity series for one target over a depth range. Sources
// outside the target's component keep an all-zero series (invalid for decay
// fitting). Values for depth r.start + i land in series[u][i] and replicate
// normalized_column(g, v, depth) exactly, computed in one forward pass.
struct ColumnSeries {
    int target = 0;
    LayerRange range;
    std::vector<std::vector<double>> series;

    bool valid(int source) const {
        for (double x : series[source])
            if (x != 0.0) return true;
        return false;
    }
};

inline ColumnSeries column_series(const Graph& g, int v, LayerRange r) {
    if (v < 0 || v >= g.num_nodes) throw InputError("target node out of range");
    if (r.start < 0 || r.end < r.start) throw InputError("bad layer range");
    ColumnSeries out{v, r,
                     std::vector<std::vector<double>>(g.num_nodes,
                                                      std::vector<double>(r.length(), 0.0))};
    std::vector<double> x(g.num_nodes, 0.0), y(g.num_nodes, 0.0);
    x[v] = 1.0;
    auto record = [&](int layer) {
        const double s = detail::ascending_sum(x);
        const int slot = layer - r.start;
        if (s > 0.0) {
            for (int u = 0; u < g.num_nodes; ++u) out.series[u][slot] = x[u] / s;
        } else {
            for (int u = 0; u < g.num_nodes; ++u) out.series[u][slot] = x[u];
        }
    };
    if (r.contains(0)) record(0);
    for (int step = 1; step <= r.end; ++step) {
        detail::mul_self_loop_adjacency(g, x, y);
        x.swap(y);
        detail::rescale_by_sum(x);
        if (step >= r.start) record(step);
    }
    return out;
}

}  // namespace osq
