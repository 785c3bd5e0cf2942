#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "osq/graph.hpp"
#include "osq/parallel.hpp"
#include "osq/sensitivity.hpp"

namespace osq {

// Least-squares fit of ln(sensitivity) against depth. k is the negated
// slope; positive k means the pair's sensitivity decays with depth.
struct DecayFit {
    double k = 0.0;
    double ln_n0 = 0.0;
    int num_points = 0;
};

// Ordered pair: sensitivity of `target`'s representation to `source`'s
// input. k(source->target) and k(target->source) are distinct records.
struct PairDecay {
    int source = 0;
    int target = 0;
    DecayFit fit;
};

namespace detail {

inline DecayFit fit_decay_span(const double* jtilde, int num_points, int first_layer) {
    if (num_points < 2) throw InputError("decay fit needs at least 2 points");
    double lbar = 0.0, ybar = 0.0;
    for (int i = 0; i < num_points; ++i) {
        if (!(jtilde[i] > 0.0)) throw InputError("decay fit requires positive sensitivities");
        lbar += first_layer + i;
        ybar += std::log(jtilde[i]);
    }
    lbar /= num_points;
    ybar /= num_points;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < num_points; ++i) {
        const double dx = (first_layer + i) - lbar;
        sxx += dx * dx;
        sxy += dx * (std::log(jtilde[i]) - ybar);
    }
    const double slope = sxy / sxx;
    // + 0.0 folds a -0.0 slope into +0.0 so constant series report k = 0
    return {-slope + 0.0, ybar - slope * lbar, num_points};
}

}  // namespace detail

// Ordinary least squares on (depth, ln jtilde); exact for two points.
inline DecayFit fit_decay(const std::vector<std::pair<int, double>>& points) {
    if (points.size() < 2) throw InputError("decay fit needs at least 2 points");
    double lbar = 0.0, ybar = 0.0;
    for (auto [l, j] : points) {
        if (!(j > 0.0)) throw InputError("decay fit requires positive sensitivities");
        lbar += l;
        ybar += std::log(j);
    }
    lbar /= static_cast<double>(points.size());
    ybar /= static_cast<double>(points.size());
    double sxx = 0.0, sxy = 0.0;
    for (auto [l, j] : points) {
        const double dx = l - lbar;
        sxx += dx * dx;
        sxy += dx * (std::log(j) - ybar);
    }
    if (sxx == 0.0) throw InputError("decay fit needs at least two distinct depths");
    const double slope = sxy / sxx;
    return {-slope + 0.0, ybar - slope * lbar, static_cast<int>(points.size())};
}

// Decay rates for every ordered same-component pair, emitted target-major
// (target ascending, then source ascending). Targets are independent, so the
// sweep parallelizes across them; each record has a precomputed slot, which
// keeps the output identical for any thread count.
inline std::vector<PairDecay> graph_decay_rates(const Graph& g, const LayerRange& range,
                                                const ComponentLabeling& comps, int threads = 1) {
    std::vector<std::size_t> offset(g.num_nodes + 1, 0);
    for (int v = 0; v < g.num_nodes; ++v) {
        const int size = comps.sizes[comps.label[v]];
        offset[v + 1] = offset[v] + (size >= 2 ? static_cast<std::size_t>(size - 1) : 0);
    }
    std::vector<PairDecay> out(offset[g.num_nodes]);
    parallel_for(g.num_nodes, threads, [&](int v) {
        if (comps.sizes[comps.label[v]] < 2) return;
        const auto cs = column_series(g, v, range);
        std::size_t slot = offset[v];
        for (int u = 0; u < g.num_nodes; ++u) {
            if (u == v || comps.label[u] != comps.label[v]) continue;
            out[slot++] = {u, v,
                           detail::fit_decay_span(cs.series[u].data(), range.length(),
                                                  range.start)};
        }
    });
    return out;
}

inline std::vector<PairDecay> graph_decay_rates(const Graph& g, int threads = 1) {
    const auto comps = connected_components(g);
    const auto range = layer_range_from_diameter(diameter(g, comps).value);
    return graph_decay_rates(g, range, comps, threads);
}

}  // namespace osq
