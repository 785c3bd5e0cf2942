#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "osq/decay.hpp"
#include "osq/graph.hpp"
#include "osq/metrics.hpp"
#include "osq/parallel.hpp"
#include "osq/sensitivity.hpp"

namespace osq {

// Everything the reports need about one measured graph. Graphs whose
// components are all singletons are not measurable; they carry a flagged
// all-zero summary and are skipped by dataset averaging.
struct GraphMeasurement {
    int graph_id = 0;
    int num_nodes = 0;
    int num_edges = 0;
    int num_components = 0;
    int diameter_hops = 0;
    bool measurable = false;
    LayerRange range;
    std::vector<PairDecay> rates;
    GraphSummary summary;
};

inline GraphMeasurement measure_graph(const Graph& g, int graph_id = 0, int threads = 1) {
    GraphMeasurement m;
    m.graph_id = graph_id;
    m.num_nodes = g.num_nodes;
    m.num_edges = g.num_edges();
    const auto comps = connected_components(g);
    m.num_components = comps.num_components;
    const auto diam = diameter(g, comps);
    m.diameter_hops = diam.value;
    std::int64_t same_component_ordered = 0;
    for (int size : comps.sizes)
        same_component_ordered += static_cast<std::int64_t>(size) * (size - 1);
    const std::int64_t total_ordered =
        static_cast<std::int64_t>(g.num_nodes) * (g.num_nodes - 1);
    const std::int64_t excluded = total_ordered - same_component_ordered;
    if (diam.value < 1) {
        m.measurable = false;
        m.summary = summarize({}, excluded);
        return m;
    }
    m.measurable = true;
    m.range = layer_range_from_diameter(diam.value);
    m.rates = graph_decay_rates(g, m.range, comps, threads);
    m.summary = summarize(m.rates, excluded);
    return m;
}

// Measures a whole bundle. Parallelism goes across graphs; a single-graph
// bundle parallelizes across that graph's target nodes instead. Results are
// collected by graph index, so output is independent of the thread count.
inline std::vector<GraphMeasurement> measure_bundle(const std::vector<Graph>& graphs,
                                                    int threads = 1) {
    std::vector<GraphMeasurement> out(graphs.size());
    if (graphs.size() == 1) {
        out[0] = measure_graph(graphs[0], 0, threads);
        return out;
    }
    parallel_for(static_cast<int>(graphs.size()), threads,
                 [&](int i) { out[i] = measure_graph(graphs[i], i, 1); });
    return out;
}

inline std::vector<GraphSummary> summaries_of(const std::vector<GraphMeasurement>& ms) {
    std::vector<GraphSummary> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(m.summary);
    return out;
}

}  // namespace osq
