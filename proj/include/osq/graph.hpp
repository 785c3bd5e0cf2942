#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace osq {

// Bad user input (file contents, indices, parameters).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The graph has no connected node pair, so no sensitivity decay can be
// measured on it.
struct NoMeasurablePairs : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kUnreachable = -1;

// Undirected simple graph. Immutable once built; adjacency lists are sorted
// ascending so every downstream iteration is reproducible.
struct Graph {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted, deduplicated
    std::vector<std::vector<int>> adj;       // sorted neighbor lists
    int dropped_self_loops = 0;              // tally from construction

    int num_edges() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        const auto& a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    bool operator==(const Graph& other) const {
        return num_nodes == other.num_nodes && edges == other.edges;
    }
};

// Builds a simple graph from an arbitrary edge list. Duplicate and reversed
// edges collapse; self-loops are dropped and tallied (the sensitivity step
// adds exactly one structural self-loop per node analytically, so stored
// self-loops would double it).
inline Graph build_graph(int num_nodes, const std::vector<std::pair<int, int>>& edge_list) {
    if (num_nodes < 0) throw InputError("node count must be nonnegative");
    Graph g;
    g.num_nodes = num_nodes;
    g.edges.reserve(edge_list.size());
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        auto [u, v] = edge_list[i];
        if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes)
            throw InputError("edge " + std::to_string(i) + " = (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") out of range for " + std::to_string(num_nodes) +
                             " nodes");
        if (u == v) {
            ++g.dropped_self_loops;
            continue;
        }
        if (u > v) std::swap(u, v);
        g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    g.adj.assign(num_nodes, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

struct ComponentLabeling {
    std::vector<int> label;  // per-node component id
    std::vector<int> sizes;  // per-component node count
    int num_components = 0;
};

// BFS labeling; component ids are assigned in order of each component's
// smallest node index.
inline ComponentLabeling connected_components(const Graph& g) {
    ComponentLabeling out;
    out.label.assign(g.num_nodes, -1);
    std::vector<int> frontier;
    for (int s = 0; s < g.num_nodes; ++s) {
        if (out.label[s] != -1) continue;
        const int id = out.num_components++;
        out.sizes.push_back(0);
        frontier.assign(1, s);
        out.label[s] = id;
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            const int v = frontier[head];
            ++out.sizes[id];
            for (int w : g.adj[v]) {
                if (out.label[w] == -1) {
                    out.label[w] = id;
                    frontier.push_back(w);
                }
            }
        }
    }
    return out;
}

// Hop distances from source; unreachable nodes stay kUnreachable.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.num_nodes) throw InputError("BFS source out of range");
    std::vector<int> dist(g.num_nodes, kUnreachable);
    std::vector<int> frontier{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        const int v = frontier[head];
        for (int w : g.adj[v]) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                frontier.push_back(w);
            }
        }
    }
    return dist;
}

struct Diameter {
    int value = 0;                   // max eccentricity over all components, in hops
    std::vector<int> per_component;  // diameter of each component (singletons -> 0)
};

// All-pairs BFS, maxima kept per component. Disconnected graphs report the
// max over component diameters.
inline Diameter diameter(const Graph& g, const ComponentLabeling& comps) {
    Diameter d;
    d.per_component.assign(comps.num_components, 0);
    for (int s = 0; s < g.num_nodes; ++s) {
        if (comps.sizes[comps.label[s]] < 2) continue;
        const auto dist = bfs_distances(g, s);
        int& best = d.per_component[comps.label[s]];
        for (int v = 0; v < g.num_nodes; ++v)
            if (dist[v] > best) best = dist[v];
    }
    for (int x : d.per_component) d.value = std::max(d.value, x);
    return d;
}

inline Diameter diameter(const Graph& g) { return diameter(g, connected_components(g)); }

}  // namespace osq
