#pragma once

#include <Eigen/Dense>
#include <vector>

#include "osq/graph.hpp"

namespace osq {

// Personalized-PageRank diffusion S = alpha (I - (1-alpha) T)^-1 with the
// column-stochastic random walk T = A D^-1. Columns are probability
// distributions over the source's component.
struct DiffusionMatrix {
    double alpha = 0.0;
    Eigen::MatrixXd S;
};

// Solved one component at a time: T is block-diagonal under the component
// partition, so cross-component entries are exact zeros rather than solver
// residue. Isolated nodes keep a self-only column.
inline DiffusionMatrix ppr(const Graph& g, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InputError("teleport probability must lie strictly inside (0, 1)");
    const auto comps = connected_components(g);
    DiffusionMatrix out{alpha, Eigen::MatrixXd::Zero(g.num_nodes, g.num_nodes)};
    std::vector<std::vector<int>> members(comps.num_components);
    for (int v = 0; v < g.num_nodes; ++v) members[comps.label[v]].push_back(v);
    for (const auto& nodes : members) {
        const int s = static_cast<int>(nodes.size());
        if (s == 1) {
            out.S(nodes[0], nodes[0]) = 1.0;
            continue;
        }
        std::vector<int> local(g.num_nodes, -1);
        for (int i = 0; i < s; ++i) local[nodes[i]] = i;
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(s, s);
        for (int j = 0; j < s; ++j) {
            const int u = nodes[j];
            const double step = (1.0 - alpha) / g.degree(u);
            for (int w : g.adj[u]) m(local[w], j) -= step;
        }
        const Eigen::MatrixXd block =
            m.partialPivLu().solve(alpha * Eigen::MatrixXd::Identity(s, s));
        for (int j = 0; j < s; ++j)
            for (int i = 0; i < s; ++i) out.S(nodes[i], nodes[j]) = block(i, j);
    }
    return out;
}

}  // namespace osq
