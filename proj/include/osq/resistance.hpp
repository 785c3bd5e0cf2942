#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "osq/graph.hpp"

namespace osq {

// Laplacian pseudoinverse over one connected node set, kept current under
// edge additions by rank-one updates. All indices in the public interface
// are original graph ids; `local()` maps them into the matrix.
class ResistanceState {
public:
    // nodes must be exactly one connected component of g, ascending.
    ResistanceState(const Graph& g, std::vector<int> nodes) : nodes_(std::move(nodes)) {
        const int s = static_cast<int>(nodes_.size());
        if (s < 2) throw InputError("effective resistance needs a component with >= 2 nodes");
        local_.assign(g.num_nodes, -1);
        for (int i = 0; i < s; ++i) local_[nodes_[i]] = i;
        Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(s, s);
        for (int i = 0; i < s; ++i) {
            for (int w : g.adj[nodes_[i]]) {
                const int j = local_[w];
                if (j < 0) throw InputError("resistance node set is not a full component");
                laplacian(i, j) -= 1.0;
                laplacian(i, i) += 1.0;
            }
        }
        // L+ = (L + J/s)^-1 - J/s, valid because the component is connected
        const Eigen::MatrixXd shift = Eigen::MatrixXd::Constant(s, s, 1.0 / s);
        lpinv_ = (laplacian + shift).llt().solve(Eigen::MatrixXd::Identity(s, s)) - shift;
        total_ = s * lpinv_.trace();
    }

    int size() const { return static_cast<int>(nodes_.size()); }
    const std::vector<int>& nodes() const { return nodes_; }
    const Eigen::MatrixXd& lpinv() const { return lpinv_; }
    double total_resistance() const { return total_; }

    int local(int node) const {
        if (node < 0 || node >= static_cast<int>(local_.size()) || local_[node] < 0)
            throw InputError("node " + std::to_string(node) +
                             " lies outside the operative component (infinite resistance)");
        return local_[node];
    }

    double pair_resistance_local(int i, int j) const {
        return lpinv_(i, i) + lpinv_(j, j) - 2.0 * lpinv_(i, j);
    }

    double pair_resistance(int u, int v) const {
        return pair_resistance_local(local(u), local(v));
    }

    // Exact total-resistance drop if the edge (i, j) were added.
    double addition_gain_local(int i, int j) const {
        const Eigen::VectorXd w = lpinv_.col(i) - lpinv_.col(j);
        const double r = w(i) - w(j);
        return size() * w.squaredNorm() / (1.0 + r);
    }

    // Adds the edge via the rank-one identity
    //   L+ <- L+ - (L+ b)(L+ b)^T / (1 + b^T L+ b),  b = e_i - e_j.
    void add_edge_local(int i, int j) {
        if (i == j) throw InputError("cannot add a self-loop");
        const Eigen::VectorXd w = lpinv_.col(i) - lpinv_.col(j);
        const double r = w(i) - w(j);
        lpinv_.noalias() -= (w * w.transpose()) / (1.0 + r);
        total_ = size() * lpinv_.trace();
    }

    void add_edge(int u, int v) { add_edge_local(local(u), local(v)); }

private:
    std::vector<int> nodes_;
    std::vector<int> local_;
    Eigen::MatrixXd lpinv_;
    double total_ = 0.0;
};

// Resistance between two nodes of the operative component; throws for nodes
// outside it (cross-component resistance is infinite).
inline double effective_resistance(const ResistanceState& rs, int u, int v) {
    return rs.pair_resistance(u, v);
}

namespace detail {

// Largest component's nodes, ascending; ties go to the component containing
// the smallest node id (component ids are already ordered that way).
inline std::vector<int> operative_component_nodes(const Graph& g, const ComponentLabeling& comps) {
    int best = -1;
    for (int c = 0; c < comps.num_components; ++c)
        if (best < 0 || comps.sizes[c] > comps.sizes[best]) best = c;
    std::vector<int> nodes;
    if (best < 0) return nodes;
    nodes.reserve(comps.sizes[best]);
    for (int v = 0; v < g.num_nodes; ++v)
        if (comps.label[v] == best) nodes.push_back(v);
    return nodes;
}

}  // namespace detail

}  // namespace osq
