#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "osq/diffusion.hpp"
#include "osq/graph.hpp"
#include "osq/io.hpp"
#include "osq/resistance.hpp"

namespace osq {

enum class RewireMethod { Digl, Gtr, Fosr, Import };

inline const char* rewire_method_name(RewireMethod m) {
    switch (m) {
        case RewireMethod::Digl: return "digl";
        case RewireMethod::Gtr: return "gtr";
        case RewireMethod::Fosr: return "fosr";
        case RewireMethod::Import: return "import";
    }
    return "?";
}

inline RewireMethod parse_rewire_method(const std::string& name) {
    if (name == "digl") return RewireMethod::Digl;
    if (name == "gtr") return RewireMethod::Gtr;
    if (name == "fosr") return RewireMethod::Fosr;
    if (name == "import") return RewireMethod::Import;
    throw InputError("unknown rewiring method: " + name);
}

struct RewireParams {
    RewireMethod method = RewireMethod::Digl;
    double alpha = 0.15;       // digl: teleport probability
    double eps = 1e-4;         // digl: sparsification threshold
    int num_edges = 1;         // gtr / fosr: additions
    int init_iters = 50;       // fosr: power-iteration warmup
    std::uint64_t seed = 0;    // fosr: initial vector
    std::string path;          // import: edge-list file
};

// ---------------------------------------------------------------------------
// DIGL-style: personalized-PageRank diffusion followed by sparsification.
// The output is binarized, since the sensitivity measurement is defined on
// unweighted adjacency. Entries that are exactly zero never become edges, so
// eps = 0 yields the complete graph on each component's support.
inline Graph rewire_digl(const Graph& g, double alpha, double eps) {
    if (eps < 0.0) throw InputError("sparsification threshold must be nonnegative");
    const auto dm = ppr(g, alpha);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.num_nodes; ++u) {
        for (int v = u + 1; v < g.num_nodes; ++v) {
            const double w = std::max(dm.S(u, v), dm.S(v, u));
            if (w > 0.0 && w >= eps) edges.emplace_back(u, v);
        }
    }
    return build_graph(g.num_nodes, edges);
}

// ---------------------------------------------------------------------------
// GTR-style: greedily add the non-edge with the largest exact decrease of the
// component's total effective resistance, maintaining L+ by rank-one updates.
// Only the largest component is rewired (the pseudoinverse needs
// connectivity); everything else passes through. A budget larger than the
// remaining non-edges stops early once the component is complete.
inline constexpr double kGtrTieRelTol = 1e-9;

inline Graph rewire_gtr(const Graph& g, int num_edges) {
    if (num_edges < 0) throw InputError("number of edges to add must be nonnegative");
    const auto comps = connected_components(g);
    const auto nodes = detail::operative_component_nodes(g, comps);
    const int s = static_cast<int>(nodes.size());
    long long within = 0;
    if (s > 0) {
        const int op_label = comps.label[nodes[0]];
        for (auto [u, v] : g.edges)
            if (comps.label[u] == op_label) ++within;
    }
    const long long non_edges = static_cast<long long>(s) * (s - 1) / 2 - within;
    if (s < 3 || non_edges <= 0)
        throw InputError("gtr: operative component has no candidate non-edges");

    ResistanceState rs(g, nodes);
    std::vector<std::vector<bool>> present(s, std::vector<bool>(s, false));
    for (auto [u, v] : g.edges) {
        if (comps.label[u] != comps.label[nodes[0]]) continue;
        present[rs.local(u)][rs.local(v)] = true;
        present[rs.local(v)][rs.local(u)] = true;
    }
    auto edges = g.edges;
    for (int added = 0; added < num_edges; ++added) {
        int best_i = -1, best_j = -1;
        double best_gain = 0.0;
        for (int i = 0; i < s; ++i) {
            for (int j = i + 1; j < s; ++j) {
                if (present[i][j]) continue;
                const double gain = rs.addition_gain_local(i, j);
                // Candidates equivalent under a graph automorphism have
                // mathematically equal gains that differ by roundoff dust;
                // anything inside the relative window counts as a tie and
                // falls to the lexicographically smallest pair.
                if (best_i < 0 || gain > best_gain * (1.0 + kGtrTieRelTol)) {
                    best_i = i;
                    best_j = j;
                    best_gain = gain;
                }
            }
        }
        if (best_i < 0) break;  // component is complete
        rs.add_edge_local(best_i, best_j);
        present[best_i][best_j] = true;
        present[best_j][best_i] = true;
        edges.emplace_back(nodes[best_i], nodes[best_j]);
    }
    return build_graph(g.num_nodes, edges);
}

// ---------------------------------------------------------------------------
// FoSR-style: spectral-gap greedy edge addition guided by an approximate
// first nontrivial eigenvector of D^{-1/2} A D^{-1/2} on the operative
// component, maintained by power iteration with the trivial sqrt-degree
// direction projected out after every step.
class FosrState {
public:
    FosrState(const Graph& g, const std::vector<int>& nodes, std::uint64_t seed)
        : nodes_(nodes) {
        const int s = static_cast<int>(nodes_.size());
        local_.assign(g.num_nodes, -1);
        for (int i = 0; i < s; ++i) local_[nodes_[i]] = i;
        adj_.resize(s);
        for (int i = 0; i < s; ++i)
            for (int w : g.adj[nodes_[i]]) adj_[i].push_back(local_[w]);
        degree_.resize(s);
        for (int i = 0; i < s; ++i) degree_[i] = static_cast<int>(adj_[i].size());
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        x_.resize(s);
        for (double& e : x_) e = unit(rng);
        normalize(x_);
    }

    const std::vector<double>& eigvec() const { return x_; }
    const std::vector<int>& degrees() const { return degree_; }
    const std::vector<int>& nodes() const { return nodes_; }

    // One power-iteration step, then deflation of the sqrt-degree direction
    // and renormalization.
    void power_step() {
        const int s = static_cast<int>(x_.size());
        std::vector<double> y(s, 0.0);
        for (int i = 0; i < s; ++i) {
            double acc = 0.0;
            for (int j : adj_[i]) acc += x_[j] / std::sqrt(static_cast<double>(degree_[j]));
            y[i] = acc / std::sqrt(static_cast<double>(degree_[i]));
        }
        deflate(y);
        normalize(y);
        x_.swap(y);
    }

    // Adds the local edge and keeps the degree/adjacency bookkeeping current.
    void add_edge_local(int i, int j) {
        adj_[i].push_back(j);
        adj_[j].push_back(i);
        ++degree_[i];
        ++degree_[j];
    }

    bool has_edge_local(int i, int j) const {
        for (int w : adj_[i])
            if (w == j) return true;
        return false;
    }

private:
    void deflate(std::vector<double>& y) const {
        double dot = 0.0, norm_sq = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double sd = std::sqrt(static_cast<double>(degree_[i]));
            dot += y[i] * sd;
            norm_sq += static_cast<double>(degree_[i]);
        }
        const double coeff = dot / norm_sq;
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] -= coeff * std::sqrt(static_cast<double>(degree_[i]));
    }

    static void normalize(std::vector<double>& y) {
        double norm_sq = 0.0;
        for (double e : y) norm_sq += e * e;
        const double norm = std::sqrt(norm_sq);
        if (norm > 0.0)
            for (double& e : y) e /= norm;
    }

    std::vector<int> nodes_;
    std::vector<int> local_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> degree_;
    std::vector<double> x_;
};

// Candidate score for adding (u, v): the edge most negative under the
// current eigenvector estimate widens the spectral gap the most. Degrees are
// the pre-addition ones.
inline double fosr_edge_score(double xu, double xv, int du, int dv) {
    return xu * xv / std::sqrt(static_cast<double>(1 + du) * static_cast<double>(1 + dv));
}

inline Graph rewire_fosr(const Graph& g, int num_edges, int init_iters, std::uint64_t seed) {
    if (num_edges < 0) throw InputError("number of edges to add must be nonnegative");
    if (init_iters < 0) throw InputError("power-iteration count must be nonnegative");
    const auto comps = connected_components(g);
    const auto nodes = detail::operative_component_nodes(g, comps);
    const int s = static_cast<int>(nodes.size());
    bool has_candidate = false;
    for (int i = 0; i < s && !has_candidate; ++i)
        for (int j = i + 1; j < s && !has_candidate; ++j)
            if (!g.has_edge(nodes[i], nodes[j])) has_candidate = true;
    if (!has_candidate) throw InputError("fosr: operative component has no candidate non-edges");

    FosrState state(g, nodes, seed);
    for (int it = 0; it < init_iters; ++it) state.power_step();
    auto edges = g.edges;
    for (int added = 0; added < num_edges; ++added) {
        const auto& x = state.eigvec();
        const auto& deg = state.degrees();
        int best_i = -1, best_j = -1;
        double best_score = 0.0;
        for (int i = 0; i < s; ++i) {
            for (int j = i + 1; j < s; ++j) {
                if (state.has_edge_local(i, j)) continue;
                const double score = fosr_edge_score(x[i], x[j], deg[i], deg[j]);
                // strict < keeps the lexicographically smallest pair on ties
                if (best_i < 0 || score < best_score) {
                    best_i = i;
                    best_j = j;
                    best_score = score;
                }
            }
        }
        if (best_i < 0) break;  // component is complete
        state.add_edge_local(best_i, best_j);
        edges.emplace_back(nodes[best_i], nodes[best_j]);
        state.power_step();
    }
    return build_graph(g.num_nodes, edges);
}

// ---------------------------------------------------------------------------
// Import of an externally rewired edge list (e.g., SDRF/BORF output), kept on
// the base graph's node set.
inline Graph import_rewired(const std::string& path, const Graph& base) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open rewired edge list: " + path);
    const auto parsed = parse_edge_list(in, path);
    if (parsed.had_header && parsed.num_nodes != base.num_nodes)
        throw InputError(path + ": node count " + std::to_string(parsed.num_nodes) +
                         " does not match the base graph's " + std::to_string(base.num_nodes));
    return build_graph(base.num_nodes, parsed.edges);
}

// ---------------------------------------------------------------------------
inline Graph rewire(const Graph& g, const RewireParams& p) {
    switch (p.method) {
        case RewireMethod::Digl: return rewire_digl(g, p.alpha, p.eps);
        case RewireMethod::Gtr: return rewire_gtr(g, p.num_edges);
        case RewireMethod::Fosr: return rewire_fosr(g, p.num_edges, p.init_iters, p.seed);
        case RewireMethod::Import: return import_rewired(p.path, g);
    }
    throw InputError("unknown rewiring method");
}

// Edge-count accounting for one treatment.
struct EdgeAccounting {
    long long added = 0;
    long long removed = 0;
    long long net = 0;
};

inline EdgeAccounting edge_accounting(const Graph& before, const Graph& after) {
    EdgeAccounting acc;
    for (auto [u, v] : after.edges)
        if (!before.has_edge(u, v)) ++acc.added;
    for (auto [u, v] : before.edges)
        if (!after.has_edge(u, v)) ++acc.removed;
    acc.net = acc.added - acc.removed;
    return acc;
}

}  // namespace osq
