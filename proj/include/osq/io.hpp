#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "osq/graph.hpp"

namespace osq {

// Shortest exact decimal for a double (17 significant digits).
inline std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace detail {

inline bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace detail

// Edge-list text format: one "u v" pair per line, 0-based, optional
// "# nodes: N" header; other "#" lines are comments. Without a header the
// node count is max index + 1.
struct ParsedEdgeList {
    int num_nodes = -1;
    bool had_header = false;
    std::vector<std::pair<int, int>> edges;
};

inline ParsedEdgeList parse_edge_list(std::istream& in, const std::string& origin) {
    ParsedEdgeList out;
    std::string line;
    int line_no = 0;
    long long max_index = -1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = detail::trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            std::string rest = detail::trim(t.substr(1));
            if (rest.rfind("nodes:", 0) == 0) {
                long long n = 0;
                if (!detail::parse_int(detail::trim(rest.substr(6)), n) || n < 0)
                    throw InputError(origin + ":" + std::to_string(line_no) +
                                     ": bad node-count header");
                out.num_nodes = static_cast<int>(n);
                out.had_header = true;
            }
            continue;
        }
        std::istringstream ls(t);
        std::string a, b, extra;
        ls >> a >> b;
        long long u = 0, v = 0;
        if (!detail::parse_int(a, u) || !detail::parse_int(b, v) || (ls >> extra))
            throw InputError(origin + ":" + std::to_string(line_no) + ": expected 'u v', got '" +
                             t + "'");
        if (u < 0 || v < 0)
            throw InputError(origin + ":" + std::to_string(line_no) + ": negative node index");
        out.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_index = std::max({max_index, u, v});
    }
    if (!out.had_header) out.num_nodes = static_cast<int>(max_index + 1);
    return out;
}

inline Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open edge list: " + path);
    const auto parsed = parse_edge_list(in, path);
    return build_graph(parsed.num_nodes, parsed.edges);
}

inline void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write edge list: " + path);
    out << "# nodes: " << g.num_nodes << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    if (!out) throw InputError("failed writing edge list: " + path);
}

struct DatasetBundle {
    std::string name;
    std::vector<Graph> graphs;
    std::string source;
};

// TUDataset text bundle: <name>_A.txt holds 1-based global edges "i, j",
// <name>_graph_indicator.txt maps each global node (by line number) to its
// 1-based graph id. Label/attribute files are ignored; the measurement is
// purely topological.
inline DatasetBundle load_tudataset(const std::string& dir, const std::string& name) {
    const std::string a_path = dir + "/" + name + "_A.txt";
    const std::string ind_path = dir + "/" + name + "_graph_indicator.txt";
    std::ifstream ind(ind_path);
    if (!ind) throw InputError("missing TUDataset file: " + ind_path);
    std::vector<int> graph_of_node;  // 0-based graph id per global node (0-based)
    {
        std::string line;
        int line_no = 0;
        while (std::getline(ind, line)) {
            ++line_no;
            const std::string t = detail::trim(line);
            if (t.empty()) continue;
            long long gid = 0;
            if (!detail::parse_int(t, gid) || gid < 1)
                throw InputError(ind_path + ":" + std::to_string(line_no) +
                                 ": expected a positive graph id");
            graph_of_node.push_back(static_cast<int>(gid - 1));
        }
    }
    if (graph_of_node.empty()) throw InputError(ind_path + ": no nodes");
    int num_graphs = 0;
    for (int gid : graph_of_node) num_graphs = std::max(num_graphs, gid + 1);

    // local index of each global node within its graph, in global-id order
    std::vector<int> local_of_node(graph_of_node.size());
    std::vector<int> graph_size(num_graphs, 0);
    for (std::size_t i = 0; i < graph_of_node.size(); ++i)
        local_of_node[i] = graph_size[graph_of_node[i]]++;
    for (int gidx = 0; gidx < num_graphs; ++gidx)
        if (graph_size[gidx] == 0)
            throw InputError(ind_path + ": graph " + std::to_string(gidx + 1) + " has no nodes");

    std::vector<std::vector<std::pair<int, int>>> edges(num_graphs);
    std::ifstream a(a_path);
    if (!a) throw InputError("missing TUDataset file: " + a_path);
    {
        std::string line;
        int line_no = 0;
        while (std::getline(a, line)) {
            ++line_no;
            std::string t = detail::trim(line);
            if (t.empty()) continue;
            for (char& ch : t)
                if (ch == ',') ch = ' ';
            std::istringstream ls(t);
            std::string sa, sb, extra;
            ls >> sa >> sb;
            long long i = 0, j = 0;
            if (!detail::parse_int(sa, i) || !detail::parse_int(sb, j) || (ls >> extra))
                throw InputError(a_path + ":" + std::to_string(line_no) +
                                 ": expected 'i, j', got '" + detail::trim(line) + "'");
            if (i < 1 || j < 1 || i > static_cast<long long>(graph_of_node.size()) ||
                j > static_cast<long long>(graph_of_node.size()))
                throw InputError(a_path + ":" + std::to_string(line_no) +
                                 ": node id out of range");
            const int gi = graph_of_node[i - 1], gj = graph_of_node[j - 1];
            if (gi != gj)
                throw InputError(a_path + ":" + std::to_string(line_no) + ": edge (" +
                                 std::to_string(i) + ", " + std::to_string(j) +
                                 ") crosses graphs " + std::to_string(gi + 1) + " and " +
                                 std::to_string(gj + 1));
            edges[gi].emplace_back(local_of_node[i - 1], local_of_node[j - 1]);
        }
    }

    DatasetBundle bundle{name, {}, dir};
    bundle.graphs.reserve(num_graphs);
    for (int gidx = 0; gidx < num_graphs; ++gidx)
        bundle.graphs.push_back(build_graph(graph_size[gidx], edges[gidx]));
    return bundle;
}

// Inverse of load_tudataset, mainly for round-trip checks. Emits each
// undirected edge in both directions, as the benchmark files do.
inline void write_tudataset(const DatasetBundle& bundle, const std::string& dir,
                            const std::string& name) {
    std::ofstream a(dir + "/" + name + "_A.txt");
    std::ofstream ind(dir + "/" + name + "_graph_indicator.txt");
    if (!a || !ind) throw InputError("cannot write TUDataset files under " + dir);
    long long base = 0;
    for (std::size_t gidx = 0; gidx < bundle.graphs.size(); ++gidx) {
        const Graph& g = bundle.graphs[gidx];
        for (int v = 0; v < g.num_nodes; ++v) ind << (gidx + 1) << "\n";
        for (auto [u, v] : g.edges) {
            a << (base + u + 1) << ", " << (base + v + 1) << "\n";
            a << (base + v + 1) << ", " << (base + u + 1) << "\n";
        }
        base += g.num_nodes;
    }
}

// Induced subgraph on the largest component (ties: the component holding the
// smallest node id), reindexed to 0..k-1 in original-id order.
struct LccResult {
    Graph graph;
    std::vector<int> node_map;  // new index -> original node id
};

inline LccResult largest_connected_component(const Graph& g) {
    const auto comps = connected_components(g);
    int best = -1;
    for (int c = 0; c < comps.num_components; ++c)
        if (best < 0 || comps.sizes[c] > comps.sizes[best]) best = c;
    LccResult out;
    if (best < 0) {
        out.graph = build_graph(0, {});
        return out;
    }
    std::vector<int> local(g.num_nodes, -1);
    for (int v = 0; v < g.num_nodes; ++v) {
        if (comps.label[v] == best) {
            local[v] = static_cast<int>(out.node_map.size());
            out.node_map.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
    out.graph = build_graph(static_cast<int>(out.node_map.size()), edges);
    return out;
}

}  // namespace osq
