#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "osq/io.hpp"
#include "osq/pipeline.hpp"
#include "osq/report.hpp"
#include "osq/rewire.hpp"
#include "osq/stats.hpp"

namespace osq {

// Exit-code contract used by the tool and its scripting surface.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDegenerate = 3;

struct RunConfig {
    enum class Command { Measure, Rewire, Causal, Correlate };
    Command command = Command::Measure;
    std::string input;
    std::string format = "edgelist";  // or "tudataset"
    std::string name;                 // TUDataset name; inferred when empty
    bool lcc_only = false;
    bool has_method = false;
    RewireParams rewire_params;
    std::string treated_dir;
    std::string task = "graph";  // or "node"
    std::string effects_csv;
    std::string gains_csv;
    std::string out;
    std::string pairs_csv;
    std::string series_csv;
    bool pair_diagnostics = false;
    int threads = 1;
    double significance_alpha = 0.05;
};

namespace detail {

namespace fs = std::filesystem;

inline std::string infer_tudataset_name(const std::string& dir) {
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string fn = entry.path().filename().string();
        const std::string suffix = "_A.txt";
        if (fn.size() > suffix.size() && fn.compare(fn.size() - suffix.size(), suffix.size(), suffix) == 0)
            names.push_back(fn.substr(0, fn.size() - suffix.size()));
    }
    if (names.empty()) throw InputError("no *_A.txt file under " + dir);
    if (names.size() > 1)
        throw InputError("multiple TUDataset bundles under " + dir + "; pass --name");
    return names[0];
}

inline std::vector<std::string> sorted_edge_list_files(const std::string& dir) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() == ".txt" || entry.path().extension() == ".edgelist")
            files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError("no edge-list files (*.txt) under " + dir);
    return files;
}

inline DatasetBundle load_edge_list_bundle(const std::string& path) {
    DatasetBundle bundle;
    bundle.source = path;
    if (fs::is_directory(path)) {
        for (const auto& file : sorted_edge_list_files(path))
            bundle.graphs.push_back(load_edge_list(file));
        bundle.name = fs::path(path).filename().string();
    } else {
        bundle.graphs.push_back(load_edge_list(path));
        bundle.name = fs::path(path).stem().string();
    }
    return bundle;
}

inline DatasetBundle load_bundle(const RunConfig& cfg) {
    if (!fs::exists(cfg.input)) throw InputError("input does not exist: " + cfg.input);
    DatasetBundle bundle;
    if (cfg.format == "tudataset") {
        if (!fs::is_directory(cfg.input))
            throw InputError("tudataset input must be a directory: " + cfg.input);
        const std::string name = cfg.name.empty() ? infer_tudataset_name(cfg.input) : cfg.name;
        bundle = load_tudataset(cfg.input, name);
    } else if (cfg.format == "edgelist") {
        bundle = load_edge_list_bundle(cfg.input);
    } else {
        throw InputError("unknown input format: " + cfg.format);
    }
    if (bundle.graphs.empty()) throw InputError("input contains no graphs");
    if (cfg.lcc_only)
        for (auto& g : bundle.graphs) g = largest_connected_component(g).graph;
    return bundle;
}

inline json input_fragment(const RunConfig& cfg, const DatasetBundle& bundle) {
    json j;
    j["path"] = cfg.input;
    j["format"] = cfg.format;
    if (!bundle.name.empty()) j["name"] = bundle.name;
    j["lcc_only"] = cfg.lcc_only;
    j["graphs"] = bundle.graphs.size();
    return j;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << content;
    if (!out) throw InputError("failed writing " + path);
}

// Opt-in goodness-of-fit diagnostics for one pair's log-linear regression:
// R^2, and the two-sided p-value of the slope (undefined below 3 points,
// returned as -1).
inline std::pair<double, double> pair_fit_diagnostics(const std::vector<double>& series,
                                                      const LayerRange& range,
                                                      const DecayFit& fit) {
    const int n = range.length();
    const double slope = -fit.k;
    double ybar = 0.0, lbar = 0.0;
    for (int i = 0; i < n; ++i) {
        ybar += std::log(series[i]);
        lbar += range.start + i;
    }
    ybar /= n;
    lbar /= n;
    double ss_tot = 0.0, ss_res = 0.0, sxx = 0.0;
    for (int i = 0; i < n; ++i) {
        const double y = std::log(series[i]);
        const double pred = fit.ln_n0 + slope * (range.start + i);
        ss_tot += (y - ybar) * (y - ybar);
        ss_res += (y - pred) * (y - pred);
        sxx += (range.start + i - lbar) * (range.start + i - lbar);
    }
    const double r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    if (n < 3) return {r2, -1.0};
    const double se = std::sqrt((ss_res / (n - 2)) / sxx);
    const double p = se > 0.0 ? student_t_two_tailed(slope / se, n - 2).p
                              : (slope == 0.0 ? 1.0 : 0.0);
    return {r2, p};
}

// Per-pair decay dump: graph_id,u,v,k,ln_n0[,r2,p_slope]. Rates are emitted
// target-major, so each target's sensitivity series is recomputed at most
// once when diagnostics are on.
inline std::string pairs_csv_text(const std::vector<GraphMeasurement>& ms, bool diagnostics,
                                  const std::vector<Graph>& graphs) {
    std::string text = diagnostics ? "graph_id,u,v,k,ln_n0,r2,p_slope\n"
                                   : "graph_id,u,v,k,ln_n0\n";
    for (const auto& m : ms) {
        ColumnSeries cs;
        cs.target = -1;
        for (const auto& r : m.rates) {
            text += std::to_string(m.graph_id) + "," + std::to_string(r.source) + "," +
                    std::to_string(r.target) + "," + format_g17(r.fit.k) + "," +
                    format_g17(r.fit.ln_n0);
            if (diagnostics) {
                if (cs.target != r.target)
                    cs = column_series(graphs[m.graph_id], r.target, m.range);
                const auto d = pair_fit_diagnostics(cs.series[r.source], m.range, r.fit);
                text += "," + format_g17(d.first);
                text += d.second >= 0.0 ? "," + format_g17(d.second) : ",";
            }
            text += "\n";
        }
    }
    return text;
}

inline std::string series_csv_text(const std::vector<GraphMeasurement>& ms,
                                   const std::vector<Graph>& graphs) {
    std::string text = "graph_id,v,u,l,jtilde\n";
    for (const auto& m : ms) {
        if (!m.measurable) continue;
        const Graph& g = graphs[m.graph_id];
        const auto comps = connected_components(g);
        for (int v = 0; v < g.num_nodes; ++v) {
            if (comps.sizes[comps.label[v]] < 2) continue;
            const auto cs = column_series(g, v, m.range);
            for (int u = 0; u < g.num_nodes; ++u) {
                if (u == v || comps.label[u] != comps.label[v]) continue;
                for (int i = 0; i < m.range.length(); ++i)
                    text += std::to_string(m.graph_id) + "," + std::to_string(v) + "," +
                            std::to_string(u) + "," + std::to_string(m.range.start + i) + "," +
                            format_g17(cs.series[u][i]) + "\n";
            }
        }
    }
    return text;
}

}  // namespace detail

// --------------------------------------------------------------------------
// measure: per-graph and dataset over-squashing summaries with categories.
inline json cmd_measure(const RunConfig& cfg) {
    if (cfg.input.empty()) throw InputError("measure: --input is required");
    const auto bundle = detail::load_bundle(cfg);
    const auto measurements = measure_bundle(bundle.graphs, cfg.threads);
    const auto dataset = dataset_summary(summaries_of(measurements));  // all-skipped throws

    json report;
    report["tool"] = tool_fragment();
    report["input"] = detail::input_fragment(cfg, bundle);
    report["dataset"] = dataset_fragment(dataset);
    json graphs = json::array();
    for (const auto& m : measurements) graphs.push_back(graph_fragment(m));
    report["graphs"] = std::move(graphs);

    if (!cfg.pairs_csv.empty())
        detail::write_text_file(cfg.pairs_csv, detail::pairs_csv_text(measurements,
                                                                      cfg.pair_diagnostics,
                                                                      bundle.graphs));
    if (!cfg.series_csv.empty())
        detail::write_text_file(cfg.series_csv,
                                detail::series_csv_text(measurements, bundle.graphs));
    if (!cfg.out.empty()) write_report(report, cfg.out);
    return report;
}

// --------------------------------------------------------------------------
// rewire: apply one treatment to every input graph; emit rewired edge lists
// plus added/removed/net accounting. All outputs are computed before any
// file is written.
inline json cmd_rewire(const RunConfig& cfg) {
    if (cfg.input.empty()) throw InputError("rewire: --input is required");
    if (!cfg.has_method) throw InputError("rewire: --method is required");
    if (cfg.out.empty()) throw InputError("rewire: --out directory is required");
    const auto bundle = detail::load_bundle(cfg);

    std::vector<Graph> rewired(bundle.graphs.size());
    parallel_for(static_cast<int>(bundle.graphs.size()), cfg.threads,
                 [&](int i) { rewired[i] = rewire(bundle.graphs[i], cfg.rewire_params); });

    json per_graph = json::array();
    double mean_added = 0.0, mean_removed = 0.0, mean_net = 0.0;
    for (std::size_t i = 0; i < rewired.size(); ++i) {
        const auto acc = edge_accounting(bundle.graphs[i], rewired[i]);
        per_graph.push_back(json{{"id", i},
                                 {"added", acc.added},
                                 {"removed", acc.removed},
                                 {"net", acc.net}});
        mean_added += static_cast<double>(acc.added);
        mean_removed += static_cast<double>(acc.removed);
        mean_net += static_cast<double>(acc.net);
    }
    const double n = static_cast<double>(rewired.size());
    json report;
    report["tool"] = tool_fragment();
    report["input"] = detail::input_fragment(cfg, bundle);
    report["treatment"] = json{{"method", rewire_method_name(cfg.rewire_params.method)}};
    if (cfg.rewire_params.method == RewireMethod::Digl) {
        report["treatment"]["alpha"] = cfg.rewire_params.alpha;
        report["treatment"]["eps"] = cfg.rewire_params.eps;
    } else if (cfg.rewire_params.method == RewireMethod::Gtr) {
        report["treatment"]["num_edges"] = cfg.rewire_params.num_edges;
    } else if (cfg.rewire_params.method == RewireMethod::Fosr) {
        report["treatment"]["num_edges"] = cfg.rewire_params.num_edges;
        report["treatment"]["init_iters"] = cfg.rewire_params.init_iters;
        report["treatment"]["seed"] = cfg.rewire_params.seed;
    } else {
        report["treatment"]["path"] = cfg.rewire_params.path;
    }
    report["graphs"] = std::move(per_graph);
    report["mean_added"] = mean_added / n;
    report["mean_removed"] = mean_removed / n;
    report["mean_net"] = mean_net / n;

    std::filesystem::create_directories(cfg.out);
    for (std::size_t i = 0; i < rewired.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "graph_%06zu.txt", i);
        write_edge_list(rewired[i], cfg.out + "/" + name);
    }
    write_report(report, cfg.out + "/accounting.json");
    return report;
}

namespace detail {

struct MeasuredPair {
    std::vector<GraphMeasurement> control;
    std::vector<GraphMeasurement> treated;
    std::vector<EdgeAccounting> accounting;
};

inline MeasuredPair measure_control_and_treated(const RunConfig& cfg,
                                                const DatasetBundle& control) {
    std::vector<Graph> treated(control.graphs.size());
    if (!cfg.treated_dir.empty()) {
        RunConfig tc = cfg;
        tc.input = cfg.treated_dir;
        tc.format = "edgelist";
        // Treated edge lists must already live on the control's (possibly
        // LCC-reduced) node ids; re-extracting components here would break
        // pair alignment.
        tc.lcc_only = false;
        const auto treated_bundle = load_bundle(tc);
        if (treated_bundle.graphs.size() != control.graphs.size())
            throw InputError("treated graph count " +
                             std::to_string(treated_bundle.graphs.size()) +
                             " does not match control count " +
                             std::to_string(control.graphs.size()));
        treated = treated_bundle.graphs;
    } else if (cfg.has_method) {
        parallel_for(static_cast<int>(control.graphs.size()), cfg.threads,
                     [&](int i) { treated[i] = rewire(control.graphs[i], cfg.rewire_params); });
    } else {
        throw InputError("causal: pass --treated-dir or a rewiring --method");
    }
    for (std::size_t i = 0; i < treated.size(); ++i)
        if (treated[i].num_nodes != control.graphs[i].num_nodes)
            throw InputError("graph " + std::to_string(i) + ": treated node count " +
                             std::to_string(treated[i].num_nodes) + " != control " +
                             std::to_string(control.graphs[i].num_nodes));

    MeasuredPair out;
    out.control = measure_bundle(control.graphs, cfg.threads);
    out.treated = measure_bundle(treated, cfg.threads);
    out.accounting.reserve(treated.size());
    for (std::size_t i = 0; i < treated.size(); ++i)
        out.accounting.push_back(edge_accounting(control.graphs[i], treated[i]));
    return out;
}

inline json accounting_fragment(const std::vector<EdgeAccounting>& accs) {
    double added = 0.0, removed = 0.0, net = 0.0;
    for (const auto& a : accs) {
        added += static_cast<double>(a.added);
        removed += static_cast<double>(a.removed);
        net += static_cast<double>(a.net);
    }
    const double n = static_cast<double>(accs.size());
    return json{{"mean_added", added / n},
                {"mean_removed", removed / n},
                {"mean_net", net / n}};
}

}  // namespace detail

// --------------------------------------------------------------------------
// causal: treatment-effect estimation. Graph task: per-metric ATE with
// two-tailed t-tests and Bonferroni flags, plus baseline and responsiveness.
// Node task: pair-level McNemar on over-squashed flags and paired t on decay
// rates, over pairs that are measurable in both conditions.
inline json cmd_causal(const RunConfig& cfg) {
    if (cfg.input.empty()) throw InputError("causal: --input is required");
    if (cfg.task != "graph" && cfg.task != "node")
        throw InputError("causal: --task must be 'graph' or 'node'");
    const auto control = detail::load_bundle(cfg);
    const auto mp = detail::measure_control_and_treated(cfg, control);

    std::vector<TreatmentEffectSet> effects;
    effects.reserve(mp.control.size());
    for (std::size_t i = 0; i < mp.control.size(); ++i)
        effects.push_back(ite(mp.control[i].graph_id, mp.control[i].summary,
                              mp.treated[i].graph_id, mp.treated[i].summary));

    json report;
    report["tool"] = tool_fragment();
    report["input"] = detail::input_fragment(cfg, control);
    report["task"] = cfg.task;
    if (cfg.has_method && cfg.treated_dir.empty()) {
        report["treatment"] = json{{"method", rewire_method_name(cfg.rewire_params.method)}};
    } else {
        report["treatment"] = json{{"method", "import"}, {"treated_dir", cfg.treated_dir}};
    }
    report["edge_accounting"] = detail::accounting_fragment(mp.accounting);
    json ites = json::array();
    for (const auto& e : effects) ites.push_back(ite_fragment(e));
    report["ite"] = std::move(ites);

    if (cfg.task == "graph") {
        std::array<AteReport, 4> reports;
        std::array<double, 4> ps{};
        for (std::size_t i = 0; i < kAllMetrics.size(); ++i) {
            reports[i] = ate(effects, kAllMetrics[i]);
            ps[i] = reports[i].p;
        }
        const auto significant = bonferroni(ps, cfg.significance_alpha);
        const auto baseline = dataset_summary(summaries_of(mp.control));
        json ates, resp;
        for (std::size_t i = 0; i < kAllMetrics.size(); ++i) {
            reports[i].significant = significant[i];
            ates[metric_name(kAllMetrics[i])] = ate_fragment(reports[i]);
            const auto r = responsiveness(reports[i].ate,
                                          metric_value(baseline, kAllMetrics[i]));
            resp[metric_name(kAllMetrics[i])] = r.defined ? json(r.percent) : json();
        }
        report["ate"] = std::move(ates);
        report["baseline"] = dataset_fragment(baseline);
        report["responsiveness_percent"] = std::move(resp);
        report["significance_alpha"] = cfg.significance_alpha;
        report["bonferroni_tests"] = 4;
    } else {
        // Align ordered pairs measurable in both conditions. Both rate lists
        // are sorted target-major/source-minor, so a merge walk suffices.
        std::vector<bool> before_flags, after_flags;
        std::vector<double> before_k, after_k;
        std::int64_t only_control = 0, only_treated = 0;
        for (std::size_t gi = 0; gi < mp.control.size(); ++gi) {
            const auto& a = mp.control[gi].rates;
            const auto& b = mp.treated[gi].rates;
            std::size_t i = 0, j = 0;
            auto key = [](const PairDecay& r) { return std::make_pair(r.target, r.source); };
            while (i < a.size() && j < b.size()) {
                if (key(a[i]) == key(b[j])) {
                    before_flags.push_back(a[i].fit.k > 0.0);
                    after_flags.push_back(b[j].fit.k > 0.0);
                    before_k.push_back(a[i].fit.k);
                    after_k.push_back(b[j].fit.k);
                    ++i;
                    ++j;
                } else if (key(a[i]) < key(b[j])) {
                    ++only_control;
                    ++i;
                } else {
                    ++only_treated;
                    ++j;
                }
            }
            only_control += static_cast<std::int64_t>(a.size() - i);
            only_treated += static_cast<std::int64_t>(b.size() - j);
        }
        const auto mc = mcnemar(before_flags, after_flags);
        json mcj{{"b", mc.b},
                 {"c", mc.c},
                 {"statistic", mc.statistic},
                 {"p", mc.p},
                 {"n_pairs", mc.n_pairs}};
        if (mc.degenerate) mcj["no_discordant_pairs"] = true;
        report["mcnemar"] = std::move(mcj);
        if (before_k.size() >= 2) {
            const auto pt = paired_t(before_k, after_k);
            json ptj{{"t", pt.statistic}, {"p", pt.p}, {"n", pt.n_pairs}};
            if (pt.degenerate) ptj["degenerate"] = true;
            report["paired_t"] = std::move(ptj);
        }
        report["pair_churn"] = json{{"common", static_cast<std::int64_t>(before_k.size())},
                                    {"only_control", only_control},
                                    {"only_treated", only_treated}};
    }

    if (!cfg.out.empty()) write_report(report, cfg.out);
    return report;
}

namespace detail {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline CsvTable read_csv(const std::string& path, std::size_t min_columns) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open CSV: " + path);
    CsvTable table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(t);
        while (std::getline(ls, field, ',')) fields.push_back(trim(field));
        if (fields.size() < min_columns)
            throw InputError(path + ":" + std::to_string(line_no) + ": expected at least " +
                             std::to_string(min_columns) + " columns");
        table.rows.push_back(std::move(fields));
    }
    if (table.rows.empty()) throw InputError(path + ": empty CSV");
    // header row: second column not numeric
    char* end = nullptr;
    const std::string& probe = table.rows[0][1];
    std::strtod(probe.c_str(), &end);
    if (end == probe.c_str() || *end != '\0') {
        table.header = table.rows[0];
        table.rows.erase(table.rows.begin());
    }
    return table;
}

inline double parse_double(const std::string& s, const std::string& origin) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw InputError(origin + ": not a number: '" + s + "'");
    return v;
}

}  // namespace detail

// --------------------------------------------------------------------------
// correlate: Spearman correlation between per-configuration treatment
// effects and performance gains, per metric. Inputs are two CSVs keyed by
// config_id; the id sets must match exactly.
inline json cmd_correlate(const RunConfig& cfg) {
    if (cfg.effects_csv.empty()) throw InputError("correlate: --effects CSV is required");
    if (cfg.gains_csv.empty()) throw InputError("correlate: --gains CSV is required");
    const auto effects = detail::read_csv(cfg.effects_csv, 5);
    const auto gains = detail::read_csv(cfg.gains_csv, 2);

    std::map<std::string, double> gain_of;
    for (const auto& row : gains.rows) {
        if (!gain_of.emplace(row[0], detail::parse_double(row[1], cfg.gains_csv)).second)
            throw InputError(cfg.gains_csv + ": duplicate config_id '" + row[0] + "'");
    }
    std::vector<std::array<double, 4>> effect_values;
    std::vector<double> gain_values;
    std::map<std::string, bool> seen;
    for (const auto& row : effects.rows) {
        if (!seen.emplace(row[0], true).second)
            throw InputError(cfg.effects_csv + ": duplicate config_id '" + row[0] + "'");
        const auto it = gain_of.find(row[0]);
        if (it == gain_of.end())
            throw InputError("config_id '" + row[0] + "' has no gain entry");
        std::array<double, 4> vals{};
        for (int k = 0; k < 4; ++k)
            vals[k] = detail::parse_double(row[k + 1], cfg.effects_csv);
        effect_values.push_back(vals);
        gain_values.push_back(it->second);
    }
    for (const auto& [id, gain] : gain_of)
        if (seen.find(id) == seen.end())
            throw InputError("config_id '" + id + "' has no effects entry");

    json report;
    report["tool"] = tool_fragment();
    report["n_configs"] = effect_values.size();
    json spearman_json;
    std::string csv_text = "metric,rho,p,n\n";
    for (std::size_t k = 0; k < kAllMetrics.size(); ++k) {
        std::vector<double> xs;
        xs.reserve(effect_values.size());
        for (const auto& vals : effect_values) xs.push_back(vals[k]);
        const auto r = spearman(xs, gain_values);
        json rj{{"n", r.n}};
        if (r.defined) {
            rj["rho"] = r.rho;
            rj["p"] = r.p;
        } else {
            rj["rho"] = nullptr;
            rj["p"] = nullptr;
            rj["undefined"] = "zero rank variance";
        }
        spearman_json[metric_name(kAllMetrics[k])] = std::move(rj);
        csv_text += std::string(metric_name(kAllMetrics[k])) + "," +
                    (r.defined ? format_g17(r.rho) : "") + "," +
                    (r.defined ? format_g17(r.p) : "") + "," + std::to_string(r.n) + "\n";
    }
    report["spearman"] = std::move(spearman_json);

    if (!cfg.out.empty()) {
        write_report(report, cfg.out);
        std::string csv_path = cfg.out;
        const std::string ext = ".json";
        if (csv_path.size() > ext.size() &&
            csv_path.compare(csv_path.size() - ext.size(), ext.size(), ext) == 0)
            csv_path = csv_path.substr(0, csv_path.size() - ext.size());
        detail::write_text_file(csv_path + ".csv", csv_text);
    }
    return report;
}

// Runs a command, prints its report (stdout unless --out), and maps errors
// onto the exit-code contract.
inline int run_command(const RunConfig& cfg) {
    try {
        json report;
        switch (cfg.command) {
            case RunConfig::Command::Measure: report = cmd_measure(cfg); break;
            case RunConfig::Command::Rewire: report = cmd_rewire(cfg); break;
            case RunConfig::Command::Causal: report = cmd_causal(cfg); break;
            case RunConfig::Command::Correlate: report = cmd_correlate(cfg); break;
        }
        if (cfg.out.empty()) std::cout << report_to_string(report);
        return kExitOk;
    } catch (const NoMeasurablePairs& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace osq
