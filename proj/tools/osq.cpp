// Command-line front end: measure over-squashing, rewire graphs, estimate
// causal treatment effects, and correlate effects with performance gains.

#include <CLI11.hpp>
#include <string>

#include "osq/cli.hpp"
#include "osq/version.hpp"

namespace {

void add_input_flags(CLI::App* cmd, osq::RunConfig& cfg) {
    cmd->add_option("--input", cfg.input, "Input path (edge-list file/dir or TUDataset dir)");
    cmd->add_option("--format", cfg.format, "Input format")
        ->check(CLI::IsMember({"edgelist", "tudataset"}))
        ->capture_default_str();
    cmd->add_option("--name", cfg.name, "TUDataset name (inferred from *_A.txt when omitted)");
    cmd->add_flag("--lcc-only", cfg.lcc_only, "Analyze only each graph's largest connected component");
    cmd->add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
}

void add_rewire_flags(CLI::App* cmd, osq::RunConfig& cfg, std::string& method) {
    cmd->add_option("--method", method, "Rewiring method")
        ->check(CLI::IsMember({"digl", "gtr", "fosr", "import"}));
    cmd->add_option("--alpha", cfg.rewire_params.alpha,
                    "DIGL teleport probability in (0,1)")
        ->capture_default_str();
    cmd->add_option("--eps", cfg.rewire_params.eps, "DIGL sparsification threshold")
        ->capture_default_str();
    cmd->add_option("--num-edges", cfg.rewire_params.num_edges,
                    "Edges to add (gtr, fosr)")
        ->capture_default_str();
    cmd->add_option("--init-iters", cfg.rewire_params.init_iters,
                    "FoSR power-iteration warmup steps")
        ->capture_default_str();
    cmd->add_option("--seed", cfg.rewire_params.seed, "FoSR initialization seed")
        ->capture_default_str();
    cmd->add_option("--import-path", cfg.rewire_params.path,
                    "Edge list to import as the treated graph (import method)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Over-squashing measurement and rewiring analysis"};
    app.set_version_flag("--version", std::string(osq::kToolVersion));
    app.require_subcommand(1);
    app.fallthrough();
    // TOML config with one section per subcommand, e.g. [measure]; explicit
    // command-line flags take precedence over config values
    app.set_config("--config", "", "TOML config file ([<subcommand>] sections; flags win)");

    osq::RunConfig cfg;
    std::string method;

    auto* measure = app.add_subcommand("measure", "Per-graph and dataset over-squashing metrics");
    add_input_flags(measure, cfg);
    measure->add_option("--out", cfg.out, "Write the JSON report here instead of stdout");
    measure->add_option("--pairs-csv", cfg.pairs_csv, "Dump per-pair decay rates (u,v,k,ln_n0)");
    measure->add_flag("--pair-diagnostics", cfg.pair_diagnostics,
                      "Add per-pair R^2 and slope p-value columns to --pairs-csv");
    measure->add_option("--series-csv", cfg.series_csv,
                        "Dump per-pair sensitivity series (v,u,l,jtilde)");

    auto* rewire = app.add_subcommand("rewire", "Apply a rewiring treatment and emit edge lists");
    add_input_flags(rewire, cfg);
    add_rewire_flags(rewire, cfg, method);
    rewire->add_option("--out", cfg.out, "Output directory for rewired graphs + accounting");

    auto* causal = app.add_subcommand("causal", "Estimate rewiring treatment effects");
    add_input_flags(causal, cfg);
    add_rewire_flags(causal, cfg, method);
    causal->add_option("--task", cfg.task, "Analysis unit")
        ->check(CLI::IsMember({"graph", "node"}))
        ->capture_default_str();
    causal->add_option("--treated-dir", cfg.treated_dir,
                       "Directory of pre-rewired edge lists (instead of --method)");
    causal->add_option("--out", cfg.out, "Write the JSON report here instead of stdout");

    auto* correlate = app.add_subcommand("correlate",
                                         "Spearman correlation of effects vs performance gains");
    correlate->add_option("--effects", cfg.effects_csv,
                          "CSV: config_id,prevalence,intensity,variability,extremity");
    correlate->add_option("--gains", cfg.gains_csv, "CSV: config_id,gain_percent");
    correlate->add_option("--out", cfg.out, "Write the JSON report here (plus a .csv sibling)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : osq::kExitInputError;
    }

    if (measure->parsed()) cfg.command = osq::RunConfig::Command::Measure;
    if (rewire->parsed()) cfg.command = osq::RunConfig::Command::Rewire;
    if (causal->parsed()) cfg.command = osq::RunConfig::Command::Causal;
    if (correlate->parsed()) cfg.command = osq::RunConfig::Command::Correlate;
    if (!method.empty()) {
        try {
            cfg.rewire_params.method = osq::parse_rewire_method(method);
        } catch (const osq::InputError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return osq::kExitInputError;
        }
        cfg.has_method = true;
    }
    if (cfg.rewire_params.method == osq::RewireMethod::Import &&
        cfg.rewire_params.path.empty() && !cfg.treated_dir.empty()) {
        // `causal --method import` without a single file means per-graph
        // imports from --treated-dir, which the causal command handles.
        cfg.has_method = false;
    }
    if (cfg.threads < 1) {
        std::cerr << "error: --threads must be at least 1\n";
        return osq::kExitInputError;
    }
    return osq::run_command(cfg);
}
