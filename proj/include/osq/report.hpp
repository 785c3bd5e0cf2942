#pragma once

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

#include "osq/io.hpp"
#include "osq/metrics.hpp"
#include "osq/pipeline.hpp"
#include "osq/stats.hpp"
#include "osq/version.hpp"

namespace osq {

using json = nlohmann::json;

inline json categories_json(const CategoryLabels& c) {
    json j;
    j["prevalence"] = c.prevalence;
    j["intensity"] = c.intensity;
    j["variability"] = c.variability;
    j["extremity"] = c.extremity;
    if (std::isfinite(c.intensity_half_life)) j["intensity_half_life"] = c.intensity_half_life;
    if (std::isfinite(c.extremity_half_life)) j["extremity_half_life"] = c.extremity_half_life;
    return j;
}

inline json graph_fragment(const GraphMeasurement& m) {
    json j;
    j["id"] = m.graph_id;
    j["n"] = m.num_nodes;
    j["m"] = m.num_edges;
    j["components"] = m.num_components;
    j["diameter"] = m.diameter_hops;
    j["measurable"] = m.measurable;
    j["prevalence"] = m.summary.prevalence;
    j["intensity"] = m.summary.intensity;
    j["variability"] = m.summary.variability;
    j["extremity"] = m.summary.extremity;
    j["valid_pairs"] = m.summary.valid_pairs;
    j["positive_pairs"] = m.summary.positive_pairs;
    j["excluded_cross_component_pairs"] = m.summary.excluded_cross_component_pairs;
    if (m.measurable) j["categories"] = categories_json(categorize(m.summary));
    return j;
}

inline json dataset_fragment(const DatasetSummary& d) {
    json j;
    j["prevalence"] = d.prevalence;
    j["intensity"] = d.intensity;
    j["variability"] = d.variability;
    j["extremity"] = d.extremity;
    j["graphs_counted"] = d.graphs_counted;
    j["graphs_skipped"] = d.graphs_skipped;
    j["categories"] = categories_json(categorize(d));
    return j;
}

inline json tool_fragment() {
    return json{{"name", kToolName}, {"version", kToolVersion}};
}

inline json ate_fragment(const AteReport& r) {
    json j;
    j["ate"] = r.ate;
    j["std"] = r.std;
    j["n"] = r.n;
    j["t"] = r.t;  // non-finite t (zero-variance effects) serializes as null
    j["p"] = r.p;
    j["significant"] = r.significant;
    if (r.degenerate) j["degenerate"] = true;
    return j;
}

inline json ite_fragment(const TreatmentEffectSet& e) {
    json j;
    j["graph_id"] = e.graph_id;
    j["prevalence"] = e.prevalence;
    j["intensity"] = e.intensity;
    j["variability"] = e.variability;
    j["extremity"] = e.extremity;
    return j;
}

inline std::string report_to_string(const json& report) { return report.dump(2) + "\n"; }

// Canonical key-sorted JSON (nlohmann orders object keys), newline-terminated.
// Identical reports produce byte-identical files.
inline void write_report(const json& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write report: " + path);
    out << report_to_string(report);
    if (!out) throw InputError("failed writing report: " + path);
}

}  // namespace osq
