#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "osq/decay.hpp"

namespace osq {

// Graph-level distribution of positive decay rates:
//   prevalence  - fraction of measured pairs with k > 0
//   intensity   - mean of the positive rates
//   variability - sample standard deviation of the positive rates
//   extremity   - largest positive rate
struct GraphSummary {
    double prevalence = 0.0;
    double intensity = 0.0;
    double variability = 0.0;
    double extremity = 0.0;
    std::int64_t valid_pairs = 0;
    std::int64_t positive_pairs = 0;
    std::int64_t excluded_cross_component_pairs = 0;

    bool has_valid_pairs() const { return valid_pairs > 0; }
};

// Aggregates one graph's pair decay rates. Positivity is strict (k > 0);
// exact zeros never count as over-squashed. Positive rates are sorted before
// accumulation, so the result is independent of input order bit-for-bit.
inline GraphSummary summarize(const std::vector<PairDecay>& rates,
                              std::int64_t excluded_cross_component_pairs = 0) {
    GraphSummary s;
    s.excluded_cross_component_pairs = excluded_cross_component_pairs;
    s.valid_pairs = static_cast<std::int64_t>(rates.size());
    std::vector<double> positive;
    positive.reserve(rates.size());
    for (const auto& r : rates)
        if (r.fit.k > 0.0) positive.push_back(r.fit.k);
    std::sort(positive.begin(), positive.end());
    s.positive_pairs = static_cast<std::int64_t>(positive.size());
    if (s.valid_pairs > 0)
        s.prevalence = static_cast<double>(s.positive_pairs) / static_cast<double>(s.valid_pairs);
    if (!positive.empty()) {
        double sum = 0.0;
        for (double k : positive) sum += k;
        s.intensity = sum / static_cast<double>(positive.size());
        s.extremity = positive.back();
        if (positive.size() >= 2) {
            double ss = 0.0;
            for (double k : positive) ss += (k - s.intensity) * (k - s.intensity);
            s.variability = std::sqrt(ss / static_cast<double>(positive.size() - 1));
        }
    }
    return s;
}

// Ordinal bands. Rate metrics share the cut points 0.13 / 0.23 (half-life >= 5
// layers, 3..5 layers, < 3 layers); the outer bands are strict, so a value
// sitting exactly on a cut point is moderate. Prevalence cuts at 25% / 50%.
struct CategoryLabels {
    std::string prevalence;
    std::string intensity;
    std::string variability;
    std::string extremity;
    double intensity_half_life = std::numeric_limits<double>::quiet_NaN();
    double extremity_half_life = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

inline const char* rate_band(double x, const char* low, const char* mid, const char* high) {
    if (x < 0.13) return low;
    if (x > 0.23) return high;
    return mid;
}

inline const char* prevalence_band(double x) {
    if (x < 0.25) return "small";
    if (x > 0.50) return "large";
    return "moderate";
}

inline double half_life(double k) {
    return k > 0.0 ? std::log(2.0) / k : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace detail

inline CategoryLabels categorize(double prevalence, double intensity, double variability,
                                 double extremity) {
    CategoryLabels c;
    c.prevalence = detail::prevalence_band(prevalence);
    c.intensity = detail::rate_band(intensity, "weak", "moderate", "strong");
    c.variability = detail::rate_band(variability, "low", "moderate", "high");
    c.extremity = detail::rate_band(extremity, "weak", "moderate", "strong");
    c.intensity_half_life = detail::half_life(intensity);
    c.extremity_half_life = detail::half_life(extremity);
    return c;
}

inline CategoryLabels categorize(const GraphSummary& s) {
    return categorize(s.prevalence, s.intensity, s.variability, s.extremity);
}

// Per-metric arithmetic means over all graphs that had measurable pairs.
struct DatasetSummary {
    double prevalence = 0.0;
    double intensity = 0.0;
    double variability = 0.0;
    double extremity = 0.0;
    int graphs_counted = 0;
    int graphs_skipped = 0;
};

inline DatasetSummary dataset_summary(const std::vector<GraphSummary>& summaries) {
    if (summaries.empty()) throw InputError("dataset summary needs at least one graph");
    DatasetSummary d;
    for (const auto& s : summaries) {
        if (!s.has_valid_pairs()) {
            ++d.graphs_skipped;
            continue;
        }
        ++d.graphs_counted;
        d.prevalence += s.prevalence;
        d.intensity += s.intensity;
        d.variability += s.variability;
        d.extremity += s.extremity;
    }
    if (d.graphs_counted == 0)
        throw NoMeasurablePairs("no measurable pairs in any graph of the dataset");
    d.prevalence /= d.graphs_counted;
    d.intensity /= d.graphs_counted;
    d.variability /= d.graphs_counted;
    d.extremity /= d.graphs_counted;
    return d;
}

inline CategoryLabels categorize(const DatasetSummary& d) {
    return categorize(d.prevalence, d.intensity, d.variability, d.extremity);
}

}  // namespace osq
