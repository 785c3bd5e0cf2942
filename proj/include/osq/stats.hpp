#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "osq/metrics.hpp"
#include "osq/special.hpp"

namespace osq {

enum class Metric { Prevalence, Intensity, Variability, Extremity };

inline constexpr std::array<Metric, 4> kAllMetrics = {Metric::Prevalence, Metric::Intensity,
                                                      Metric::Variability, Metric::Extremity};

inline const char* metric_name(Metric m) {
    switch (m) {
        case Metric::Prevalence: return "prevalence";
        case Metric::Intensity: return "intensity";
        case Metric::Variability: return "variability";
        case Metric::Extremity: return "extremity";
    }
    return "?";
}

inline double metric_value(const GraphSummary& s, Metric m) {
    switch (m) {
        case Metric::Prevalence: return s.prevalence;
        case Metric::Intensity: return s.intensity;
        case Metric::Variability: return s.variability;
        case Metric::Extremity: return s.extremity;
    }
    return 0.0;
}

inline double metric_value(const DatasetSummary& s, Metric m) {
    switch (m) {
        case Metric::Prevalence: return s.prevalence;
        case Metric::Intensity: return s.intensity;
        case Metric::Variability: return s.variability;
        case Metric::Extremity: return s.extremity;
    }
    return 0.0;
}

// Per-graph treatment effect: treated metric minus control metric.
struct TreatmentEffectSet {
    int graph_id = 0;
    double prevalence = 0.0;
    double intensity = 0.0;
    double variability = 0.0;
    double extremity = 0.0;

    double value(Metric m) const {
        switch (m) {
            case Metric::Prevalence: return prevalence;
            case Metric::Intensity: return intensity;
            case Metric::Variability: return variability;
            case Metric::Extremity: return extremity;
        }
        return 0.0;
    }
};

inline TreatmentEffectSet ite(int graph_id, const GraphSummary& before,
                              const GraphSummary& after) {
    return {graph_id, after.prevalence - before.prevalence, after.intensity - before.intensity,
            after.variability - before.variability, after.extremity - before.extremity};
}

inline TreatmentEffectSet ite(int before_id, const GraphSummary& before, int after_id,
                              const GraphSummary& after) {
    if (before_id != after_id)
        throw InputError("ITE graph id mismatch: control " + std::to_string(before_id) +
                         " vs treated " + std::to_string(after_id));
    return ite(before_id, before, after);
}

namespace detail {

struct OneSampleT {
    double mean = 0.0;
    double std = 0.0;
    double t = 0.0;
    double p = 1.0;
    int n = 0;
    bool degenerate = false;
};

// One-sample two-tailed t-test against 0. A zero-variance sample cannot be
// referred to the t distribution: all-zero means no effect (p = 1), a
// nonzero constant effect is reported as p = 0 with the degeneracy flagged.
inline OneSampleT one_sample_t(const std::vector<double>& values) {
    if (values.size() < 2) throw InputError("t-test needs at least 2 observations");
    const int n = static_cast<int>(values.size());
    bool constant = true;
    for (double v : values) constant = constant && (v == values[0]);
    // a constant sample has sample std exactly 0; computing it through the
    // mean would leave roundoff dust and dodge the degenerate rules
    if (constant) {
        OneSampleT r;
        r.mean = values[0];
        r.std = 0.0;
        r.n = n;
        if (r.mean == 0.0) {
            r.t = 0.0;
            r.p = 1.0;
        } else {
            r.t = r.mean > 0.0 ? std::numeric_limits<double>::infinity()
                               : -std::numeric_limits<double>::infinity();
            r.p = 0.0;
            r.degenerate = true;
        }
        return r;
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (n - 1));
    OneSampleT r;
    r.mean = mean;
    r.std = sd;
    r.n = n;
    if (sd == 0.0) {
        if (mean == 0.0) {
            r.t = 0.0;
            r.p = 1.0;
        } else {
            r.t = mean > 0.0 ? std::numeric_limits<double>::infinity()
                             : -std::numeric_limits<double>::infinity();
            r.p = 0.0;
            r.degenerate = true;
        }
        return r;
    }
    r.t = mean / (sd / std::sqrt(static_cast<double>(n)));
    r.p = student_t_two_tailed(r.t, n - 1).p;
    return r;
}

}  // namespace detail

// Dataset-level treatment effect for one metric, with the significance of a
// two-tailed one-sample t-test. `significant` is set by bonferroni().
struct AteReport {
    Metric metric = Metric::Prevalence;
    double ate = 0.0;
    double std = 0.0;
    int n = 0;
    double t = 0.0;
    double p = 1.0;
    bool significant = false;
    bool degenerate = false;
};

inline AteReport ate(const std::vector<TreatmentEffectSet>& ites, Metric metric) {
    if (ites.size() < 2) throw InputError("ATE needs at least 2 graphs");
    std::vector<double> values;
    values.reserve(ites.size());
    for (const auto& e : ites) values.push_back(e.value(metric));
    const auto r = detail::one_sample_t(values);
    return {metric, r.mean, r.std, r.n, r.t, r.p, false, r.degenerate};
}

// Family-wise control over the four metric tests: strict p < alpha / 4.
inline std::array<bool, 4> bonferroni(const std::array<double, 4>& ps, double alpha = 0.05) {
    std::array<bool, 4> flags{};
    for (std::size_t i = 0; i < ps.size(); ++i) flags[i] = ps[i] < alpha / 4.0;
    return flags;
}

// Paired test summary at node-pair level.
struct PairedReport {
    std::string test;  // "mcnemar" or "paired_t"
    double statistic = 0.0;
    double p = 1.0;
    std::int64_t n_pairs = 0;
    std::int64_t b = 0;  // over-squashed -> not (mcnemar only)
    std::int64_t c = 0;  // not -> over-squashed (mcnemar only)
    bool degenerate = false;
};

// McNemar's chi-square on paired over-squashed flags, no continuity
// correction. With no discordant pairs the statistic is undefined; report
// p = 1 and flag it.
inline PairedReport mcnemar(const std::vector<bool>& before_flags,
                            const std::vector<bool>& after_flags) {
    if (before_flags.size() != after_flags.size())
        throw InputError("mcnemar flag vectors must align on the same pairs");
    PairedReport r;
    r.test = "mcnemar";
    r.n_pairs = static_cast<std::int64_t>(before_flags.size());
    for (std::size_t i = 0; i < before_flags.size(); ++i) {
        if (before_flags[i] && !after_flags[i]) ++r.b;
        if (!before_flags[i] && after_flags[i]) ++r.c;
    }
    if (r.b + r.c == 0) {
        r.statistic = 0.0;
        r.p = 1.0;
        r.degenerate = true;  // no discordant pairs
        return r;
    }
    const double diff = static_cast<double>(r.b - r.c);
    r.statistic = diff * diff / static_cast<double>(r.b + r.c);
    r.p = chi_square_sf_df1(r.statistic).p;
    return r;
}

// Paired t-test on per-pair decay rates (after - before).
inline PairedReport paired_t(const std::vector<double>& before_k,
                             const std::vector<double>& after_k) {
    if (before_k.size() != after_k.size())
        throw InputError("paired t-test vectors must align on the same pairs");
    if (before_k.size() < 2) throw InputError("paired t-test needs at least 2 pairs");
    std::vector<double> diffs(before_k.size());
    for (std::size_t i = 0; i < before_k.size(); ++i) diffs[i] = after_k[i] - before_k[i];
    const auto t = detail::one_sample_t(diffs);
    PairedReport r;
    r.test = "paired_t";
    r.statistic = t.t;
    r.p = t.p;
    r.n_pairs = t.n;
    r.degenerate = t.degenerate || (t.std == 0.0 && t.mean == 0.0);
    return r;
}

// Relative treatment effect in percent of the pre-treatment value.
struct Responsiveness {
    double percent = 0.0;
    bool defined = false;
};

inline Responsiveness responsiveness(double avg_effect, double baseline) {
    if (!(baseline > 0.0)) return {0.0, false};
    return {100.0 * avg_effect / baseline, true};
}

// Spearman rank correlation with average-rank tie handling; p from the
// t approximation at n - 2 degrees of freedom.
struct SpearmanResult {
    double rho = 0.0;
    double p = 1.0;
    int n = 0;
    bool defined = true;  // false when either input has zero rank variance
};

inline SpearmanResult spearman(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw InputError("spearman inputs must have equal length");
    if (x.size() < 3) throw InputError("spearman needs at least 3 observations");
    const int n = static_cast<int>(x.size());
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    const double mean = (n + 1) / 2.0;  // rank totals are fixed, ties or not
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double dx = rx[i] - mean, dy = ry[i] - mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    SpearmanResult r;
    r.n = n;
    if (sxx == 0.0 || syy == 0.0) {
        r.defined = false;
        return r;
    }
    r.rho = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    if (std::fabs(r.rho) >= 1.0) {
        r.p = 0.0;
    } else {
        const double t = r.rho * std::sqrt((n - 2) / (1.0 - r.rho * r.rho));
        r.p = student_t_two_tailed(t, n - 2).p;
    }
    return r;
}

}  // namespace osq
