#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "osq/stats.hpp"

using osq::GraphSummary;
using osq::Metric;
using osq::TreatmentEffectSet;

namespace {

GraphSummary summary(double p, double i, double v, double e) {
    GraphSummary s;
    s.prevalence = p;
    s.intensity = i;
    s.variability = v;
    s.extremity = e;
    s.valid_pairs = 10;
    return s;
}

std::vector<TreatmentEffectSet> effects_on(Metric m, const std::vector<double>& values) {
    std::vector<TreatmentEffectSet> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        TreatmentEffectSet e;
        e.graph_id = static_cast<int>(i);
        switch (m) {
            case Metric::Prevalence: e.prevalence = values[i]; break;
            case Metric::Intensity: e.intensity = values[i]; break;
            case Metric::Variability: e.variability = values[i]; break;
            case Metric::Extremity: e.extremity = values[i]; break;
        }
        out.push_back(e);
    }
    return out;
}

}  // namespace

TEST_CASE("ite subtracts componentwise") {
    const auto e = osq::ite(3, summary(0.6, 0.2, 0.1, 0.5), summary(0.45, 0.25, 0.1, 0.4));
    CHECK(e.graph_id == 3);
    CHECK(e.prevalence == Catch::Approx(-0.15).margin(1e-15));
    CHECK(e.intensity == Catch::Approx(0.05).margin(1e-15));
    CHECK(e.variability == 0.0);
    CHECK(e.extremity == Catch::Approx(-0.1).margin(1e-15));

    SECTION("identical summaries give all-zero effects") {
        const auto z = osq::ite(0, summary(0.5, 0.1, 0.05, 0.3), summary(0.5, 0.1, 0.05, 0.3));
        CHECK(z.prevalence == 0.0);
        CHECK(z.intensity == 0.0);
        CHECK(z.variability == 0.0);
        CHECK(z.extremity == 0.0);
    }
    SECTION("graph-id mismatch is rejected") {
        CHECK_THROWS_AS(osq::ite(1, summary(0, 0, 0, 0), 2, summary(0, 0, 0, 0)),
                        osq::InputError);
    }
}

TEST_CASE("ate with a one-sample t-test") {
    SECTION("all-zero effects: p = 1 exactly") {
        const auto r = osq::ate(effects_on(Metric::Prevalence, {0, 0, 0, 0}), Metric::Prevalence);
        CHECK(r.ate == 0.0);
        CHECK(r.p == 1.0);
        CHECK_FALSE(r.degenerate);
    }
    SECTION("antisymmetric effects: t = 0, p = 1") {
        const auto r = osq::ate(effects_on(Metric::Intensity, {0.3, -0.3}), Metric::Intensity);
        CHECK(r.ate == 0.0);
        CHECK(r.t == 0.0);
        CHECK(r.p == 1.0);
    }
    SECTION("frozen example: {-0.2, -0.1, -0.3, -0.2}") {
        const auto r =
            osq::ate(effects_on(Metric::Extremity, {-0.2, -0.1, -0.3, -0.2}), Metric::Extremity);
        CHECK(r.ate == Catch::Approx(-0.2).margin(1e-15));
        CHECK(r.std == Catch::Approx(0.081649658092772595).margin(1e-15));
        CHECK(r.t == Catch::Approx(-4.8989794855663567).margin(1e-12));
        CHECK(r.p == Catch::Approx(0.016276603459428551).margin(1e-12));
        CHECK(r.n == 4);
    }
    SECTION("constant nonzero effects degenerate to p = 0, flagged") {
        const auto r = osq::ate(effects_on(Metric::Prevalence, {-0.1, -0.1, -0.1}),
                                Metric::Prevalence);
        CHECK(r.p == 0.0);
        CHECK(r.degenerate);
    }
    SECTION("mean shift moves the ATE by exactly the shift") {
        std::mt19937_64 rng(67);
        std::normal_distribution<double> d(0.0, 0.2);
        std::vector<double> values(12);
        for (double& v : values) v = d(rng);
        const double base = osq::ate(effects_on(Metric::Prevalence, values),
                                     Metric::Prevalence).ate;
        for (double& v : values) v += 0.25;
        const double shifted = osq::ate(effects_on(Metric::Prevalence, values),
                                        Metric::Prevalence).ate;
        CHECK(shifted == Catch::Approx(base + 0.25).margin(1e-12));
    }
    SECTION("fewer than two graphs is an error") {
        CHECK_THROWS_AS(osq::ate(effects_on(Metric::Prevalence, {0.1}), Metric::Prevalence),
                        osq::InputError);
    }
}

TEST_CASE("bonferroni flags strict p < alpha/4") {
    const auto flags = osq::bonferroni({0.010, 0.020, 0.0125, 0.0124999}, 0.05);
    CHECK(flags[0]);
    CHECK_FALSE(flags[1]);
    CHECK_FALSE(flags[2]);  // boundary is not significant
    CHECK(flags[3]);
}

TEST_CASE("mcnemar") {
    auto flags = [](std::initializer_list<int> xs) {
        std::vector<bool> out;
        for (int x : xs) out.push_back(x != 0);
        return out;
    };
    SECTION("b=5, c=1") {
        // 5 pairs flip on->off, 1 flips off->on, 2 concordant
        const auto r = osq::mcnemar(flags({1, 1, 1, 1, 1, 0, 1, 0}),
                                    flags({0, 0, 0, 0, 0, 1, 1, 0}));
        CHECK(r.b == 5);
        CHECK(r.c == 1);
        CHECK(r.statistic == Catch::Approx(2.6666666666666665).margin(1e-12));
        CHECK(r.p == Catch::Approx(0.10247043485974941).margin(1e-4));
        CHECK_FALSE(r.degenerate);
    }
    SECTION("b = c gives statistic 0, p = 1") {
        const auto r = osq::mcnemar(flags({1, 0, 1, 0}), flags({0, 1, 0, 1}));
        CHECK(r.statistic == 0.0);
        CHECK(r.p == 1.0);
    }
    SECTION("no discordant pairs is flagged with p = 1") {
        const auto r = osq::mcnemar(flags({1, 0, 1}), flags({1, 0, 1}));
        CHECK(r.b == 0);
        CHECK(r.c == 0);
        CHECK(r.p == 1.0);
        CHECK(r.degenerate);
    }
    SECTION("swapping before/after swaps b and c but keeps the statistic") {
        const auto a = osq::mcnemar(flags({1, 1, 0, 1, 0, 0}), flags({0, 1, 1, 0, 0, 1}));
        const auto b = osq::mcnemar(flags({0, 1, 1, 0, 0, 1}), flags({1, 1, 0, 1, 0, 0}));
        CHECK(a.b == b.c);
        CHECK(a.c == b.b);
        CHECK(a.statistic == b.statistic);
        CHECK(a.p == b.p);
    }
    SECTION("misaligned vectors are rejected") {
        CHECK_THROWS_AS(osq::mcnemar(flags({1, 0}), flags({1})), osq::InputError);
    }
}

TEST_CASE("paired_t") {
    SECTION("identical vectors degenerate to p = 1") {
        const auto r = osq::paired_t({0.1, 0.2, 0.3}, {0.1, 0.2, 0.3});
        CHECK(r.p == 1.0);
        CHECK(r.degenerate);
    }
    SECTION("frozen differences {-0.2, -0.1, -0.3, -0.2}") {
        const auto r = osq::paired_t({0.5, 0.5, 0.5, 0.5}, {0.3, 0.4, 0.2, 0.3});
        CHECK(r.statistic == Catch::Approx(-4.8989794855663567).margin(1e-12));
        CHECK(r.p == Catch::Approx(0.016276603459428551).margin(1e-12));
        CHECK(r.n_pairs == 4);
    }
    SECTION("antisymmetric differences: t = 0, p = 1") {
        const auto r = osq::paired_t({0.0, 0.0}, {0.1, -0.1});
        CHECK(r.statistic == 0.0);
        CHECK(r.p == 1.0);
    }
    SECTION("errors") {
        CHECK_THROWS_AS(osq::paired_t({0.1}, {0.2}), osq::InputError);
        CHECK_THROWS_AS(osq::paired_t({0.1, 0.2}, {0.2}), osq::InputError);
    }
}

TEST_CASE("responsiveness") {
    SECTION("paper-style consistency: -0.12 on baseline 0.593 is about -20.2%") {
        const auto r = osq::responsiveness(-0.12, 0.593);
        CHECK(r.defined);
        CHECK(r.percent == Catch::Approx(-20.2).margin(0.05));
    }
    CHECK(osq::responsiveness(0.0, 0.4).percent == 0.0);
    CHECK_FALSE(osq::responsiveness(-0.1, 0.0).defined);
}

TEST_CASE("spearman") {
    SECTION("strict monotone inputs") {
        CHECK(osq::spearman({1, 2, 3, 4}, {10, 20, 25, 40}).rho == 1.0);
        CHECK(osq::spearman({1, 2, 3, 4}, {8, 6, 4, 2}).rho == -1.0);
        CHECK(osq::spearman({1, 2, 3, 4}, {10, 20, 25, 40}).p == 0.0);
    }
    SECTION("hand-rankable example gives rho = 0.6 exactly") {
        const auto r = osq::spearman({1, 2, 3, 4}, {2, 1, 4, 3});
        CHECK(r.rho == 0.6);
        CHECK(r.p == Catch::Approx(0.4).margin(1e-12));
        CHECK(r.n == 4);
    }
    SECTION("invariant under strictly increasing transforms") {
        const std::vector<double> x = {0.3, -1.2, 2.0, 0.7, 0.1};
        const std::vector<double> y = {5.0, 1.0, 2.0, 7.0, 3.0};
        const auto base = osq::spearman(x, y);
        std::vector<double> ex(x.size()), cy(y.size());
        for (std::size_t i = 0; i < x.size(); ++i) ex[i] = std::exp(x[i]);
        for (std::size_t i = 0; i < y.size(); ++i) cy[i] = y[i] * y[i] * y[i] + 2.0;
        CHECK(osq::spearman(ex, y).rho == base.rho);
        CHECK(osq::spearman(x, cy).rho == base.rho);
    }
    SECTION("ties use average ranks") {
        const auto r = osq::spearman({1, 1, 2}, {3, 3, 5});
        CHECK(r.rho == 1.0);
    }
    SECTION("zero rank variance is flagged undefined") {
        const auto r = osq::spearman({1, 2, 3}, {7, 7, 7});
        CHECK_FALSE(r.defined);
    }
    SECTION("errors") {
        CHECK_THROWS_AS(osq::spearman({1, 2}, {1, 2}), osq::InputError);
        CHECK_THROWS_AS(osq::spearman({1, 2, 3}, {1, 2}), osq::InputError);
    }
}
