#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "osq/graph.hpp"

namespace osq {

// Tail probability plus convergence bookkeeping of the underlying expansion.
struct TailResult {
    double p = 0.0;
    bool converged = true;
    int iterations = 0;
};

namespace detail {

inline constexpr double kBetaCfTolerance = 1e-12;
inline constexpr int kBetaCfMaxIterations = 300;

struct CfResult {
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Continued fraction for the incomplete beta function (modified Lentz).
inline CfResult incomplete_beta_cf(double a, double b, double x) {
    const double tiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kBetaCfMaxIterations; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kBetaCfTolerance) return {h, true, m};
    }
    return {h, false, kBetaCfMaxIterations};
}

inline double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Regularized incomplete beta I_x(a, b), using the symmetry
// I_x(a,b) = 1 - I_{1-x}(b,a) to stay in the fast-converging region.
inline CfResult reg_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return {0.0, true, 0};
    if (x >= 1.0) return {1.0, true, 0};
    const double front =
        std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        auto cf = incomplete_beta_cf(a, b, x);
        return {front * cf.value / a, cf.converged, cf.iterations};
    }
    auto cf = incomplete_beta_cf(b, a, 1.0 - x);
    return {1.0 - front * cf.value / b, cf.converged, cf.iterations};
}

}  // namespace detail

// Two-tailed Student-t tail: p = I_{df/(df+t^2)}(df/2, 1/2).
inline TailResult student_t_two_tailed(double t, double df) {
    if (!(df >= 1.0)) throw InputError("degrees of freedom must be >= 1");
    const double x = df / (df + t * t);
    auto r = detail::reg_incomplete_beta(df / 2.0, 0.5, x);
    return {std::clamp(r.value, 0.0, 1.0), r.converged, r.iterations};
}

// Chi-square survival function with one degree of freedom.
inline TailResult chi_square_sf_df1(double x) {
    if (!(x >= 0.0)) throw InputError("chi-square statistic must be nonnegative");
    return {std::erfc(std::sqrt(x / 2.0)), true, 0};
}

// 1-based ranks with ties replaced by the mean of their positions.
inline std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && values[order[j]] == values[order[i]]) ++j;
        const double shared = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = shared;
        i = j;
    }
    return ranks;
}

}  // namespace osq
