#include "wleja/spacing.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "wleja/maximize.hpp"

namespace wleja {

double min_gap_statistic(const ContractedNodeSet& nodes) {
    if (nodes.n < 1) throw std::invalid_argument("min_gap_statistic: need n >= 1");
    if (nodes.nodes.size() < 2)
        throw std::invalid_argument("min_gap_statistic: need at least two nodes");
    std::vector<double> s = nodes.nodes;
    std::sort(s.begin(), s.end());
    double gap = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < s.size(); ++i) gap = std::min(gap, s[i + 1] - s[i]);
    return nodes.n * gap;
}

double new_point_gap(const LejaSequence& seq, int n) {
    if (!seq.weight) throw std::invalid_argument("new_point_gap: weighted sequences only");
    if (n < 1 || static_cast<size_t>(n) + 1 > seq.points.size())
        throw std::invalid_argument("new_point_gap: n outside the available sequence");
    double gap = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) gap = std::min(gap, std::fabs(seq.points[n] - seq.points[j]));
    return n / seq.weight->mrs_number(n) * gap;
}

// log|P_n(t)| + log w(t) and the sign of P_n(t), with P_n = prod_{j<n}(t - x_j)
static double log_poly_weight(const std::vector<double>& roots, const FreudWeight& fw, double t,
                              int* sign_out = nullptr) {
    double s = fw.log_weight(t);
    int sgn = 1;
    for (double r : roots) {
        const double d = t - r;
        s += std::log(std::fabs(d));
        if (d < 0.0) sgn = -sgn;
    }
    if (sign_out) *sign_out = sgn;
    return s;
}

static double weighted_poly_norm_log(const std::vector<double>& roots, const FreudWeight& fw,
                                     double an, const GridSpec& grid) {
    auto logf = [&](double t) { return log_poly_weight(roots, fw, t); };
    MaxResult best = scan_subintervals(logf, roots, -an, an, grid.probes_per_interval,
                                       grid.refine_xtol, /*include_endpoints=*/true);
    return best.value;
}

double bernstein_check(const LejaSequence& seq, const FreudWeight& fw, int n,
                       const GridSpec& grid) {
    if (n < 1) throw std::invalid_argument("bernstein_check: n must be >= 1");
    if (static_cast<size_t>(n) > seq.points.size())
        throw std::invalid_argument("bernstein_check: sequence has fewer than n points");
    const std::vector<double> roots(seq.points.begin(), seq.points.begin() + n);
    const double an = fw.mrs_number(n);
    const double lognorm = weighted_poly_norm_log(roots, fw, an, grid);

    const int G = std::max(grid.dense_points, 16);
    std::vector<double> ratio(G, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < G; ++i) {
        const double t = -an + 2.0 * an * i / (G - 1);
        bool skip = false;
        for (double r : roots)
            if (std::fabs(t - r) < 1e-12) skip = true;  // node collision: skipped
        if (skip) continue;
        double phi;
        try {
            phi = fw.phi_n(n, t);
        } catch (const std::domain_error&) {
            continue;  // radicand not positive at this grid point: skipped
        }
        double logsum = 0.0;
        for (double r : roots) logsum += 1.0 / (t - r);
        logsum -= fw.field_derivative(t);
        ratio[i] = std::exp(log_poly_weight(roots, fw, t) - lognorm) * std::fabs(logsum) * phi;
    }
    double best = 0.0;
    for (double v : ratio) best = std::max(best, v);
    return best;
}

double bernstein_fd_check(const LejaSequence& seq, const FreudWeight& fw, int n, int probes,
                          unsigned seed) {
    if (n < 1) throw std::invalid_argument("bernstein_fd_check: n must be >= 1");
    if (static_cast<size_t>(n) > seq.points.size())
        throw std::invalid_argument("bernstein_fd_check: sequence has fewer than n points");
    const std::vector<double> roots(seq.points.begin(), seq.points.begin() + n);
    const double an = fw.mrs_number(n);
    const double lognorm = weighted_poly_norm_log(roots, fw, an, GridSpec{});

    // signed normalized value g(t) = P_n(t) w(t) / ||P_n w||
    auto gval = [&](double t) {
        int sgn = 1;
        const double lv = log_poly_weight(roots, fw, t, &sgn);
        return sgn * std::exp(lv - lognorm);
    };

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-0.98 * an, 0.98 * an);
    const double h = 1e-6;
    double worst = 0.0;
    int done = 0;
    while (done < probes) {
        const double t = dist(rng);
        bool bad = std::fabs(t) < 1e-3;  // keep the field derivative smooth across t +- h
        for (double r : roots)
            if (std::fabs(t - r) < 1e-3) bad = true;
        if (bad) continue;
        double logsum = 0.0;
        for (double r : roots) logsum += 1.0 / (t - r);
        logsum -= fw.field_derivative(t);
        const double analytic = gval(t) * logsum;
        const double fd = (gval(t + h) - gval(t - h)) / (2.0 * h);
        const double rel = std::fabs(fd - analytic) /
                           std::max(std::fabs(analytic), 1e-300);
        worst = std::max(worst, rel);
        ++done;
    }
    return worst;
}

SpacingReport spacing_report(const LejaSequence& seq, const FreudWeight& fw, int n,
                             const GridSpec& grid) {
    SpacingReport r;
    r.n = n;
    r.min_scaled_gap = min_gap_statistic(contract(seq, n));
    r.new_point_gap = new_point_gap(seq, n);
    r.bernstein_sup_ratio = bernstein_check(seq, fw, n, grid);
    return r;
}

}  // namespace wleja
