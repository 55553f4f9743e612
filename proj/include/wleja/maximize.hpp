#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wleja/common.hpp"

namespace wleja {

struct MaxResult {
    double x = 0.0;
    double value = -std::numeric_limits<double>::infinity();
};

// Golden-section maximization on [lo,hi]; only interior points are evaluated, so
// endpoints where f is singular (-inf at nodes) are safe as bracket ends.
template <class F>
MaxResult golden_max(F&& f, double lo, double hi, double xtol) {
    constexpr double invphi = 0.6180339887498949;   // 1/phi
    constexpr double invphi2 = 0.3819660112501051;  // 1/phi^2
    double a = lo, b = hi;
    double x1 = a + invphi2 * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + invphi2 * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 >= f2 ? MaxResult{x1, f1} : MaxResult{x2, f2};
}

// One open interval (lo,hi): uniform interior probes, then golden-section around
// the best probe. f may be -inf at the interval ends.
template <class F>
MaxResult probe_refine_interval(F&& f, double lo, double hi, int probes, double xtol) {
    const double h = (hi - lo) / (probes + 1);
    MaxResult best;
    int ibest = -1;
    for (int i = 1; i <= probes; ++i) {
        const double x = lo + i * h;
        const double v = f(x);
        if (v > best.value) {
            best = {x, v};
            ibest = i;
        }
    }
    if (ibest < 0) return best;  // all probes -inf (degenerate sliver)
    const double blo = lo + (ibest - 1) * h;
    const double bhi = lo + (ibest + 1) * h;
    MaxResult refined = golden_max(f, blo, bhi, xtol);
    return refined.value >= best.value ? refined : best;
}

// Global maximum over [lo,hi] partitioned by the interior entries of `breaks`
// (need not be sorted). Each sub-interval is searched independently; results are
// stored per interval and reduced serially, so the outcome is bitwise identical
// whether or not OpenMP splits the loop. Ties within 1e-12 relative objective gap
// are broken toward the largest coordinate. `include_endpoints` adds f(lo), f(hi)
// as candidates (for suprema over compact intervals; the recursion search instead
// treats a boundary winner as an error upstream).
template <class F>
MaxResult scan_subintervals(F&& f, std::vector<double> breaks, double lo, double hi,
                            int probes, double xtol, bool include_endpoints,
                            bool parallel = true) {
    if (probes < 4) throw std::invalid_argument("scan_subintervals: need at least 4 probes per interval");
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> edges;
    edges.reserve(breaks.size() + 2);
    edges.push_back(lo);
    for (double b : breaks)
        if (b > lo && b < hi) edges.push_back(b);
    edges.push_back(hi);

    const int m = static_cast<int>(edges.size()) - 1;
    std::vector<MaxResult> per(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && m > 8)
#endif
    for (int i = 0; i < m; ++i) {
        if (edges[i + 1] - edges[i] > 4.0 * std::numeric_limits<double>::epsilon() *
                                          std::max(1.0, std::fabs(edges[i])))
            per[i] = probe_refine_interval(f, edges[i], edges[i + 1], probes, xtol);
    }
    if (include_endpoints) {
        per.push_back({lo, f(lo)});
        per.push_back({hi, f(hi)});
    }

    MaxResult best;
    for (const auto& r : per)
        if (r.value > best.value) best = r;
    if (!std::isfinite(best.value))
        throw numerical_error("scan_subintervals: objective not finite anywhere on the search interval");
    // tie-break: largest coordinate among near-equal maximizers
    const double cut = best.value - 1e-12 * std::max(1.0, std::fabs(best.value));
    for (const auto& r : per)
        if (r.value >= cut && r.x > best.x) best = r;
    return best;
}

}  // namespace wleja
