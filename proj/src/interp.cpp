#include "wleja/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wleja/maximize.hpp"

namespace wleja {

BasisPrecompute precompute_basis(const std::vector<double>& nodes, const FreudWeight* fw) {
    const size_t m = nodes.size();
    if (m == 0) throw std::invalid_argument("precompute_basis: empty node set");
    BasisPrecompute pre;
    pre.nodes = nodes;
    pre.log_denominators.assign(m, 0.0);
    pre.denominator_signs.assign(m, 1);
    pre.log_node_weights.assign(m, 0.0);
    for (size_t k = 0; k < m; ++k) {
        double s = 0.0;
        int sgn = 1;
        for (size_t j = 0; j < m; ++j) {
            if (j == k) continue;
            const double d = nodes[k] - nodes[j];
            if (d == 0.0)
                throw std::invalid_argument("precompute_basis: duplicate node " + fmt17(nodes[k]));
            s += std::log(std::fabs(d));
            if (d < 0.0) sgn = -sgn;
        }
        pre.log_denominators[k] = s;
        pre.denominator_signs[k] = sgn;
        if (fw) pre.log_node_weights[k] = fw->log_weight(nodes[k]);
    }
    return pre;
}

double lebesgue_function(const BasisPrecompute& pre, const FreudWeight* fw, double x) {
    if (!std::isfinite(x)) throw std::domain_error("lebesgue_function: non-finite x");
    const size_t m = pre.nodes.size();
    for (size_t k = 0; k < m; ++k)
        if (std::fabs(x - pre.nodes[k]) < 1e-14) return 1.0;  // limiting value at a node

    double S = 0.0;  // sum_j log|x - x_j|
    for (size_t j = 0; j < m; ++j) S += std::log(std::fabs(x - pre.nodes[j]));
    const double lw = fw ? fw->log_weight(x) : 0.0;

    thread_local std::vector<double> terms;
    terms.assign(m, 0.0);
    for (size_t k = 0; k < m; ++k)
        terms[k] = lw + S - std::log(std::fabs(x - pre.nodes[k])) - pre.log_denominators[k] -
                   pre.log_node_weights[k];
    return std::exp(log_sum_exp(terms));
}

LebesgueReport lebesgue_constant(const LejaSequence& seq, int n, const GridSpec& grid) {
    if (n < 0) throw std::invalid_argument("lebesgue_constant: n must be >= 0");
    if (static_cast<size_t>(n) + 1 > seq.points.size())
        throw std::invalid_argument("lebesgue_constant: sequence has fewer than n+1 points");
    if (grid.probes_per_interval < 4)
        throw std::invalid_argument("lebesgue_constant: need at least 4 probes per interval");

    std::vector<double> nodes(seq.points.begin(), seq.points.begin() + n + 1);
    const FreudWeight* fw = seq.weight ? &*seq.weight : nullptr;
    const BasisPrecompute pre = precompute_basis(nodes, fw);
    auto lam = [&](double x) { return lebesgue_function(pre, fw, x); };

    double lo, hi;
    if (fw) {
        const double an = fw->mrs_number(std::max(n, 1));  // n = 0 scans [-a_1, a_1]
        lo = -an;
        hi = an;
    } else {
        lo = seq.domain_lo;
        hi = seq.domain_hi;
    }
    MaxResult best = scan_subintervals(lam, nodes, lo, hi, grid.probes_per_interval,
                                       grid.refine_xtol, /*include_endpoints=*/true);
    if (fw) {
        // Theorem-as-runtime-check: the sup of the weighted basis sum must lie
        // inside [-a_n, a_n]; the margin band is scanned and must stay below.
        const double A = hi * (1.0 + seq.margin);
        MaxResult g1 = scan_subintervals(lam, nodes, hi, A, grid.probes_per_interval,
                                         grid.refine_xtol, true);
        MaxResult g2 = scan_subintervals(lam, nodes, -A, lo, grid.probes_per_interval,
                                         grid.refine_xtol, true);
        const double gmax = std::max(g1.value, g2.value);
        if (gmax > best.value)
            throw numerical_error("lebesgue_constant: maximum " + fmt17(gmax) +
                                  " found in the guard band beyond +-" + fmt17(hi) +
                                  ", exceeding the interior maximum " + fmt17(best.value));
    }

    LebesgueReport rep;
    rep.n = n;
    rep.constant = best.value;
    rep.argmax_location = best.x;
    rep.nth_root = n > 0 ? std::pow(best.value, 1.0 / n) : best.value;
    rep.grid_size = grid.probes_per_interval;
    return rep;
}

double interpolate(const BasisPrecompute& pre, const std::vector<double>& fvalues, double x) {
    const size_t m = pre.nodes.size();
    if (fvalues.size() != m)
        throw std::invalid_argument("interpolate: fvalues size " + std::to_string(fvalues.size()) +
                                    " does not match node count " + std::to_string(m));
    if (!std::isfinite(x)) throw std::domain_error("interpolate: non-finite x");
    for (size_t k = 0; k < m; ++k)
        if (x == pre.nodes[k]) return fvalues[k];

    // second barycentric form: sum_k f_k*b_k/(x-x_k) / sum_k b_k/(x-x_k),
    // b_k = sign/exp(log_denominators); both sums accumulated as signed logs
    double mx = -std::numeric_limits<double>::infinity();
    thread_local std::vector<double> lmag;
    thread_local std::vector<int> sgn;
    lmag.assign(m, 0.0);
    sgn.assign(m, 1);
    for (size_t k = 0; k < m; ++k) {
        const double d = x - pre.nodes[k];
        lmag[k] = -std::log(std::fabs(d)) - pre.log_denominators[k];
        sgn[k] = (d > 0.0 ? 1 : -1) * pre.denominator_signs[k];
        mx = std::max(mx, lmag[k]);
    }
    double num = 0.0, den = 0.0;
    for (size_t k = 0; k < m; ++k) {
        const double e = sgn[k] * std::exp(lmag[k] - mx);
        num += e * fvalues[k];
        den += e;
    }
    if (den == 0.0) throw numerical_error("interpolate: barycentric denominator vanished at x=" + fmt17(x));
    return num / den;
}

std::vector<std::pair<int, double>> interpolation_error_study(
    const FreudWeight& fw, const std::function<double(double)>& f,
    const std::vector<int>& n_list, const GridSpec& grid) {
    if (n_list.empty()) return {};
    int n_top = 0;
    for (int n : n_list) {
        if (n < 1) throw std::invalid_argument("interpolation_error_study: n must be >= 1");
        n_top = std::max(n_top, n);
    }
    const LejaSequence seq = generate_sequence(fw, n_top, 0.0);

    std::vector<std::pair<int, double>> out;
    out.reserve(n_list.size());
    for (int n : n_list) {
        std::vector<double> nodes(seq.points.begin(), seq.points.begin() + n + 1);
        const BasisPrecompute pre = precompute_basis(nodes, &fw);
        std::vector<double> fv(nodes.size());
        for (size_t k = 0; k < nodes.size(); ++k) fv[k] = f(nodes[k]);

        const double A = fw.mrs_number(n) * (1.0 + seq.margin);
        const int G = std::max(grid.dense_points, 2);
        double emax = 0.0;
        for (int i = 0; i < G; ++i) {
            const double x = -A + 2.0 * A * i / (G - 1);
            const double e = fw.weight_value(x) * std::fabs(f(x) - interpolate(pre, fv, x));
            emax = std::max(emax, e);
        }
        out.emplace_back(n, emax);
    }
    return out;
}

}  // namespace wleja
