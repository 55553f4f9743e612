#include "wleja/potential.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "wleja/maximize.hpp"
#include "wleja/quadrature.hpp"

namespace wleja {

// J(u) = int_u^1 s^{alpha-1}/sqrt(s^2-u^2) ds for u in [0,1]. The substitution
// s = u*cosh(v) turns it into int_0^V (u*cosh v)^{alpha-1} dv with
// V = log((1+sqrt(1-u^2))/u), an analytic integrand that composite
// Gauss-Legendre nails to machine precision.
static double ullman_J(double alpha, double u) {
    if (u <= 0.0) return 1.0 / (alpha - 1.0);
    if (u >= 1.0) return 0.0;
    const double V = std::log((1.0 + std::sqrt((1.0 - u) * (1.0 + u))) / u);
    const int panels = std::max(2, static_cast<int>(std::ceil(V / 6.0)));
    const GLRule& r = gauss_legendre(32);
    const double h = V / panels;
    double s = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * h, half = 0.5 * h;
        for (size_t i = 0; i < r.x.size(); ++i) {
            const double v = mid + half * r.x[i];
            s += r.w[i] * std::exp((alpha - 1.0) * std::log(u * std::cosh(v)));
        }
    }
    return s * 0.5 * h;
}

// Panel edges over [p,q] graded geometrically into both endpoints, so integrands
// with integrable endpoint singularities (log, |t|^{alpha-1} cusps, sqrt edges)
// are resolved without special-casing. Edges ascend from p to q.
static std::vector<double> ladder_edges(double p, double q, int levels) {
    const double h = 0.5 * (q - p);
    std::vector<double> e;
    e.reserve(2 * levels + 3);
    e.push_back(p);
    for (int k = levels; k >= 1; --k) e.push_back(p + h * std::ldexp(1.0, -k));
    e.push_back(p + h);
    for (int k = 1; k <= levels; ++k) e.push_back(q - h * std::ldexp(1.0, -k));
    e.push_back(q);
    return e;
}

static double integrate_ladder(const std::function<double(double)>& g, double p, double q,
                               int levels, int order) {
    if (!(q > p)) return 0.0;
    const GLRule& r = gauss_legendre(order);
    const std::vector<double> e = ladder_edges(p, q, levels);
    double s = 0.0;
    for (size_t j = 0; j + 1 < e.size(); ++j) {
        if (!(e[j + 1] > e[j])) continue;  // grading may collapse to ulp-empty panels
        const double mid = 0.5 * (e[j] + e[j + 1]), half = 0.5 * (e[j + 1] - e[j]);
        double ps = 0.0;
        for (size_t i = 0; i < r.x.size(); ++i) ps += r.w[i] * g(mid + half * r.x[i]);
        s += ps * half;
    }
    return s;
}

double EquilibriumMeasure::density(double t) const {
    if (!std::isfinite(t)) throw std::domain_error("density: non-finite t");
    if (std::fabs(t) > support_radius)
        throw std::domain_error("density: |t|=" + fmt17(std::fabs(t)) + " outside the support radius " +
                                fmt17(support_radius));
    return normalization * ullman_J(alpha, std::fabs(t) / support_radius);
}

double EquilibriumMeasure::cdf(double t) const {
    if (t <= panel_edges.front()) return 0.0;
    if (t >= panel_edges.back()) return 1.0;
    const auto it = std::upper_bound(panel_edges.begin(), panel_edges.end(), t);
    const size_t p = static_cast<size_t>(it - panel_edges.begin()) - 1;
    const GLRule& r = gauss_legendre(gl_order);
    const double mid = 0.5 * (panel_edges[p] + t), half = 0.5 * (t - panel_edges[p]);
    double partial = 0.0;
    for (size_t i = 0; i < r.x.size(); ++i) partial += r.w[i] * density(mid + half * r.x[i]);
    return std::min(1.0, panel_prefix[p] + partial * half);
}

EquilibriumMeasure build_equilibrium_measure(double alpha, int levels, int gl_order) {
    FreudWeight fw(alpha);  // validates alpha > 1
    EquilibriumMeasure eq;
    eq.alpha = alpha;
    eq.support_radius = fw.support_radius_c;
    eq.gl_order = gl_order;
    const double c = eq.support_radius;

    // panel family graded into -c, 0, +c; raw weights carry J(|t|/c)
    std::vector<double> left = ladder_edges(-c, 0.0, levels);
    std::vector<double> right = ladder_edges(0.0, c, levels);
    eq.panel_edges = left;
    eq.panel_edges.insert(eq.panel_edges.end(), right.begin() + 1, right.end());

    const GLRule& r = gauss_legendre(gl_order);
    std::vector<double> panel_mass(eq.panel_edges.size() - 1, 0.0);
    for (size_t j = 0; j + 1 < eq.panel_edges.size(); ++j) {
        const double mid = 0.5 * (eq.panel_edges[j] + eq.panel_edges[j + 1]);
        const double half = 0.5 * (eq.panel_edges[j + 1] - eq.panel_edges[j]);
        double pm = 0.0;
        for (size_t i = 0; i < r.x.size(); ++i) {
            const double t = mid + half * r.x[i];
            const double jw = r.w[i] * half * ullman_J(alpha, std::fabs(t) / c);
            eq.quad_nodes.push_back(t);
            eq.quad_weights.push_back(jw);
            pm += jw;
        }
        panel_mass[j] = pm;
    }
    double raw_mass = 0.0;
    for (double pm : panel_mass) raw_mass += pm;
    eq.normalization = 1.0 / raw_mass;  // numeric unit-mass normalization
    for (double& w : eq.quad_weights) w *= eq.normalization;

    eq.panel_prefix.assign(panel_mass.size(), 0.0);
    double acc = 0.0;
    for (size_t j = 0; j < panel_mass.size(); ++j) {
        eq.panel_prefix[j] = acc;
        acc += panel_mass[j] * eq.normalization;
    }

    eq.robin_constant = log_potential(eq, 0.0);
    double q_moment = 0.0;
    for (size_t i = 0; i < eq.quad_nodes.size(); ++i)
        q_moment += eq.quad_weights[i] * std::pow(std::fabs(eq.quad_nodes[i]), alpha);
    eq.energy = eq.robin_constant + q_moment;
    return eq;
}

double log_potential(const EquilibriumMeasure& eq, double x) {
    if (!std::isfinite(x)) throw std::domain_error("log_potential: non-finite x");
    const double c = eq.support_radius;
    if (std::fabs(x) >= c) {
        // no interior singularity: the graded grid handles the edge-adjacent peak
        double s = 0.0;
        for (size_t i = 0; i < eq.quad_nodes.size(); ++i)
            s -= eq.quad_weights[i] * std::log(std::fabs(x - eq.quad_nodes[i]));
        return s;
    }
    // split at the singularity x and the density cusp 0, then ladder-integrate
    std::vector<double> brk = {-c, 0.0, x, c};
    std::sort(brk.begin(), brk.end());
    auto g = [&](double t) {
        // the deepest graded panels can place a node exactly on the singularity;
        // that node carries ~1e-14 of the panel weight, so dropping it is far
        // below the quadrature error floor
        const double d = std::fabs(x - t);
        if (d == 0.0) return 0.0;
        return -std::log(d) * eq.density(t);
    };
    double s = 0.0;
    for (size_t j = 0; j + 1 < brk.size(); ++j) s += integrate_ladder(g, brk[j], brk[j + 1], 40, eq.gl_order);
    return s;
}

double log_potential(const DiscreteMeasure& m, double x) {
    if (!std::isfinite(x)) throw std::domain_error("log_potential: non-finite x");
    if (m.atoms.size() != m.masses.size())
        throw std::invalid_argument("log_potential: atoms/masses size mismatch");
    double s = 0.0;
    for (size_t i = 0; i < m.atoms.size(); ++i) {
        const double d = x - m.atoms[i];
        if (d == 0.0)
            throw std::domain_error("log_potential: x coincides with the atom at " + fmt17(x));
        s -= m.masses[i] * std::log(std::fabs(d));
    }
    return s;
}

double robin_constant(double alpha) { return build_equilibrium_measure(alpha).robin_constant; }

double energy(double alpha) { return build_equilibrium_measure(alpha).energy; }

double variational_identity_sup(const EquilibriumMeasure& eq, int samples) {
    const double c = eq.support_radius;
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = -0.95 * c + 1.9 * c * i / (samples - 1);
        const double dev = std::fabs(log_potential(eq, t) + std::pow(std::fabs(t), eq.alpha) -
                                     eq.robin_constant);
        worst = std::max(worst, dev);
    }
    return worst;
}

double fekete_functional(const std::vector<double>& points, const FreudWeight* fw) {
    const size_t m = points.size();
    if (m < 2) throw std::invalid_argument("fekete_functional: need at least 2 points");
    const int n = static_cast<int>(m) - 1;
    double s = 0.0;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            const double d = std::fabs(points[i] - points[j]);
            if (d == 0.0)
                throw std::invalid_argument("fekete_functional: duplicate point " + fmt17(points[i]));
            s += 2.0 * std::log(d);
        }
    if (fw)
        for (double p : points) s += 2.0 * n * fw->log_weight(p);
    return std::exp(s / (static_cast<double>(n + 1) * (n + 2)));
}

double numerator_limit(const ContractedNodeSet& nodes, const FreudWeight& fw, int k,
                       const GridSpec& grid) {
    const int n = nodes.n;
    if (n < 1) throw std::invalid_argument("numerator_limit: node set must have n >= 1");
    if (k < 0 || k > n) throw std::invalid_argument("numerator_limit: k out of range");
    const double c = fw.support_radius_c;
    std::vector<double> others;
    others.reserve(n);
    for (int j = 0; j <= n; ++j)
        if (j != k) others.push_back(nodes.nodes[j]);
    auto logobj = [&](double y) {
        double s = n * fw.log_weight(y);
        for (double p : others) s += std::log(std::fabs(y - p));
        return s;
    };
    MaxResult best = scan_subintervals(logobj, others, -c, c, grid.probes_per_interval,
                                       grid.refine_xtol, /*include_endpoints=*/true);
    return std::exp(best.value / n);
}

double denominator_value(const ContractedNodeSet& nodes, const FreudWeight& fw, int k) {
    const int n = nodes.n;
    if (k < 0 || k > n) throw std::invalid_argument("denominator_value: k out of range");
    double s = n * fw.log_weight(nodes.nodes[k]);
    for (int j = 0; j <= n; ++j)
        if (j != k) s += std::log(std::fabs(nodes.nodes[k] - nodes.nodes[j]));
    return std::exp(s / n);
}

std::pair<double, double> split_products(const ContractedNodeSet& nodes, const FreudWeight& fw,
                                         int k, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("split_products: delta must be > 0");
    const int n = nodes.n;
    if (k < 0 || k > n) throw std::invalid_argument("split_products: k out of range");
    double s1 = n * fw.log_weight(nodes.nodes[k]);  // weight rides with the far part
    double s2 = 0.0;
    for (int j = 0; j <= n; ++j) {
        if (j == k) continue;
        const double d = std::fabs(nodes.nodes[k] - nodes.nodes[j]);
        (d >= delta ? s1 : s2) += std::log(d);
    }
    return {std::exp(s1 / n), std::exp(s2 / n)};
}

double cdf_distance(const DiscreteMeasure& empirical, const EquilibriumMeasure& eq,
                    int grid_points) {
    std::vector<size_t> order(empirical.atoms.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return empirical.atoms[a] < empirical.atoms[b]; });

    auto emp_cdf = [&](double t) {
        double s = 0.0;
        for (size_t i : order) {
            if (empirical.atoms[i] > t) break;
            s += empirical.masses[i];
        }
        return s;
    };

    double worst = 0.0;
    double below = 0.0;  // empirical mass strictly below the current atom
    for (size_t i : order) {
        const double t = empirical.atoms[i];
        const double fe = eq.cdf(t);
        worst = std::max(worst, std::fabs(below - fe));                        // left limit
        worst = std::max(worst, std::fabs(below + empirical.masses[i] - fe));  // right value
        below += empirical.masses[i];
    }
    const double c = eq.support_radius;
    for (int i = 0; i < grid_points; ++i) {
        const double t = -c + 2.0 * c * i / (grid_points - 1);
        worst = std::max(worst, std::fabs(emp_cdf(t) - eq.cdf(t)));
    }
    return worst;
}

double discrete_log_polynomial_identity_check(const ContractedNodeSet& nodes,
                                              const FreudWeight& fw, int k, double x) {
    const int n = nodes.n;
    if (k < 0 || k > n) throw std::invalid_argument("identity check: k out of range");
    for (int j = 0; j <= n; ++j)
        if (j != k && x == nodes.nodes[j])
            throw std::domain_error("identity check: x coincides with an atom at " + fmt17(x));
    // polynomial route: (1/n) log(|P_{n,k}(x)| w(x)^n)
    double lp = 0.0;
    for (int j = 0; j <= n; ++j)
        if (j != k) lp += std::log(std::fabs(x - nodes.nodes[j]));
    const double lhs = lp / n + fw.log_weight(x);
    // potential route: -U^{mu_{n,k}}(x) - Q(x)
    const DiscreteMeasure mu = empirical_measure(nodes, k);
    const double rhs = -log_potential(mu, x) - fw.external_field(x);
    return std::fabs(lhs - rhs);
}

}  // namespace wleja
