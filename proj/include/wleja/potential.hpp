#pragma once

#include <utility>
#include <vector>

#include "wleja/common.hpp"
#include "wleja/leja.hpp"
#include "wleja/weights.hpp"

namespace wleja {

// The unit measure on [-c, c] minimizing the weighted logarithmic energy for the
// field |x|^alpha. Its density is built from the Ullman-type integral
// rho(t) = N * int_{|t|/c}^{1} s^{alpha-1}/sqrt(s^2-(t/c)^2) ds with N fixed
// numerically by unit total mass; the variational identity U + Q = const on the
// support is the ground-truth acceptance of the construction, checked by
// variational_identity_sup.
struct EquilibriumMeasure {
    double alpha = 0.0;
    double support_radius = 0.0;   // c
    double normalization = 0.0;    // N (numeric; closed form alpha/(pi*c) is a cross-check)
    double robin_constant = 0.0;   // F_w = U(0), since Q(0) = 0
    double energy = 0.0;           // V_w = F_w + int Q dmu

    // integration against the density: sum_i quad_weights[i]*g(quad_nodes[i])
    std::vector<double> quad_nodes;
    std::vector<double> quad_weights;

    // panel structure backing the CDF (edges ascending over [-c, c], prefix
    // masses per panel), plus the per-panel rule order
    std::vector<double> panel_edges;
    std::vector<double> panel_prefix;
    int gl_order = 16;

    double density(double t) const;  // throws std::domain_error for |t| > c
    double cdf(double t) const;      // 0 below -c, 1 above +c
};

// levels/gl_order control the graded panel family; two builds with different
// settings give independent quadrature routes for cross-validation.
EquilibriumMeasure build_equilibrium_measure(double alpha, int levels = 40, int gl_order = 16);

// int log(1/|x-t|) dmu(t). Continuous case: panelwise quadrature with geometric
// grading into the log singularity at x, the density cusp at 0, and the support
// edges. Discrete case: mass-weighted sum; x at an atom throws std::domain_error.
double log_potential(const EquilibriumMeasure& eq, double x);
double log_potential(const DiscreteMeasure& m, double x);

double robin_constant(double alpha);  // F_w
double energy(double alpha);          // V_w

// sup over uniform samples of |U(t) + Q(t) - F_w| on [-0.95c, 0.95c].
double variational_identity_sup(const EquilibriumMeasure& eq, int samples = 41);

// (prod_{i<j} |x_i-x_j| * prod_i w(x_i)^n)^(2/((n+1)(n+2))), n+1 = |points|,
// in log domain; fw == nullptr for the unweighted variant. On contracted node
// sets this approaches exp(-energy).
double fekete_functional(const std::vector<double>& points, const FreudWeight* fw);

// ( sup_{y in [-c,c]} w(y)^n prod_{j!=k} |y-x_{n,j}| )^{1/n}; approaches
// exp(-robin_constant) as n grows.
double numerator_limit(const ContractedNodeSet& nodes, const FreudWeight& fw, int k,
                       const GridSpec& grid = {});

// ( w(x_{n,k})^n prod_{j!=k} |x_{n,k}-x_{n,j}| )^{1/n}; same limit.
double denominator_value(const ContractedNodeSet& nodes, const FreudWeight& fw, int k);

// A1 = (w(x_{n,k})^n prod_{gap>=delta} gap)^{1/n}, A2 = (prod_{gap<delta} gap)^{1/n};
// empty products are 1, and A1*A2 equals denominator_value identically.
std::pair<double, double> split_products(const ContractedNodeSet& nodes, const FreudWeight& fw,
                                         int k, double delta);

// sup_t |F_empirical(t) - F_equilibrium(t)| over all atoms (both one-sided
// limits) plus a uniform grid on [-c, c].
double cdf_distance(const DiscreteMeasure& empirical, const EquilibriumMeasure& eq,
                    int grid_points = 2048);

// |(1/n) log(|P_{n,k}(x)| w(x)^n) - (-U^{mu_{n,k}}(x) - Q(x))|, the two sides
// computed through independent code paths; an algebraic identity, so any
// deviation beyond rounding flags broken log-domain plumbing.
double discrete_log_polynomial_identity_check(const ContractedNodeSet& nodes,
                                              const FreudWeight& fw, int k, double x);

}  // namespace wleja
