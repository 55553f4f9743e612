#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "wleja/common.hpp"
#include "wleja/leja.hpp"
#include "wleja/weights.hpp"

namespace wleja {

// Per-node quantities for the Lagrange basis, kept in signed log form:
// log_denominators[k] = sum_{j!=k} log|x_k - x_j|, denominator_signs[k] the sign
// of the underlying product, log_node_weights[k] = log w(x_k) (0 unweighted).
struct BasisPrecompute {
    std::vector<double> nodes;
    std::vector<double> log_denominators;
    std::vector<int> denominator_signs;
    std::vector<double> log_node_weights;
};

struct LebesgueReport {
    int n = 0;
    double constant = 1.0;
    double argmax_location = 0.0;
    double nth_root = 1.0;
    int grid_size = 0;  // probes per inter-node interval used by the scan
};

// fw == nullptr means the unweighted basis (log w == 0).
BasisPrecompute precompute_basis(const std::vector<double>& nodes, const FreudWeight* fw);

// sum_k exp(log w(x) + sum_{j!=k} log|x-x_j| - log_denominators[k] -
// log_node_weights[k]), accumulated by log-sum-exp. Within 1e-14 of a node the
// limiting value 1 is returned directly.
double lebesgue_function(const BasisPrecompute& pre, const FreudWeight* fw, double x);

// Supremum of the function above over [-a_n, a_n] (weighted; the sequence domain
// when unweighted) by per-interval probing plus golden-section refinement. The
// weighted scan also probes the (1+margin) guard band, which must not contain the
// maximum; if it does, numerical_error is thrown. n = 0 scans [-a_1, a_1] and
// reports nth_root equal to the constant.
LebesgueReport lebesgue_constant(const LejaSequence& seq, int n, const GridSpec& grid = {});

// Second barycentric form with signed log-domain weights; exact at nodes.
double interpolate(const BasisPrecompute& pre, const std::vector<double>& fvalues, double x);

// For each n: sup over a dense grid of w(x)|f(x) - I_n[f](x)| on
// [-a_n(1+margin), a_n(1+margin)], using nodes generated from x0 = 0. The trend
// is reported, not enforced.
std::vector<std::pair<int, double>> interpolation_error_study(
    const FreudWeight& fw, const std::function<double(double)>& f,
    const std::vector<int>& n_list, const GridSpec& grid = {});

}  // namespace wleja
