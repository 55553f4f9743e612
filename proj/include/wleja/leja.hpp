#pragma once

#include <optional>
#include <vector>

#include "wleja/common.hpp"
#include "wleja/weights.hpp"

namespace wleja {

// Greedily generated interpolation abscissas in generation order. `weight` is
// empty for the unweighted baseline, which maximizes over the fixed interval
// [domain_lo, domain_hi]; the weighted recursion searches [-a_n(1+margin),
// a_n(1+margin)] at step n. objective_values[k] is the log objective attained
// when point k was selected (entry 0 holds log w(x0), or 0 unweighted).
struct LejaSequence {
    std::optional<FreudWeight> weight;
    double domain_lo = -1.0;
    double domain_hi = 1.0;
    double x0 = 0.0;
    double margin = 0.05;
    std::vector<double> points;
    std::vector<double> objective_values;
};

// Nodes rescaled by n^{-1/alpha} so their empirical distribution stabilizes.
struct ContractedNodeSet {
    int n = 0;
    double alpha = 0.0;
    std::vector<double> nodes;  // n+1 entries
};

// Atoms with masses; holds the empirical measures of node sets.
struct DiscreteMeasure {
    std::vector<double> atoms;
    std::vector<double> masses;
};

// One greedy step: global maximizer of log w(x) + sum_j log|x - x_j| over
// [-a_n(1+margin), a_n(1+margin)], n = |current|. Per-interval probing plus
// golden-section refinement to 1e-13*a_n; near-equal maximizers (1e-12 relative)
// resolve to the largest coordinate. A maximizer at the search boundary throws
// numerical_error (the margin should never be binding).
double next_leja_point(const FreudWeight& fw, const std::vector<double>& current,
                       double margin = 0.05, bool parallel = true);

// Same recursion with w == 1 over a fixed interval; the interval endpoints are
// legitimate candidates here.
double next_leja_point_unweighted(const std::vector<double>& current, double lo, double hi,
                                  bool parallel = true);

LejaSequence generate_sequence(const FreudWeight& fw, int n, double x0, double margin = 0.05,
                               bool parallel = true);

LejaSequence generate_unweighted(int n, double x0, double lo = -1.0, double hi = 1.0,
                                 bool parallel = true);

ContractedNodeSet contract(const LejaSequence& seq, int n);

// masses 1/(n+1) on all nodes, or 1/n on all but the excluded one.
DiscreteMeasure empirical_measure(const ContractedNodeSet& nodes,
                                  std::optional<int> excluded_index = std::nullopt);

}  // namespace wleja
