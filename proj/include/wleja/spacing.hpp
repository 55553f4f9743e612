#pragma once

#include "wleja/common.hpp"
#include "wleja/leja.hpp"
#include "wleja/weights.hpp"

namespace wleja {

struct SpacingReport {
    int n = 0;
    double min_scaled_gap = 0.0;      // n * min_{i<j} |x_{n,i} - x_{n,j}|
    double new_point_gap = 0.0;       // (n/a_n) * min_{j<n} |x_n - x_j|, uncontracted
    double bernstein_sup_ratio = 0.0;
};

// n * min pairwise gap of the contracted nodes; bounded below uniformly in n for
// well-separated sequences.
double min_gap_statistic(const ContractedNodeSet& nodes);

// (n/a_n) * distance of the newest uncontracted point to its predecessors.
double new_point_gap(const LejaSequence& seq, int n);

// With P_n(t) = prod_{j<n}(t - x_j): sup over a uniform grid in [-a_n, a_n] of
// |(P_n w)'(t)| * phi_n(t) / ||P_n w||_inf, the derivative via the logarithmic
// derivative (P_n w)' = P_n w * (sum_j 1/(t-x_j) - Q'(t)) in log domain. Grid
// points where phi_n's radicand is not positive, or that collide with a node,
// are skipped. The ratio is expected bounded (no growth trend), not small.
double bernstein_check(const LejaSequence& seq, const FreudWeight& fw, int n,
                       const GridSpec& grid = {});

// Max relative disagreement between the analytic (P_n w)' and a central finite
// difference (step 1e-6) at `probes` pseudo-random points away from the nodes;
// guards the derivative formula.
double bernstein_fd_check(const LejaSequence& seq, const FreudWeight& fw, int n, int probes,
                          unsigned seed = 12345);

SpacingReport spacing_report(const LejaSequence& seq, const FreudWeight& fw, int n,
                             const GridSpec& grid = {});

}  // namespace wleja
