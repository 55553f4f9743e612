#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace wleja {

// Thrown when a solver fails for numerical reasons (failed bracket, maximizer
// pinned at a search boundary, non-convergent quadrature) as opposed to bad
// arguments, which use std::invalid_argument / std::domain_error.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Search/grid settings shared by the sup-norm scans and grid diagnostics.
struct GridSpec {
    int probes_per_interval = 64;   // uniform probes per inter-node interval
    double refine_xtol = 1e-12;     // absolute x tolerance of the refinement
    int dense_points = 2048;        // uniform grid size for grid-based diagnostics
};

// A signed number stored as (sign, log|value|); sign 0 means exact zero.
struct SignedLog {
    int sign = 0;
    double logabs = -std::numeric_limits<double>::infinity();
};

inline SignedLog signed_log_from(double v) {
    if (v == 0.0) return {0, -std::numeric_limits<double>::infinity()};
    return {v > 0.0 ? 1 : -1, std::log(std::fabs(v))};
}

// Sum of s_i*exp(l_i) with max-extraction; result as SignedLog.
inline SignedLog signed_log_sum(const std::vector<SignedLog>& terms) {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms)
        if (t.sign != 0 && t.logabs > m) m = t.logabs;
    if (!std::isfinite(m)) return {0, -std::numeric_limits<double>::infinity()};
    double acc = 0.0;
    for (const auto& t : terms)
        if (t.sign != 0) acc += t.sign * std::exp(t.logabs - m);
    if (acc == 0.0) return {0, -std::numeric_limits<double>::infinity()};
    return {acc > 0.0 ? 1 : -1, m + std::log(std::fabs(acc))};
}

// Plain log-sum-exp of exp(l_i), l_i possibly -inf.
inline double log_sum_exp(const std::vector<double>& logs) {
    double m = -std::numeric_limits<double>::infinity();
    for (double l : logs)
        if (l > m) m = l;
    if (!std::isfinite(m)) return m;
    double acc = 0.0;
    for (double l : logs) acc += std::exp(l - m);
    return m + std::log(acc);
}

// 17 significant digits: enough that parsing the text recovers the exact double.
inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace wleja
