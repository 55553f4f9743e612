#include "wleja/leja.hpp"

#include <cmath>
#include <stdexcept>

#include "wleja/maximize.hpp"

namespace wleja {

static void require_distinct(const std::vector<double>& pts, const char* op) {
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw std::invalid_argument(std::string(op) + ": duplicate point " + fmt17(pts[i]));
}

double next_leja_point(const FreudWeight& fw, const std::vector<double>& current,
                       double margin, bool parallel) {
    if (current.empty()) throw std::invalid_argument("next_leja_point: current set is empty");
    require_distinct(current, "next_leja_point");
    const int n = static_cast<int>(current.size());
    const double an = fw.mrs_number(n);
    const double A = an * (1.0 + margin);
    auto logobj = [&](double x) {
        double s = fw.log_weight(x);
        for (double p : current) s += std::log(std::fabs(x - p));
        return s;
    };
    MaxResult best = scan_subintervals(logobj, current, -A, A, 32, 1e-13 * an,
                                       /*include_endpoints=*/false, parallel);
    if (std::fabs(best.x) >= A * (1.0 - 1e-9))
        throw numerical_error("next_leja_point: maximizer " + fmt17(best.x) +
                              " pinned at the search boundary +-" + fmt17(A) +
                              " (margin insufficient at step n=" + std::to_string(n) + ")");
    return best.x;
}

double next_leja_point_unweighted(const std::vector<double>& current, double lo, double hi,
                                  bool parallel) {
    if (current.empty()) throw std::invalid_argument("next_leja_point: current set is empty");
    require_distinct(current, "next_leja_point");
    auto logobj = [&](double x) {
        double s = 0.0;
        for (double p : current) s += std::log(std::fabs(x - p));
        return s;
    };
    // endpoints of the fixed domain are legitimate maximizer candidates
    MaxResult best = scan_subintervals(logobj, current, lo, hi, 32,
                                       1e-13 * std::max(std::fabs(lo), std::fabs(hi)),
                                       /*include_endpoints=*/true, parallel);
    return best.x;
}

LejaSequence generate_sequence(const FreudWeight& fw, int n, double x0, double margin,
                               bool parallel) {
    if (n < 1) throw std::invalid_argument("generate_sequence: n must be >= 1");
    if (!std::isfinite(x0)) throw std::domain_error("generate_sequence: x0 must be finite");
    LejaSequence seq;
    seq.weight = fw;
    seq.x0 = x0;
    seq.margin = margin;
    seq.points.reserve(n + 1);
    seq.objective_values.reserve(n + 1);
    seq.points.push_back(x0);
    seq.objective_values.push_back(fw.log_weight(x0));
    for (int k = 1; k <= n; ++k) {
        double x;
        try {
            x = next_leja_point(fw, seq.points, margin, parallel);
        } catch (const numerical_error& e) {
            throw numerical_error("generate_sequence: step " + std::to_string(k) + ": " + e.what());
        }
        double v = fw.log_weight(x);
        for (double p : seq.points) v += std::log(std::fabs(x - p));
        seq.points.push_back(x);
        seq.objective_values.push_back(v);
    }
    return seq;
}

LejaSequence generate_unweighted(int n, double x0, double lo, double hi, bool parallel) {
    if (n < 1) throw std::invalid_argument("generate_unweighted: n must be >= 1");
    if (!(x0 >= lo && x0 <= hi))
        throw std::invalid_argument("generate_unweighted: x0 outside the domain");
    LejaSequence seq;
    seq.domain_lo = lo;
    seq.domain_hi = hi;
    seq.x0 = x0;
    seq.points.push_back(x0);
    seq.objective_values.push_back(0.0);
    for (int k = 1; k <= n; ++k) {
        const double x = next_leja_point_unweighted(seq.points, lo, hi, parallel);
        double v = 0.0;
        for (double p : seq.points) v += std::log(std::fabs(x - p));
        seq.points.push_back(x);
        seq.objective_values.push_back(v);
    }
    return seq;
}

ContractedNodeSet contract(const LejaSequence& seq, int n) {
    if (!seq.weight)
        throw std::invalid_argument("contract: contraction applies to weighted sequences only");
    if (n < 1) throw std::invalid_argument("contract: n must be >= 1");
    if (static_cast<size_t>(n) + 1 > seq.points.size())
        throw std::invalid_argument("contract: sequence has only " +
                                    std::to_string(seq.points.size()) + " points, need n+1=" +
                                    std::to_string(n + 1));
    ContractedNodeSet cs;
    cs.n = n;
    cs.alpha = seq.weight->alpha;
    const double f = seq.weight->contraction_factor(n);
    cs.nodes.reserve(n + 1);
    for (int j = 0; j <= n; ++j) cs.nodes.push_back(f * seq.points[j]);
    return cs;
}

DiscreteMeasure empirical_measure(const ContractedNodeSet& nodes, std::optional<int> excluded_index) {
    const int n = nodes.n;
    DiscreteMeasure m;
    if (!excluded_index) {
        m.atoms = nodes.nodes;
        m.masses.assign(n + 1, 1.0 / (n + 1));
        return m;
    }
    const int k = *excluded_index;
    if (k < 0 || k > n)
        throw std::invalid_argument("empirical_measure: excluded index " + std::to_string(k) +
                                    " out of range [0," + std::to_string(n) + "]");
    m.atoms.reserve(n);
    for (int j = 0; j <= n; ++j)
        if (j != k) m.atoms.push_back(nodes.nodes[j]);
    m.masses.assign(n, 1.0 / n);
    return m;
}

}  // namespace wleja
