#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "wleja/interp.hpp"
#include "wleja/leja.hpp"
#include "wleja/weights.hpp"

using namespace wleja;

namespace {

LejaSequence manual_weighted(double alpha, std::vector<double> pts) {
    LejaSequence seq;
    seq.weight.emplace(alpha);
    seq.points = std::move(pts);
    seq.objective_values.assign(seq.points.size(), 0.0);
    seq.x0 = seq.points.front();
    return seq;
}

LejaSequence manual_unweighted(std::vector<double> pts) {
    LejaSequence seq;
    seq.points = std::move(pts);
    seq.objective_values.assign(seq.points.size(), 0.0);
    seq.x0 = seq.points.front();
    return seq;
}

// direct product-form Lagrange basis evaluation, the slow reference path
double direct_lagrange(const std::vector<double>& nodes, size_t k, double x) {
    double v = 1.0;
    for (size_t j = 0; j < nodes.size(); ++j) {
        if (j == k) continue;
        v *= (x - nodes[j]) / (nodes[k] - nodes[j]);
    }
    return v;
}

}  // namespace

TEST_CASE("basis precompute") {
    FreudWeight fw(2.0);
    std::vector<double> nodes{0.0, 1.0, -0.5};
    auto pre = precompute_basis(nodes, &fw);
    REQUIRE(pre.nodes.size() == 3);
    // k=0: |0-1|*|0+0.5| = 0.5 -> log 0.5
    CHECK(pre.log_denominators[0] == doctest::Approx(std::log(0.5)).epsilon(1e-14));
    // k=0: (0-1)*(0+0.5) < 0
    CHECK(pre.denominator_signs[0] == -1);
    // k=1: (1-0)*(1+0.5) > 0
    CHECK(pre.denominator_signs[1] == 1);
    CHECK(pre.log_node_weights[0] == 0.0);
    CHECK(pre.log_node_weights[1] == doctest::Approx(-1.0).epsilon(1e-15));

    auto unw = precompute_basis(nodes, nullptr);
    for (double lw : unw.log_node_weights) CHECK(lw == 0.0);

    CHECK_THROWS_AS(precompute_basis({0.5, 0.5}, nullptr), std::invalid_argument);
    CHECK_THROWS_AS(precompute_basis({}, nullptr), std::invalid_argument);
}

TEST_CASE("pointwise weighted basis sum") {
    FreudWeight fw(2.0);
    // single node at 0: sum is w(x)/w(0) = e^{-x^2}
    auto pre = precompute_basis({0.0}, &fw);
    CHECK(lebesgue_function(pre, &fw, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-13));

    // two unweighted nodes {1,-1} at 0: |1/2| + |-1/2| = 1
    auto pre2 = precompute_basis({1.0, -1.0}, nullptr);
    CHECK(lebesgue_function(pre2, nullptr, 0.0) == doctest::Approx(1.0).epsilon(1e-13));

    // three unweighted nodes {1,-1,0} at 0.5: piecewise closed form x+1-x^2
    auto pre3 = precompute_basis({1.0, -1.0, 0.0}, nullptr);
    CHECK(lebesgue_function(pre3, nullptr, 0.5) == doctest::Approx(1.25).epsilon(1e-12));

    // exactly 1 at the nodes, and at probes within the snapping band
    for (double xn : {1.0, -1.0, 0.0}) CHECK(lebesgue_function(pre3, nullptr, xn) == 1.0);
    CHECK(lebesgue_function(pre3, nullptr, 1e-15) == 1.0);

    CHECK_THROWS_AS(lebesgue_function(pre3, nullptr, std::numeric_limits<double>::infinity()),
                    std::domain_error);
    CHECK_THROWS_AS(lebesgue_function(pre3, nullptr, std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);
}

TEST_CASE("supremum scan, unweighted closed form") {
    auto seq = manual_unweighted({1.0, -1.0, 0.0});
    auto rep = lebesgue_constant(seq, 2);
    CHECK(rep.n == 2);
    CHECK(std::fabs(rep.constant - 1.25) <= 1e-6);
    CHECK(std::fabs(std::fabs(rep.argmax_location) - 0.5) <= 1e-4);
    CHECK(rep.nth_root == doctest::Approx(std::sqrt(rep.constant)).epsilon(1e-14));
    CHECK(rep.grid_size > 0);
}

TEST_CASE("supremum scan, single weighted node") {
    auto seq = manual_weighted(2.0, {0.0});
    auto rep = lebesgue_constant(seq, 0);
    CHECK(rep.constant == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(rep.argmax_location) <= 1e-6);
    CHECK(rep.nth_root == rep.constant);
}

TEST_CASE("supremum scan, two weighted nodes against a recorded brute-force value") {
    auto seq = manual_weighted(2.0, {0.0, 0.70710678118654752});
    auto rep = lebesgue_constant(seq, 1);
    // recorded from a dense-grid brute-force evaluation performed independently
    CHECK(std::fabs(rep.constant - 2.2664479083360217) <= 1e-6 * 2.2664479083360217);
    CHECK(std::fabs(rep.argmax_location - (-0.58611432454088505)) <= 1e-4);
    CHECK(rep.nth_root == rep.constant);
}

TEST_CASE("supremum scan validation") {
    auto seq = manual_unweighted({1.0, -1.0, 0.0});
    CHECK_THROWS_AS(lebesgue_constant(seq, 3), std::invalid_argument);
    CHECK_THROWS_AS(lebesgue_constant(seq, -1), std::invalid_argument);
    GridSpec coarse;
    coarse.probes_per_interval = 3;
    CHECK_THROWS_AS(lebesgue_constant(seq, 2, coarse), std::invalid_argument);
}

TEST_CASE("constant is at least 1 and the guard band stays below it") {
    FreudWeight fw(2.0);
    auto seq = generate_sequence(fw, 30, 0.0);
    for (int n : {1, 5, 10, 20, 30}) {
        auto rep = lebesgue_constant(seq, n);
        CHECK(rep.constant >= 1.0);
        CHECK(std::isfinite(rep.constant));
        const double an = fw.mrs_number(n);
        CHECK(std::fabs(rep.argmax_location) <= an * (1.0 + seq.margin));
        // band edge value strictly below the reported sup
        std::vector<double> nodes(seq.points.begin(), seq.points.begin() + n + 1);
        auto pre = precompute_basis(nodes, &fw);
        CHECK(lebesgue_function(pre, &fw, an * (1.0 + seq.margin)) < rep.constant);
        CHECK(lebesgue_function(pre, &fw, -an * (1.0 + seq.margin)) < rep.constant);
    }
}

TEST_CASE("partition of unity of the plain basis") {
    FreudWeight fw(2.0);
    auto seq = generate_sequence(fw, 12, 0.0);
    auto pre = precompute_basis(seq.points, &fw);
    const size_t m = seq.points.size();
    for (int i = 0; i <= 40; ++i) {
        const double x = -2.0 + 4.0 * i / 40.0;
        double s = 0.0;
        for (size_t k = 0; k < m; ++k) {
            std::vector<double> unit(m, 0.0);
            unit[k] = 1.0;
            s += interpolate(pre, unit, x);
        }
        CHECK(std::fabs(s - 1.0) <= 1e-10);
    }
}

TEST_CASE("barycentric form agrees with the direct product form") {
    FreudWeight fw(2.0);
    auto seq = generate_sequence(fw, 20, 0.0);
    auto pre = precompute_basis(seq.points, &fw);
    const size_t m = seq.points.size();
    std::mt19937 rng(991);
    std::uniform_real_distribution<double> U(-4.0, 4.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double x = U(rng);
        for (size_t k = 0; k < m; k += 5) {
            std::vector<double> unit(m, 0.0);
            unit[k] = 1.0;
            const double bary = interpolate(pre, unit, x);
            const double direct = direct_lagrange(seq.points, k, x);
            CHECK(std::fabs(bary - direct) <= 1e-9 * std::max(1.0, std::fabs(direct)));
        }
    }
}

TEST_CASE("interpolation reproduces data and low-degree polynomials") {
    auto pre = precompute_basis({1.0, -1.0, 0.0}, nullptr);

    // constant function
    std::vector<double> c37(3, 3.7);
    CHECK(std::fabs(interpolate(pre, c37, 0.123) - 3.7) <= 1e-12);
    CHECK(std::fabs(interpolate(pre, c37, -0.99) - 3.7) <= 1e-12);

    // degree-2 polynomial through 3 nodes
    std::vector<double> sq{1.0, 1.0, 0.0};
    CHECK(std::fabs(interpolate(pre, sq, 0.3) - 0.09) <= 1e-12);

    // midpoint of a line
    auto pre2 = precompute_basis({1.0, -1.0}, nullptr);
    CHECK(interpolate(pre2, {2.0, 0.0}, 0.0) == doctest::Approx(1.0).epsilon(1e-14));

    // exact passthrough at nodes
    CHECK(interpolate(pre, {5.0, 7.0, 9.0}, -1.0) == 7.0);

    CHECK_THROWS_AS(interpolate(pre, {1.0, 2.0}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(interpolate(pre, c37, std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);
}

TEST_CASE("high-degree polynomial reproduction on generated nodes") {
    FreudWeight fw(2.0);
    auto seq = generate_sequence(fw, 12, 0.0);
    auto pre = precompute_basis(seq.points, &fw);
    auto f = [](double x) {
        return ((x - 0.3) * x + 2.0) * x * x - 1.5 * x + 0.25;  // degree 4
    };
    std::vector<double> fv(seq.points.size());
    for (size_t k = 0; k < fv.size(); ++k) fv[k] = f(seq.points[k]);
    for (int i = 0; i <= 60; ++i) {
        const double x = -3.0 + 6.0 * i / 60.0;
        CHECK(std::fabs(interpolate(pre, fv, x) - f(x)) <= 1e-10 * std::max(1.0, std::fabs(f(x))));
    }
}

TEST_CASE("weighted error study") {
    FreudWeight fw(2.0);

    auto flat = interpolation_error_study(fw, [](double) { return 1.0; }, {3, 6});
    for (auto& [n, e] : flat) CHECK(e <= 1e-12);

    auto cubic = interpolation_error_study(fw, [](double x) { return x * x * x; }, {3});
    CHECK(cubic[0].second <= 1e-10);

    auto runge =
        interpolation_error_study(fw, [](double x) { return 1.0 / (1.0 + x * x); }, {5, 10, 20});
    REQUIRE(runge.size() == 3);
    CHECK(runge[0].second > runge[1].second);
    CHECK(runge[1].second > runge[2].second);

    CHECK_THROWS_AS(interpolation_error_study(fw, [](double) { return 1.0; }, {0}),
                    std::invalid_argument);
}
