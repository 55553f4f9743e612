#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wleja/leja.hpp"
#include "wleja/potential.hpp"
#include "wleja/weights.hpp"

using namespace wleja;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("equilibrium measure, quadratic field") {
    auto eq = build_equilibrium_measure(2.0);
    CHECK(eq.alpha == 2.0);
    CHECK(eq.support_radius == doctest::Approx(1.0).epsilon(1e-14));

    // density is the semicircle (2/pi)sqrt(1-t^2)
    CHECK(eq.density(0.0) == doctest::Approx(2.0 / kPi).epsilon(1e-12));
    CHECK(eq.density(0.6) == doctest::Approx((2.0 / kPi) * 0.8).epsilon(1e-12));
    CHECK(eq.density(1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eq.density(-0.6) == eq.density(0.6));
    CHECK_THROWS_AS(eq.density(1.0000001), std::domain_error);
    CHECK_THROWS_AS(eq.density(-2.0), std::domain_error);

    // closed-form cross-check of the normalization: alpha/(pi*c)
    CHECK(eq.normalization == doctest::Approx(2.0 / kPi).epsilon(1e-10));

    // unit mass and CDF anchors
    CHECK(eq.cdf(1.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(eq.cdf(0.0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(eq.cdf(-1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eq.cdf(-5.0) == 0.0);
    CHECK(eq.cdf(5.0) == 1.0);
    // semicircle CDF at 0.5: 1/2 + (t sqrt(1-t^2) + asin t)/pi
    const double F = 0.5 + (0.5 * std::sqrt(0.75) + std::asin(0.5)) / kPi;
    CHECK(eq.cdf(0.5) == doctest::Approx(F).epsilon(1e-10));
}

TEST_CASE("robin constant and minimal energy across exponents") {
    // frozen from an independent high-precision quadrature run
    CHECK(robin_constant(2.0) == doctest::Approx(1.1931471805599453).epsilon(1e-12));
    CHECK(energy(2.0) == doctest::Approx(1.4431471805599453).epsilon(1e-12));
    CHECK(robin_constant(1.5) == doctest::Approx(1.2393001470813698).epsilon(1e-9));
    CHECK(robin_constant(3.0) == doctest::Approx(1.1070020056501088).epsilon(1e-9));
    CHECK(robin_constant(4.0) == doctest::Approx(1.0445134575869864).epsilon(1e-9));

    CHECK(std::exp(-robin_constant(2.0)) ==
          doctest::Approx(0.30326532985631671).epsilon(1e-10));
    CHECK(std::exp(-energy(2.0)) == doctest::Approx(0.23618327637050735).epsilon(1e-10));

    // the field moment of the equilibrium measure is 1/(2 alpha); the energy
    // integral must reproduce it on top of the Robin constant
    for (double alpha : {1.5, 2.0, 3.0, 4.0}) {
        auto eq = build_equilibrium_measure(alpha);
        CHECK(eq.energy - eq.robin_constant ==
              doctest::Approx(0.5 / alpha).epsilon(1e-11));
    }
}

TEST_CASE("variational identity on the support") {
    for (double alpha : {1.5, 2.0, 3.0, 4.0}) {
        auto eq = build_equilibrium_measure(alpha);
        CHECK(variational_identity_sup(eq) <= 1e-8);
    }
    // denser sampling stays flat too
    auto eq2 = build_equilibrium_measure(2.0);
    CHECK(variational_identity_sup(eq2, 201) <= 1e-8);
}

TEST_CASE("quadrature routes with different panel families agree") {
    auto coarse = build_equilibrium_measure(3.0, 30, 12);
    auto fine = build_equilibrium_measure(3.0, 48, 24);
    CHECK(coarse.robin_constant == doctest::Approx(fine.robin_constant).epsilon(1e-10));
    CHECK(coarse.energy == doctest::Approx(fine.energy).epsilon(1e-10));
    CHECK(coarse.cdf(0.3) == doctest::Approx(fine.cdf(0.3)).epsilon(1e-10));
}

TEST_CASE("logarithmic potential of the continuous measure") {
    auto eq = build_equilibrium_measure(2.0);
    // U(0) is the Robin constant since Q(0) = 0
    CHECK(log_potential(eq, 0.0) == doctest::Approx(eq.robin_constant).epsilon(1e-12));
    // far away the measure looks like a unit point mass at the origin
    CHECK(std::fabs(log_potential(eq, 10.0) + std::log(10.0)) <= 0.01);
    CHECK(log_potential(eq, 10.0) == doctest::Approx(log_potential(eq, -10.0)).epsilon(1e-10));
    // continuity across the support edge
    CHECK(std::fabs(log_potential(eq, 0.999) - log_potential(eq, 1.001)) <= 1e-2);
    CHECK(std::fabs(log_potential(eq, 0.9999999) - log_potential(eq, 1.0000001)) <= 1e-5);
}

TEST_CASE("logarithmic potential of discrete measures") {
    DiscreteMeasure m;
    m.atoms = {-1.0, 1.0};
    m.masses = {0.5, 0.5};
    CHECK(log_potential(m, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(log_potential(m, 3.0) == doctest::Approx(-1.5 * std::log(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(log_potential(m, 1.0), std::domain_error);
}

TEST_CASE("scaled node-set functional, closed forms") {
    FreudWeight fw(2.0);
    // two weighted points {-1/2, 1/2}: exp(-1/6)
    CHECK(fekete_functional({-0.5, 0.5}, &fw) ==
          doctest::Approx(std::exp(-1.0 / 6.0)).epsilon(1e-13));
    // unweighted pairs and triples
    CHECK(fekete_functional({0.0, 1.0}, nullptr) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fekete_functional({-1.0, 0.0, 1.0}, nullptr) ==
          doctest::Approx(std::pow(2.0, 1.0 / 6.0)).epsilon(1e-13));

    CHECK_THROWS_AS(fekete_functional({0.5}, &fw), std::invalid_argument);
    CHECK_THROWS_AS(fekete_functional({0.5, 0.5}, &fw), std::invalid_argument);
}

TEST_CASE("normalized numerator and denominator at unit degree") {
    FreudWeight fw(2.0);
    ContractedNodeSet cs;
    cs.n = 1;
    cs.alpha = 2.0;
    cs.nodes = {0.0, 0.70710678118654752};

    // k=1: sup_t e^{-t^2}|t| = e^{-1/2}/sqrt(2), attained at +-1/sqrt(2)
    const double closed = std::exp(-0.5) / std::sqrt(2.0);
    CHECK(numerator_limit(cs, fw, 1) == doctest::Approx(closed).epsilon(1e-9));
    // k=0: recorded from a dense-grid brute-force evaluation
    CHECK(numerator_limit(cs, fw, 0) == doctest::Approx(0.94521319775334810).epsilon(1e-6));

    // denominators are plain products
    CHECK(denominator_value(cs, fw, 0) ==
          doctest::Approx(0.70710678118654752).epsilon(1e-14));
    CHECK(denominator_value(cs, fw, 1) == doctest::Approx(closed).epsilon(1e-14));

    CHECK_THROWS_AS(numerator_limit(cs, fw, 2), std::invalid_argument);
    CHECK_THROWS_AS(denominator_value(cs, fw, -1), std::invalid_argument);
}

TEST_CASE("gap-split factorization multiplies back to the denominator") {
    FreudWeight fw(2.0);
    auto seq = generate_sequence(fw, 25, 0.0);
    auto cs = contract(seq, 25);
    for (double delta : {0.5, 0.25, 0.1, 0.05}) {
        for (int k = 0; k <= 25; k += 5) {
            auto [a1, a2] = split_products(cs, fw, k, delta);
            const double den = denominator_value(cs, fw, k);
            CHECK(std::fabs(a1 * a2 - den) <= 1e-12 * std::max(1.0, den));
        }
    }
    // all gaps below a huge delta: a1 carries only the weight factor
    auto [b1, b2] = split_products(cs, fw, 0, 1e9);
    CHECK(b1 == doctest::Approx(fw.weight_value(cs.nodes[0])).epsilon(1e-13));
    CHECK(b1 * b2 == doctest::Approx(denominator_value(cs, fw, 0)).epsilon(1e-12));
    CHECK_THROWS_AS(split_products(cs, fw, 0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(split_products(cs, fw, 0, -1.0), std::invalid_argument);
}

TEST_CASE("sup distance between empirical and equilibrium CDFs") {
    auto eq = build_equilibrium_measure(2.0);
    DiscreteMeasure m;
    m.atoms = {-0.5, 0.5};
    m.masses = {0.5, 0.5};
    // exact value via the semicircle CDF at the atoms, using both one-sided limits
    const double F = 0.5 - (0.5 * std::sqrt(0.75) + std::asin(0.5)) / kPi;  // CDF(-1/2)
    const double expected = 0.5 - F;
    CHECK(cdf_distance(m, eq) == doctest::Approx(expected).epsilon(1e-8));

    // a point mass at the origin is distance 1/2 away
    DiscreteMeasure p;
    p.atoms = {0.0};
    p.masses = {1.0};
    CHECK(cdf_distance(p, eq) == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("two routes through the discrete potential agree identically") {
    FreudWeight fw(2.0);
    auto seq = generate_sequence(fw, 30, 0.0);
    auto cs = contract(seq, 30);
    for (int k : {0, 7, 30}) {
        for (double x : {0.31, -0.82, 1.7, 0.05}) {
            CHECK(discrete_log_polynomial_identity_check(cs, fw, k, x) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(discrete_log_polynomial_identity_check(cs, fw, 0, cs.nodes[5]),
                    std::domain_error);
}
