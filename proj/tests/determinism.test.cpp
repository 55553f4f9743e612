#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <vector>

#include "wleja/interp.hpp"
#include "wleja/leja.hpp"
#include "wleja/potential.hpp"
#include "wleja/spacing.hpp"

using namespace wleja;

namespace {

struct PipelineResult {
    std::vector<double> points;
    double lebesgue = 0.0;
    double numerator = 0.0;
    double bernstein = 0.0;

    bool operator==(const PipelineResult& o) const {
        return points == o.points && lebesgue == o.lebesgue && numerator == o.numerator &&
               bernstein == o.bernstein;
    }
};

PipelineResult run_pipeline(bool parallel) {
    FreudWeight fw(2.0);
    PipelineResult r;
    auto seq = generate_sequence(fw, 40, 0.0, 0.05, parallel);
    r.points = seq.points;
    r.lebesgue = lebesgue_constant(seq, 40).constant;
    r.numerator = numerator_limit(contract(seq, 40), fw, 3);
    r.bernstein = bernstein_check(seq, fw, 40);
    return r;
}

}  // namespace

TEST_CASE("rerun with identical inputs is bitwise identical") {
    auto a = run_pipeline(true);
    auto b = run_pipeline(true);
    CHECK(a == b);
}

TEST_CASE("threaded and serial step selection agree bitwise") {
    FreudWeight fw(2.0);
    auto par = generate_sequence(fw, 60, 0.0, 0.05, true);
    auto ser = generate_sequence(fw, 60, 0.0, 0.05, false);
    REQUIRE(par.points.size() == ser.points.size());
    for (size_t i = 0; i < par.points.size(); ++i) CHECK(par.points[i] == ser.points[i]);
    for (size_t i = 0; i < par.objective_values.size(); ++i)
        CHECK(par.objective_values[i] == ser.objective_values[i]);

    auto upar = generate_unweighted(40, 1.0, -1.0, 1.0, true);
    auto user = generate_unweighted(40, 1.0, -1.0, 1.0, false);
    for (size_t i = 0; i < upar.points.size(); ++i) CHECK(upar.points[i] == user.points[i]);
}

#ifdef _OPENMP
TEST_CASE("results do not depend on the thread count") {
    const int saved = omp_get_max_threads();

    omp_set_num_threads(1);
    auto one = run_pipeline(true);
    omp_set_num_threads(4);
    auto four = run_pipeline(true);
    omp_set_num_threads(3);
    auto three = run_pipeline(true);
    omp_set_num_threads(saved);

    CHECK(one == four);
    CHECK(one == three);
}
#endif

TEST_CASE("pseudo-random probe checks are reproducible by seed") {
    FreudWeight fw(2.0);
    auto seq = generate_sequence(fw, 20, 0.0);
    CHECK(bernstein_fd_check(seq, fw, 20, 25, 42) == bernstein_fd_check(seq, fw, 20, 25, 42));
    CHECK(bernstein_fd_check(seq, fw, 20, 25, 42) != bernstein_fd_check(seq, fw, 20, 25, 43));
}
