// Timing comparison of the threaded scan kernels against the serial reference
// path, plus the dominant end-to-end stages. Reports measurements only; the
// bitwise agreement of the two paths is enforced by the determinism tests.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wleja/interp.hpp"
#include "wleja/leja.hpp"
#include "wleja/potential.hpp"
#include "wleja/spacing.hpp"

using namespace wleja;
using clock_type = std::chrono::steady_clock;

namespace {

double run_ms(const std::function<void()>& f) {
    const auto t0 = clock_type::now();
    f();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-34s %10.1f %10.1f %8.2fx\n", name.c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 150;
    FreudWeight fw(2.0);

#ifdef _OPENMP
    std::printf("threads available: %d\n", omp_get_max_threads());
#else
    std::printf("compiled without thread support\n");
#endif
    std::printf("degree: %d\n\n", n);
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial/ms", "threads/ms", "speedup");

    double ser, par;
    LejaSequence seq;

    ser = run_ms([&] { seq = generate_sequence(fw, n, 0.0, 0.05, false); });
    par = run_ms([&] { seq = generate_sequence(fw, n, 0.0, 0.05, true); });
    row("sequence generation", ser, par);

    // the growth-constant scan has no serial switch; vary the thread count
#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    ser = run_ms([&] { lebesgue_constant(seq, n); });
#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif
    par = run_ms([&] { lebesgue_constant(seq, n); });
    row("growth-constant scan", ser, par);

    auto cs = contract(seq, n);
#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    ser = run_ms([&] {
        for (int k = 0; k <= n; k += 4) numerator_limit(cs, fw, k);
    });
#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif
    par = run_ms([&] {
        for (int k = 0; k <= n; k += 4) numerator_limit(cs, fw, k);
    });
    row("numerator sweep (k step 4)", ser, par);

#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    ser = run_ms([&] { bernstein_check(seq, fw, n); });
#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif
    par = run_ms([&] { bernstein_check(seq, fw, n); });
    row("derivative-ratio grid", ser, par);

    return 0;
}
