#include "wleja/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "wleja/common.hpp"

namespace wleja {

// Newton iteration on P_n with the three-term recurrence; standard construction.
static GLRule make_rule(int n) {
    GLRule r;
    r.x.resize(n);
    r.w.resize(n);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));  // Chebyshev-like initial guess
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return r;
}

const GLRule& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::mutex mtx;
    static std::map<int, GLRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int order) {
    const GLRule& r = gauss_legendre(order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < order; ++i) s += r.w[i] * f(mid + half * r.x[i]);
    return s * half;
}

double integrate_doubling(const std::function<double(double)>& f, double a, double b,
                          int order, double tol, int max_panels) {
    double prev = integrate_gl(f, a, b, order);
    for (int panels = 2; panels <= max_panels; panels *= 2) {
        double s = 0.0;
        const double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p) s += integrate_gl(f, a + p * h, a + (p + 1) * h, order);
        if (std::fabs(s - prev) <= tol * std::max(1.0, std::fabs(s))) return s;
        prev = s;
    }
    throw numerical_error("integrate_doubling: no convergence to tol=" + fmt17(tol) +
                          " within " + std::to_string(max_panels) + " panels");
}

}  // namespace wleja
