#pragma once

#include <functional>
#include <vector>

namespace wleja {

// Gauss-Legendre rule on [-1,1]; nodes/weights computed once per order and cached.
struct GLRule {
    std::vector<double> x;
    std::vector<double> w;
};

const GLRule& gauss_legendre(int order);

// integral of f over [a,b] with a single rule of the given order
double integrate_gl(const std::function<double(double)>& f, double a, double b, int order);

// Composite rule: panels uniform over [a,b], fixed order per panel, panel count
// doubled until successive estimates agree to tol (absolute-or-relative mix).
// Throws numerical_error if not converged by max_panels.
double integrate_doubling(const std::function<double(double)>& f, double a, double b,
                          int order, double tol, int max_panels = 1 << 15);

}  // namespace wleja
