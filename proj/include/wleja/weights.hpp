#pragma once

#include <string>

namespace wleja {

// The weight family w(x) = exp(-|x|^alpha) on the real line, alpha > 1, with its
// external field Q(x) = |x|^alpha and the derived scale constants: the radius a_n
// on which the sup of a weighted degree-n polynomial is attained, the contraction
// factor n^{-1/alpha}, and the derivative scale function phi_n used by the
// Bernstein-type diagnostic.
struct FreudWeight {
    double alpha;
    double support_radius_c;  // a_n * n^{-1/alpha}, independent of n; cached as a_1

    explicit FreudWeight(double alpha_);

    double weight_value(double x) const;     // w(x) in (0,1]
    double external_field(double x) const;   // Q(x) = |x|^alpha
    double field_derivative(double x) const; // Q'(x) = alpha*|x|^{alpha-1}*sgn(x)
    double log_weight(double x) const;       // -Q(x)

    // Radius of the sup interval for weighted degree-n polynomials; closed form
    // a_n = [n*sqrt(pi)*Gamma(alpha/2+1) / (alpha*Gamma((alpha+1)/2))]^(1/alpha),
    // validated against mrs_number_quadrature.
    double mrs_number(int n) const;

    double contraction_factor(int n) const;  // n^{-1/alpha}

    double zeta_n(int n) const;              // (alpha*n)^{-2/3}

    // phi_n(t) = |t-a_{2n}|*|t+a_{2n}| / (n*sqrt((|t+a_n|-a_n*z)(|t-a_n|+a_n*z))),
    // z = zeta_n(n). Throws std::domain_error where the radicand is not positive.
    double phi_n(int n, double t) const;
};

// Root of n - (1/pi) * int_{-a}^{a} x Q'(x)/sqrt(a^2-x^2) dx, solved independently
// of the closed form: substitution x = a*sin(theta) removes the endpoint
// singularity, panel-doubled Gauss-Legendre evaluates the integral, and the root
// is bracketed in [1e-6, 1e6] then refined by bisection with a secant polish to
// relative tolerance tol. Exists as the validation path for mrs_number.
double mrs_number_quadrature(const FreudWeight& fw, int n, double tol);

}  // namespace wleja
