#include "wleja/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "wleja/common.hpp"
#include "wleja/quadrature.hpp"

namespace wleja {

static void require_finite(double x, const char* op) {
    if (!std::isfinite(x)) throw std::domain_error(std::string(op) + ": non-finite argument");
}

FreudWeight::FreudWeight(double alpha_) : alpha(alpha_), support_radius_c(0.0) {
    if (!(alpha > 1.0))
        throw std::invalid_argument("FreudWeight: alpha must exceed 1, got " + fmt17(alpha_));
    support_radius_c = mrs_number(1);  // a_n * n^{-1/alpha} = a_1 for every n
}

double FreudWeight::weight_value(double x) const {
    require_finite(x, "weight_value");
    return std::exp(-std::pow(std::fabs(x), alpha));
}

double FreudWeight::external_field(double x) const {
    require_finite(x, "external_field");
    return std::pow(std::fabs(x), alpha);
}

double FreudWeight::field_derivative(double x) const {
    require_finite(x, "field_derivative");
    if (x == 0.0) return 0.0;
    return alpha * std::pow(std::fabs(x), alpha - 1.0) * (x > 0.0 ? 1.0 : -1.0);
}

double FreudWeight::log_weight(double x) const { return -external_field(x); }

double FreudWeight::mrs_number(int n) const {
    if (n < 1) throw std::invalid_argument("mrs_number: n must be >= 1");
    const double num = n * std::sqrt(std::acos(-1.0)) * std::tgamma(alpha / 2.0 + 1.0);
    const double den = alpha * std::tgamma((alpha + 1.0) / 2.0);
    return std::pow(num / den, 1.0 / alpha);
}

double FreudWeight::contraction_factor(int n) const {
    if (n < 1) throw std::invalid_argument("contraction_factor: n must be >= 1");
    return std::pow(static_cast<double>(n), -1.0 / alpha);
}

double FreudWeight::zeta_n(int n) const {
    if (n < 1) throw std::invalid_argument("zeta_n: n must be >= 1");
    return std::pow(alpha * n, -2.0 / 3.0);
}

double FreudWeight::phi_n(int n, double t) const {
    require_finite(t, "phi_n");
    const double an = mrs_number(n);
    const double a2n = mrs_number(2 * n);
    const double az = an * zeta_n(n);
    const double f1 = std::fabs(t + an) - az;
    const double f2 = std::fabs(t - an) + az;
    if (f1 <= 0.0)
        throw std::domain_error("phi_n: factor |t+a_n|-a_n*zeta_n = " + fmt17(f1) +
                                " is not positive at t=" + fmt17(t));
    if (f2 <= 0.0)
        throw std::domain_error("phi_n: factor |t-a_n|+a_n*zeta_n = " + fmt17(f2) +
                                " is not positive at t=" + fmt17(t));
    return std::fabs(t - a2n) * std::fabs(t + a2n) / (n * std::sqrt(f1 * f2));
}

double mrs_number_quadrature(const FreudWeight& fw, int n, double tol) {
    if (n < 1) throw std::invalid_argument("mrs_number_quadrature: n must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("mrs_number_quadrature: tol must be > 0");
    const double half_pi = 0.5 * std::acos(-1.0);

    // g(a) = n - (1/pi) * int_{-a}^{a} x Q'(x)/sqrt(a^2-x^2) dx
    //      = n - (2/pi) * int_0^{pi/2} a*sin(th) * Q'(a*sin(th)) dth   (x = a*sin(th))
    auto g = [&](double a) {
        auto integrand = [&](double th) {
            const double x = a * std::sin(th);
            return x * fw.field_derivative(x);
        };
        const double I = integrate_doubling(integrand, 0.0, half_pi, 64, tol / 10.0);
        return n - (2.0 / std::acos(-1.0)) * I;
    };

    double lo = 1e-6, hi = 1e6;
    double glo = g(lo), ghi = g(hi);
    if (!(glo > 0.0 && ghi < 0.0))
        throw numerical_error("mrs_number_quadrature: failed to bracket a root in [1e-6,1e6]; g(lo)=" +
                              fmt17(glo) + " g(hi)=" + fmt17(ghi));
    while ((hi - lo) > tol * lo) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (gm > 0.0) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
            ghi = gm;
        }
    }
    // one secant polish inside the final bracket
    double root = (glo != ghi) ? lo + glo * (hi - lo) / (glo - ghi) : 0.5 * (lo + hi);
    if (!(root >= lo && root <= hi)) root = 0.5 * (lo + hi);
    return root;
}

}  // namespace wleja
