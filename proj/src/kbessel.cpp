#include "hyperg/kbessel.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperg/gamma.hpp"

namespace hyperg::specfun {

namespace {

// trapezoid sum of exp(-x cosh u) cosh(alpha u) over u = 0, h, 2h, ...
// (half weight at u = 0); the integrand is even in u.  abs_sum tracks the
// same sum with |f| terms: for purely imaginary order the value passes
// through zeros and a purely relative convergence test would be vacuous.
struct TrapSum {
    cplx sum;
    double abs_sum;
};

TrapSum cosh_trapezoid(cplx alpha, double x, double h) {
    double are = std::abs(alpha.real());
    cplx sum = 0.5 * std::exp(cplx(-x, 0.0)); // u = 0 term
    double abs_sum = std::abs(sum);
    double peak = abs_sum;
    for (int k = 1;; ++k) {
        double u = h * double(k);
        double decay = -x * std::cosh(u);
        if (decay + are * u < -746.0) break; // underflow-dead
        cplx f = std::exp(cplx(decay, 0.0)) * std::cosh(alpha * u);
        sum += f;
        double af = std::abs(f);
        abs_sum += af;
        if (af > peak) peak = af;
        if (af < 1e-18 * peak && x * std::sinh(u) > are) break;
        if (k > 200000)
            throw ConvergenceError("ktilde: trapezoid did not terminate");
    }
    return {h * sum, h * abs_sum};
}

} // namespace

cplx ktilde(cplx alpha, double x, const PrecisionPolicy& policy, bool* warn) {
    policy.validate();
    if (!(x > 0.0))
        throw std::domain_error("ktilde: x must be > 0");
    if (warn) *warn = (x < 0.01);

    double h = 0.25;
    TrapSum val = cosh_trapezoid(alpha, x, h);
    double tol = std::max(0.5 * policy.target_rel_err, 5e-15);
    for (int level = 0; level < 4; ++level) {
        h *= 0.5;
        TrapSum next = cosh_trapezoid(alpha, x, h);
        double change = std::abs(next.sum - val.sum);
        val = next;
        double scale = std::max(std::abs(val.sum), 1e-6 * val.abs_sum);
        if (change <= tol * scale) break;
        if (level == 3 && change > 100.0 * tol * scale)
            throw ConvergenceError("ktilde: quadrature did not converge");
    }
    return std::pow(cplx(0.5 * x, 0.0), -alpha) * val.sum;
}

cplx ktilde_derivative(cplx alpha, double x, const PrecisionPolicy& policy) {
    return -0.5 * x * ktilde(alpha + 1.0, x, policy);
}

cplx ktilde_asym0(cplx alpha, double x) {
    if (alpha.real() > 0.0)
        return 0.5 * gamma(alpha) * std::pow(cplx(0.5 * x, 0.0), -2.0 * alpha);
    if (alpha == cplx(0.0, 0.0))
        return cplx(-std::log(0.5 * x), 0.0);
    if (alpha.real() < 0.0)
        return 0.5 * gamma(-alpha);
    throw std::domain_error("ktilde_asym0: purely imaginary nonzero order has no single leading form");
}

} // namespace hyperg::specfun
