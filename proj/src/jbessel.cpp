#include "hyperg/jbessel.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperg/gamma.hpp"
#include "hyperg/quadrature.hpp"

namespace hyperg::specfun {

namespace {
const double pi = 3.14159265358979323846;
}

double jbessel(double nu, double x, const PrecisionPolicy& policy) {
    policy.validate();
    if (nu < -0.5)
        throw std::domain_error("jbessel: order must satisfy nu >= -1/2");
    if (x < 0.0)
        throw std::domain_error("jbessel: x must be >= 0");
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw std::domain_error("jbessel: x = 0 diverges for nu < 0");
    }

    // closed half-integer forms, exact for all x
    if (std::abs(nu + 0.5) < 1e-14) return std::sqrt(2.0 / (pi * x)) * std::cos(x);
    if (std::abs(nu - 0.5) < 1e-14) return std::sqrt(2.0 / (pi * x)) * std::sin(x);

    if (x <= 10.0) {
        double q = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k <= policy.series_max_terms; ++k) {
            term *= -q / (double(k) * (nu + double(k)));
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum) && k > 3) break;
        }
        return sum * std::pow(0.5 * x, nu) * rgamma(cplx(nu + 1.0, 0.0)).real();
    }

    // oscillatory part
    int panels = int(x / 6.0) + 3;
    quad::Grid g = quad::uniform_panels(0.0, pi, panels, 16);
    double osc = g.integrate([&](double th) {
        return std::cos(nu * th - x * std::sin(th));
    }) / pi;

    double s = std::sin(nu * pi);
    if (std::abs(s) < 1e-15) return osc;

    double tmax = std::asinh((50.0 + 5.0 * std::abs(nu)) / x);
    quad::Grid h = quad::uniform_panels(0.0, tmax, 6, 16);
    double mono = h.integrate([&](double t) {
        return std::exp(-nu * t - x * std::sinh(t));
    });
    return osc - s / pi * mono;
}

} // namespace hyperg::specfun
