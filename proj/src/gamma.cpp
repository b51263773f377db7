#include "hyperg/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperg::specfun {

namespace {

// Lanczos coefficients, g = 7, 9 terms.
const double lanczos_g = 7.0;
const double lanczos_p[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

const double pi = 3.14159265358979323846;

cplx lanczos_core(cplx z) {
    // valid for Re z >= 0.5; z here is the argument of Gamma
    z -= 1.0;
    cplx x = lanczos_p[0];
    for (int i = 1; i < 9; ++i)
        x += lanczos_p[i] / (z + cplx(double(i), 0.0));
    cplx t = z + lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

} // namespace

bool near_nonpositive_integer(cplx z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    double r = z.real();
    if (r > 0.5) return false;
    return std::abs(r - std::round(r)) <= tol;
}

cplx gamma(cplx z) {
    if (near_nonpositive_integer(z, 0.0))
        throw std::domain_error("gamma: pole at non-positive integer");
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        return pi / (std::sin(pi * z) * lanczos_core(1.0 - z));
    }
    return lanczos_core(z);
}

cplx rgamma(cplx z) {
    if (near_nonpositive_integer(z, 0.0))
        return cplx(0.0, 0.0);
    if (z.real() < 0.5)
        return std::sin(pi * z) * lanczos_core(1.0 - z) / pi;
    return 1.0 / lanczos_core(z);
}

cplx log_gamma(cplx z) {
    if (near_nonpositive_integer(z, 0.0))
        throw std::domain_error("log_gamma: pole at non-positive integer");
    if (z.real() < 0.5) {
        // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
        return std::log(cplx(pi, 0.0)) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    cplx zm = z - 1.0;
    cplx x = lanczos_p[0];
    for (int i = 1; i < 9; ++i)
        x += lanczos_p[i] / (zm + cplx(double(i), 0.0));
    cplx t = zm + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (zm + 0.5) * std::log(t) - t + std::log(x);
}

} // namespace hyperg::specfun
