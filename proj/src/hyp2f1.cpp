#include "hyperg/hyp2f1.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperg::specfun {

namespace {

// |z| beyond which the Pfaff series gets too long and the 1/z inversion
// takes over (series length ~ 30*(1+|z|) terms at the Pfaff image).
const double pfaff_z_limit = 20.0;
// a-b closer than this to an integer: inversion coefficients degenerate.
const double degenerate_gap = 1e-3;

// Kahan-compensated Gauss series at real argument w, |w| < 1.
cplx gauss_series(cplx a, cplx b, cplx c, double w, double tol, int max_terms) {
    cplx sum(1.0, 0.0), comp(0.0, 0.0), term(1.0, 0.0);
    int small_streak = 0;
    for (int n = 0; n < max_terms; ++n) {
        term *= (a + double(n)) * (b + double(n)) /
                ((c + double(n)) * double(n + 1)) * w;
        cplx y = term - comp;
        cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) <= tol * std::abs(sum)) {
            if (++small_streak >= 2) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw ConvergenceError("hyp2f1: series did not converge within term budget");
}

cplx terminating_sum(int n, cplx other, cplx c, double z) {
    // 2F1(-n, other; c; z), exact finite sum
    cplx sum(1.0, 0.0), term(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
        term *= (double(k) - double(n)) * (other + double(k)) /
                ((c + double(k)) * double(k + 1)) * z;
        sum += term;
    }
    return sum;
}

} // namespace

int terminating_degree(cplx a) {
    if (std::abs(a.imag()) > 1e-12) return -1;
    double r = std::round(a.real());
    if (r > 0.0 || std::abs(a.real() - r) > 1e-12) return -1;
    return int(-r);
}

ConnectionCoeffs hyp2f1_connection_coeffs(cplx a, cplx b, cplx c) {
    ConnectionCoeffs cc;
    cc.A = gamma(b - a) * gamma(c) * rgamma(b) * rgamma(c - a);
    cc.B = gamma(a - b) * gamma(c) * rgamma(a) * rgamma(c - b);
    return cc;
}

cplx hyp2f1(cplx a, cplx b, cplx c, double z, const PrecisionPolicy& policy) {
    policy.validate();
    if (z > 0.0)
        throw std::domain_error("hyp2f1: argument must satisfy z <= 0");
    if (near_nonpositive_integer(c, 1e-12))
        throw std::domain_error("hyp2f1: c must not be a non-positive integer");

    const double tol = 0.1 * policy.target_rel_err;

    int na = terminating_degree(a);
    int nb = terminating_degree(b);
    if (na >= 0 && (nb < 0 || na <= nb)) return terminating_sum(na, b, c, z);
    if (nb >= 0) return terminating_sum(nb, a, c, z);

    cplx ab = a - b;
    double gap = std::hypot(ab.real() - std::round(ab.real()), ab.imag());

    // Cancellation in the real-axis sums grows with the parameter imaginary
    // parts: the direct sum peaks near e^{2s sqrt(-z)}, the Pfaff sum near
    // e^{2s atan(sqrt(-z))}.  Once that costs more than ~4 digits, switch to
    // the 1/(1-z) connection, whose terms stay O(1) for any z < 0.
    // (With a degenerate a-b the connection is unusable and the sums below
    // hold only to ~loss/ln10 digits, but a degenerate gap needs a-b near an
    // integer, which large imaginary parts exclude at every call site here.)
    double s_eff = std::max(std::abs(a.imag()), std::abs(b.imag()));
    double loss = z >= -0.5 ? 2.0 * s_eff * std::sqrt(-z)
                            : 2.0 * s_eff * std::atan(std::sqrt(-z));
    if (z < -0.25 && z >= -pfaff_z_limit && loss > 9.2 && gap > degenerate_gap) {
        ConnectionCoeffs cc = hyp2f1_connection_coeffs(a, b, c);
        double x = 1.0 / (1.0 - z);
        cplx fa = gauss_series(a, c - b, a - b + 1.0, x, tol, policy.series_max_terms);
        cplx fb = gauss_series(b, c - a, b - a + 1.0, x, tol, policy.series_max_terms);
        cplx omz(1.0 - z, 0.0);
        return cc.A * std::pow(omz, -a) * fa + cc.B * std::pow(omz, -b) * fb;
    }

    if (z >= -0.5)
        return gauss_series(a, b, c, z, tol, policy.series_max_terms);

    if (z >= -pfaff_z_limit) {
        // Pfaff: (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
        double w = z / (z - 1.0);
        return std::pow(cplx(1.0 - z, 0.0), -a) *
               gauss_series(a, c - b, c, w, tol, policy.series_max_terms);
    }
    if (gap > degenerate_gap) {
        ConnectionCoeffs cc = hyp2f1_connection_coeffs(a, b, c);
        double zi = 1.0 / z;
        cplx fa = gauss_series(a, a - c + 1.0, a - b + 1.0, zi, tol, policy.series_max_terms);
        cplx fb = gauss_series(b, b - c + 1.0, b - a + 1.0, zi, tol, policy.series_max_terms);
        cplx mz(-z, 0.0);
        return cc.A * std::pow(mz, -a) * fa + cc.B * std::pow(mz, -b) * fb;
    }

    // a-b nearly integral: inversion unusable, fall back to the Pfaff sum
    // with a budget matched to the geometric rate w = z/(z-1).
    double w = z / (z - 1.0);
    int need = int(-std::log(tol) / -std::log(w)) + 200;
    int budget = std::max(policy.series_max_terms, std::min(need, 500000));
    return std::pow(cplx(1.0 - z, 0.0), -a) * gauss_series(a, c - b, c, w, tol, budget);
}

cplx hyp2f1_derivative(cplx a, cplx b, cplx c, double z, const PrecisionPolicy& policy) {
    return a * b / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z, policy);
}

double jacobi_poly(int n, double alpha, double beta, double z) {
    if (n < 0) throw std::domain_error("jacobi_poly: n must be >= 0");
    // P_n^(a,b)(z) = ((a+1)_n / n!) 2F1(-n, a+b+n+1; a+1; (1-z)/2)
    double x = 0.5 * (1.0 - z);
    double sum = 1.0, term = 1.0;
    for (int k = 0; k < n; ++k) {
        term *= (double(k) - double(n)) * (alpha + beta + double(n + k + 1)) /
                ((alpha + double(k + 1)) * double(k + 1)) * x;
        sum += term;
    }
    double poch = 1.0;
    for (int k = 0; k < n; ++k) poch *= (alpha + double(k + 1)) / double(k + 1);
    return poch * sum;
}

} // namespace hyperg::specfun
