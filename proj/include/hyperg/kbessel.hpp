#ifndef HYPERG_KBESSEL_HPP
#define HYPERG_KBESSEL_HPP

#include <complex>

#include "hyperg/precision.hpp"

namespace hyperg::specfun {

using cplx = std::complex<double>;

// Renormalized K-Bessel function  Ktilde_alpha(x) = (x/2)^{-alpha} K_alpha(x)
// for complex order alpha and x > 0.  Evaluated from
//   K_alpha(x) = int_0^inf exp(-x cosh u) cosh(alpha u) du
// by the trapezoid rule on the symmetric extension (the integrand decays
// doubly exponentially), refined until the step-halving change is below
// the policy target.  Accuracy degrades below x ~ 0.01; *warn is set there
// if provided, and the x -> 0 asymptotic forms are exposed separately.
cplx ktilde(cplx alpha, double x,
            const PrecisionPolicy& policy = default_policy(),
            bool* warn = nullptr);

// d/dx Ktilde_alpha(x) = -(x/2) Ktilde_{alpha+1}(x)
cplx ktilde_derivative(cplx alpha, double x,
                       const PrecisionPolicy& policy = default_policy());

// Leading x -> 0 behaviour of Ktilde_alpha(x):
//   Gamma(alpha)/2 (x/2)^{-2 alpha}   Re alpha > 0
//   -log(x/2)                          alpha = 0
//   Gamma(-alpha)/2                    Re alpha < 0
cplx ktilde_asym0(cplx alpha, double x);

} // namespace hyperg::specfun

#endif
