#ifndef HYPERG_HYP2F1_HPP
#define HYPERG_HYP2F1_HPP

#include <complex>

#include "hyperg/gamma.hpp"
#include "hyperg/precision.hpp"

namespace hyperg::specfun {

// Gauss hypergeometric function 2F1(a,b;c;z) for real z <= 0 and complex
// parameters.  Strategy: terminating sum when a or b is a non-positive
// integer; direct series for |z| <= 1/2; Pfaff map w = z/(z-1) for
// moderate negative z; two-branch inversion in 1/z for large |z| when
// a - b stays away from the integers (the inversion degenerates there),
// otherwise an extended-budget Pfaff sum.
cplx hyp2f1(cplx a, cplx b, cplx c, double z,
            const PrecisionPolicy& policy = default_policy());

// d/dz 2F1(a,b;c;z) = (a b / c) 2F1(a+1,b+1;c+1;z)
cplx hyp2f1_derivative(cplx a, cplx b, cplx c, double z,
                       const PrecisionPolicy& policy = default_policy());

// Coefficients of the large-|z| expansion
//   2F1(a,b;c;z) = A (-z)^{-a} 2F1(a,a-c+1;a-b+1;1/z)
//               + B (-z)^{-b} 2F1(b,b-c+1;b-a+1;1/z)
// A = Gamma(b-a)Gamma(c)/(Gamma(b)Gamma(c-a)), B likewise with a,b swapped.
struct ConnectionCoeffs {
    cplx A;
    cplx B;
};
ConnectionCoeffs hyp2f1_connection_coeffs(cplx a, cplx b, cplx c);

// Jacobi polynomial P_n^(alpha,beta)(z), finite hypergeometric sum.
double jacobi_poly(int n, double alpha, double beta, double z);

// Degree of the terminating series if a is within 1e-12 of a non-positive
// integer, else -1.
int terminating_degree(cplx a);

} // namespace hyperg::specfun

#endif
