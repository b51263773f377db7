#ifndef HYPERG_GAMMA_HPP
#define HYPERG_GAMMA_HPP

#include <complex>

namespace hyperg::specfun {

using cplx = std::complex<double>;

// Gamma function for complex argument, Lanczos approximation (g = 7) with
// reflection for Re z < 1/2.  Throws std::domain_error at the poles
// z = 0, -1, -2, ...
cplx gamma(cplx z);

// Reciprocal gamma 1/Gamma(z).  Entire; returns exactly 0 when z is a
// non-positive integer, so gamma-ratio formulas can absorb poles cleanly.
cplx rgamma(cplx z);

// log|Gamma(z)| + i arg, principal branch along the recursion path.
// Only needed for moderate |z|; used to form well-scaled gamma ratios.
cplx log_gamma(cplx z);

// True if z is within tol of a non-positive integer.
bool near_nonpositive_integer(cplx z, double tol = 1e-13);

} // namespace hyperg::specfun

#endif
