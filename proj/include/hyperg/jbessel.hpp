#ifndef HYPERG_JBESSEL_HPP
#define HYPERG_JBESSEL_HPP

#include "hyperg/precision.hpp"

namespace hyperg::specfun {

// Bessel function of the first kind, real order nu >= -1/2, x >= 0.
// Ascending series for x <= 10; for larger x the Schlaefli integral
//   J_nu(x) = (1/pi) int_0^pi cos(nu th - x sin th) dth
//           - sin(nu pi)/pi int_0^inf exp(-nu t - x sinh t) dt
// with composite Gauss panels scaled to the oscillation count.
double jbessel(double nu, double x,
               const PrecisionPolicy& policy = default_policy());

} // namespace hyperg::specfun

#endif
