#ifndef HYPERG_SL_OPERATOR_HPP
#define HYPERG_SL_OPERATOR_HPP

#include <complex>
#include <functional>

#include "hyperg/precision.hpp"

namespace hyperg::sl {

using cplx = std::complex<double>;

// Parameter pair (sigma, mu) of the hypergeometric-type operator
//   D = t(1+t) d^2/dt^2 + ((mu - sigma + 2)/2 t + mu/2) d/dt
// acting on (0, inf).  sigma is either real > 0 or purely imaginary
// (Re sigma = 0); mu is a positive integer.
struct SpectralParams {
    cplx sigma;
    int mu;

    SpectralParams(cplx sigma_, int mu_) : sigma(sigma_), mu(mu_) { validate(); }
    void validate() const;
};

struct HypergeometricTriple {
    cplx a, b, c;
};

enum class EndpointClass { LimitCircle, LimitPoint };

// sqrt(lambda) on the branch 0 <= arg sqrt(lambda) < pi: positive for
// lambda > 0, i sqrt(|lambda|) for lambda < 0, upper half plane otherwise.
cplx sqrt_lambda(cplx lambda);

// lambda* = ((sigma-mu)/4)^2 - (tau/4)^2 = a b of the triple below.
cplx lambda_star(const SpectralParams& p, cplx tau);

// a = (mu - sigma + tau)/4, b = (mu - sigma - tau)/4, c = mu/2, so that
// F(t, tau) = 2F1(a, b; c; -t) satisfies D F + lambda* F = 0.
HypergeometricTriple hyper_triple(const SpectralParams& p, cplx tau);

cplx eigenfunction_F(const SpectralParams& p, cplx tau, double t,
                     const PrecisionPolicy& policy = default_policy());

// value and first two t-derivatives
struct Jet2 {
    cplx f, df, d2f;
};
Jet2 eigenfunction_F_jet(const SpectralParams& p, cplx tau, double t,
                         const PrecisionPolicy& policy = default_policy());

// Apply D to a function handle carrying analytic derivatives.
cplx apply_D(const SpectralParams& p, const std::function<Jet2(double)>& u, double t);

// Apply D to a black-box function via 5-point central differences with
// h = 1e-4 max(1, t) (clamped to keep the stencil inside t > 0).
cplx apply_D_fd(const SpectralParams& p, const std::function<cplx(double)>& u, double t);

// Change of variable t = sinh^2(x/2) and the gauge factor
// r(x) = sinh(x/2)^{-(mu-1)/2} cosh(x/2)^{(sigma-1)/2} that carries D to
// the Schroedinger normal form  d^2/dx^2 - q(x).
double x_of_t(double t);
double t_of_x(double x);
cplx gauge_r(const SpectralParams& p, double x);

// First-order coefficient of D in the x variable:
// D = d^2/dx^2 + beta(x) d/dx with
// beta = (mu-1)/2 coth(x/2) - (sigma-1)/2 tanh(x/2).
cplx beta_coeff(const SpectralParams& p, double x);

// Normal-form potential q(x); real-valued for admissible sigma.
cplx potential_q(const SpectralParams& p, double x);

// Frobenius solution at x = 0, asymptotically (x/2)^{(mu-1)/2}:
//   eta1(x, lambda) = r(x)^{-1} 2F1(a, b; c; -sinh^2(x/2)),
// with a,b from the triple at tau = 4 i sqrt(lambda).
cplx eta1(const SpectralParams& p, cplx lambda, double x,
          const PrecisionPolicy& policy = default_policy());

// Jost-type solution at x = infinity, asymptotically e^{i x sqrt(lambda)}:
//   eta2 = r^{-1} sinh(x/2)^{-2b} 2F1(b, b-c+1; b-a+1; -sinh^{-2}(x/2)).
cplx eta2(const SpectralParams& p, cplx lambda, double x,
          const PrecisionPolicy& policy = default_policy());

// Closed form of W(eta1, eta2)(lambda) with W(u,v) = u'v - uv';
// x-independent.  lambda must be nonzero.
cplx wronskian_eta(const SpectralParams& p, cplx lambda);

// Weyl endpoint classification at x = 0: limit circle for mu in {1,2,3},
// limit point for mu >= 4.
EndpointClass classify_endpoint(int mu);

} // namespace hyperg::sl

#endif
