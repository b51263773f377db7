#ifndef HYPERG_BESSEL_OPS_HPP
#define HYPERG_BESSEL_OPS_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "hyperg/polynomial.hpp"
#include "hyperg/precision.hpp"

namespace hyperg::bessel {

using cplx = std::complex<double>;

// One summand K~_alpha(|x|) |x|^{2a} p(x).
struct KTerm {
    cplx alpha;
    int a = 0;
    poly::Polynomial p;
};

// Finite sum of KTerms on R^dim; closed under differentiation and under the
// Bessel operators B_j = x_j Lap - (2E + dim - sigma) d_j.
struct ClosedFormFunction {
    int dim = 2;
    std::vector<KTerm> terms;

    cplx eval(std::span<const double> x, const PrecisionPolicy& policy = default_policy()) const;
};

// K~_{-sigma/2+a}(|x|) |x|^{2a} p(x); a=0, p=1 gives the spherical vector.
ClosedFormFunction kfinite_vector(cplx sigma, int a, const poly::Polynomial& p, int dim);

// d/dx_j, exact:
//   (alpha,a,p) -> (alpha+1, a, -x_j p/2) + (alpha, a-1, 2a x_j p) + (alpha, a, dp/dx_j)
ClosedFormFunction derivative(const ClosedFormFunction& u, int j);

// Rewrite every term to a = 0 using |x|^2 K~_alpha = 4(alpha-1)K~_{alpha-1} + 4K~_{alpha-2}.
ClosedFormFunction reduce_orders(const ClosedFormFunction& u);

// Combine terms with equal (alpha, a), drop zero polynomials.
ClosedFormFunction merge(const ClosedFormFunction& u);

// B_j u = x_j Lap u - 2E(d_j u) - (dim - sigma) d_j u, exact closed form,
// returned order-reduced and merged.
ClosedFormFunction bessel_apply(int n, cplx sigma, int j, const ClosedFormFunction& u);

// Same operator on a black-box smooth function via 4th-order central
// differences; x must stay away from the K-Bessel singularity at 0.
cplx bessel_apply_numeric(int n, cplx sigma, int j,
                          const std::function<cplx(std::span<const double>)>& u,
                          std::span<const double> x, double h_scale = 2e-3);

// (x,y) -> |x|^{(sigma-tau-mu)/2} Fprofile(|y|^2/|x|^2) f(x) phi(y),
// x the first m coordinates, y the rest, mu = 2k + n - m.
std::function<cplx(std::span<const double>)>
lift_profile(cplx sigma, cplx tau, int k, int n, int m,
             const std::function<cplx(std::span<const double>)>& f, const poly::Polynomial& phi,
             const std::function<cplx(double)>& Fprofile);

// Same with Fprofile = the regular-at-0 hypergeometric eigenfunction for
// (sigma, mu, tau).
std::function<cplx(std::span<const double>)>
lift_psi(cplx sigma, cplx tau, int k, int n, int m,
         const std::function<cplx(std::span<const double>)>& f, const poly::Polynomial& phi,
         const PrecisionPolicy& policy = default_policy());

// Random points with 0.3 <= |z| <= 3 and |(z_1..z_m)| >= 0.3, fixed seed.
std::vector<std::vector<double>> annulus_samples(int n, int m, int count, unsigned seed = 42);

// max over samples of |B_j^{n,sigma} Psi(f x phi) - Psi(B_j^{m,tau} f x phi)| / (1 + |Psi|),
// left side by finite differences, right side in closed form.
// Fprofile overrides the eigenfunction (negative controls); null = default.
double intertwining_residual(cplx sigma, cplx tau, int k, int n, int m,
                             const ClosedFormFunction& f, const poly::Polynomial& phi, int j,
                             const std::vector<std::vector<double>>& samples,
                             const std::function<cplx(double)>& Fprofile = nullptr,
                             const PrecisionPolicy& policy = default_policy());

// |<B_j f, g> - <f, B_j g>| relative to |<B_j f, g>| + |<f, B_j g>| plus the
// Cauchy-Schwarz scale ||B_j f|| ||g|| + ||f|| ||B_j g||, all in
// L^2(R^n, |x|^{-Re sigma} dx) with polar-coordinate quadrature.  The scale
// term keeps the ratio meaningful when both pairings vanish by parity.
double symmetry_check(int n, cplx sigma, const ClosedFormFunction& f,
                      const ClosedFormFunction& g, int j,
                      const PrecisionPolicy& policy = default_policy());

// Weighted inner product <u, v> = int u conj(v) |x|^{-Re sigma} dx.
cplx weighted_inner_product(int n, cplx sigma, const ClosedFormFunction& u,
                            const ClosedFormFunction& v,
                            const PrecisionPolicy& policy = default_policy());

} // namespace hyperg::bessel

#endif
