#ifndef HYPERG_SPECTRUM_HPP
#define HYPERG_SPECTRUM_HPP

#include <complex>
#include <functional>
#include <vector>

#include "hyperg/sl_operator.hpp"

namespace hyperg::spectrum {

using cplx = std::complex<double>;
using sl::SpectralParams;

// One point of the spectral set: either tau = i nu on the continuous
// branch or a discrete atom tau_j = sigma - mu - 4 j (sigma real).
struct SpectrumPoint {
    enum class Kind { Continuous, Discrete };
    Kind kind;
    cplx tau;
    int j = -1; // atom index, -1 on the continuous branch
};

struct Atom {
    int j;
    double tau;
    double weight;
};

// Atoms tau_j = sigma - mu - 4j for integer j in [0, (Re sigma - mu)/4),
// ordered by increasing j.  Empty for purely imaginary sigma.
std::vector<Atom> discrete_points(const SpectralParams& p);

// Atom mass
//   w_j = (-1)^j Gamma(sigma/2-j) Gamma(-s+j) Gamma(j+mu/2)
//         / (j! Gamma(mu/2)^2 Gamma(s-2j) Gamma(-s+2j)),   s = (sigma-mu)/2,
// evaluated in the pole-free arrangement
//   w_j = Gamma(sigma/2-j) Gamma(j+mu/2)
//         / (j! Gamma(mu/2)^2 Gamma(s-2j) (s-j)(s-j-1)...(s-2j+1)),
// whose gamma arguments are all positive in the admissible range.
double discrete_weight(const SpectralParams& p, int j);

// Same mass from the raw gamma ratio at sigma + eps (limit fallback);
// used as a cross-check where (sigma-mu)/2 is an integer and the raw
// ratio is a pole/pole limit.
double discrete_weight_eps_shift(const SpectralParams& p, int j, double eps = 1e-8);

// Density of the continuous part against d nu (tau = i nu):
//   (1/8 pi) |Gamma((mu-sigma+i nu)/4) Gamma((sigma+mu+i nu)/4)|^2
//            / (|Gamma(i nu /2)|^2 Gamma(mu/2)^2).
// At nu = 0 the continuous limit is returned: 0 generically, but a positive
// threshold value when (sigma - mu)/4 is a non-negative integer (the gamma
// pole in the numerator cancels the |Gamma(i nu/2)|^{-2} zero).
double continuous_density(const SpectralParams& p, double nu);

// Integrand of the lambda-side continuous part (against d lambda):
//   (1/4 pi sqrt(lambda)) |Gamma(-(sigma-mu)/4 + i sqrt(lambda))
//       Gamma((sigma+mu)/4 + i sqrt(lambda))|^2
//       / (|Gamma(2 i sqrt(lambda))|^2 Gamma(mu/2)^2),  lambda > 0.
// Coordinate coherence: continuous_density(nu) equals
// spectral_density_lambda(nu^2/16) * nu / 8.
double spectral_density_lambda(const SpectralParams& p, double lambda);

// Independent oracle for the atom mass: extrapolated limit of
//   -eps / (W(lambda_j + eps) kappa(lambda_j + eps)),
// where W is the closed-form Wronskian and kappa is the connection
// coefficient carrying the Frobenius solution to the Jost solution at the
// atom.  Neville extrapolation over eps_k = eps0 / 2^k with
// eps0 = min(1e-3, |lambda_j|/8); |lambda_j| bounds the analyticity radius.
// When (sigma - mu)/2 - 2j is an integer the two Jost-side Frobenius
// exponents merge and kappa's Gamma pole collides with a reciprocal-Gamma
// zero; the colliding arguments move at speeds 2 and 1 in sqrt(-lambda), so
// the raw limit comes out at exactly twice the weight and is halved here.
double residue_weight_oracle(const SpectralParams& p, int j);

// Second independent oracle: w_j = 1 / ||F(., tau_j)||^2 with the norm taken
// in the model space, || . ||^2 = int_0^inf F^2 t^{(mu-2)/2} (1+t)^{-sigma/2} dt.
// F(t, tau_j) is the degree-j Jacobi polynomial in t (series coefficients
// computed directly); the integral is panel quadrature on [0, T] plus a
// binomial tail expansion, so no gamma-product formula enters.
double norm_weight_oracle(const SpectralParams& p, int j);

struct PlancherelMeasure {
    SpectralParams params;
    std::vector<Atom> atoms;
    double density(double nu) const { return continuous_density(params, nu); }
};

PlancherelMeasure plancherel_measure(const SpectralParams& p);

// Gauss-Legendre panels on the continuous branch nu in [0, nu_max].
struct NuGrid {
    std::vector<double> nu;
    std::vector<double> w;
    double nu_max = 0.0;
};
NuGrid nu_grid(double nu_max = 40.0, int panels = 64, int pts = 16);

struct IntegrateResult {
    cplx value;
    double tail_estimate; // last-node integrand magnitude scale
};

// sum_j w_j h(atom_j) + int_0^numax h(i nu) density(nu) d nu
IntegrateResult measure_integrate(const PlancherelMeasure& m,
                                  const std::function<cplx(const SpectrumPoint&)>& h,
                                  const NuGrid& grid);

} // namespace hyperg::spectrum

#endif
