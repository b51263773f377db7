#ifndef HYPERG_BRANCHING_HPP
#define HYPERG_BRANCHING_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "hyperg/polynomial.hpp"
#include "hyperg/precision.hpp"
#include "hyperg/quadrature.hpp"

namespace hyperg::branching {

using cplx = std::complex<double>;

// ---- spherical harmonics -------------------------------------------------

// Exact integral of a monomial over the unit sphere S^{d-1} (counting
// measure of mass 2 for d=1); zero unless all exponents are even.
double sphere_monomial_integral(int d, const poly::Monomial& mono);

cplx sphere_inner(const poly::Polynomial& p, const poly::Polynomial& q, int d);

// Harmonic part of a degree-k polynomial (Kelvin-type projection).
poly::Polynomial harmonic_projection(const poly::Polynomial& q, int d, int k);

struct HarmonicBasis {
    int d = 1;
    int k = 0;
    std::vector<poly::Polynomial> basis; // orthonormal in L^2(S^{d-1})
};

// d=1: {1},{y}; d=2: Re/Im (y1+i y2)^k; d=3: projected monomials, 2k+1 of them.
HarmonicBasis harmonic_basis(int d, int k);

// ---- isotypic decomposition ----------------------------------------------

// g_{k,l}(x, r) = r^{-k} int_{S^{d-1}} F(x, r w) phi(w) dw for F on R^n
// split as (x in R^m, y in R^{n-m}).
cplx isotypic_project_at(const std::function<cplx(std::span<const double>)>& F, int m, int d,
                         std::span<const double> x, double r, const poly::Polynomial& phi, int k,
                         const quad::SphereRule& sph);

struct BranchingConfig {
    int rx_panels = 30;
    int rx_pts = 10;
    double rx_min = 1e-4;
    double rx_max = 8.0;
    int ry_panels = 36;
    int ry_pts = 10;
    double ry_min = 1e-6;
    double ry_max = 10.0;
    int t_panels = 70; // fiber transform grid
    int t_pts = 12;
    double t_min = 1e-12;
    double t_max = 1e5;
    int nu_panels = 40;
    int nu_pts = 12;
    double nu_max = 40.0;
    int sphere_order = 18;
};

struct PlancherelReport {
    struct KRow {
        int k = 0;
        int atoms_found = 0;
        int atoms_expected = 0;
        std::vector<double> taus;
        double contribution = 0.0; // share of the spectral-side norm
        bool census_ok = true;
    };
    double lhs = 0.0;    // ambient weighted norm^2 over the sampled shells
    double rhs = 0.0;    // sum of per-component spectral norms
    double defect = 0.0; // |lhs-rhs|/lhs
    std::vector<KRow> rows;
    bool census_ok = true;
    bool census_only = false;
    bool pass = false;
};

// Decomposes F along S^{d-1} harmonics, pushes every component through the
// fiber transform in t = |y|^2/|x|^2, and compares the summed spectral
// norms against the ambient weighted norm. census_only skips quadrature.
PlancherelReport full_plancherel_check(int n, int m, cplx sigma,
                                       const std::function<cplx(std::span<const double>)>& F,
                                       int k_max, double tol = 1e-2, bool census_only = false,
                                       const BranchingConfig& config = {},
                                       const PrecisionPolicy& policy = default_policy());

// ---- Hankel / Fourier ----------------------------------------------------

// (H_nu f)(r) = r^{-nu} int_0^S J_nu(r s) f(s) s^{nu+1} ds at each probe r.
std::vector<cplx> hankel_transform(double nu, const std::function<cplx(double)>& f,
                                   const std::vector<double>& r_points, double S,
                                   const PrecisionPolicy& policy = default_policy());

// Radial Fourier factorization on R^n: for u = f(|y|) phi(y) with phi a
// solid harmonic of degree k, compares the direct n-dimensional Fourier
// integral of u against i^{-k} (H_{(n+2k-2)/2} f)(|xi|) phi(xi).
double fourier_factorization_err(int n, int k, const std::function<cplx(double)>& f, double S,
                                 const PrecisionPolicy& policy = default_policy());

struct SphericalVectorReport {
    double max_rel_dev = 0.0;   // shape deviation from (1+|xi|^2)^{-(sigma+n)/2}
    double const_rel_err = 0.0; // fitted constant vs 2^{(n-2)/2} Gamma((sigma+n)/2)
    cplx fitted = 0.0;
    cplx closed = 0.0;
};

SphericalVectorReport spherical_vector_ft_check(cplx sigma, int n,
                                                const PrecisionPolicy& policy = default_policy());

// ---- closed-form integral identities --------------------------------------

struct FormulaCheck {
    cplx lhs = 0.0;
    cplx rhs = 0.0;
    double rel_err = 0.0;
    bool pass = false;
};

// int_0^inf 2F1(alpha,beta;nu+1;-lambda^2 x^2) J_nu(x y) x^{nu+1} dx
//   = 2^{nu-alpha-beta+2} Gamma(nu+1) / (lambda^{alpha+beta} Gamma(alpha) Gamma(beta))
//     * y^{alpha+beta-nu-2} K_{alpha-beta}(y/lambda)
FormulaCheck check_hankel_hyp2f1(cplx alpha, cplx beta, double nu, double lambda, double y,
                                 double tol = 1e-5,
                                 const PrecisionPolicy& policy = default_policy());

// int_0^inf x^{mu+nu+1} J_mu(a x) K_nu(b x) dx
//   = 2^{mu+nu} a^mu b^nu Gamma(mu+nu+1) / (a^2+b^2)^{mu+nu+1}
// strict enforces the textbook strip Re mu > |Re nu| - 1; otherwise only
// convergence of the integral at 0 is required.
FormulaCheck check_hankel_kbessel(double mu, cplx nu, double a, double b, double tol = 1e-5,
                                  bool strict = true,
                                  const PrecisionPolicy& policy = default_policy());

// ---- symmetry-breaking kernel chain ---------------------------------------

struct KernelChainReport {
    FormulaCheck fiber;   // Fourier integral along the y block (J x 2F1 form)
    FormulaCheck base;    // Fourier integral along the x block (J x K form)
    double slope_fit = 0.0;
    double slope_closed = 0.0;
    double slope_limit_dev = 0.0; // |closed-form small-eta exponent + (sigma+tau+mu)/2|
    double const_fit_err = 0.0;
    cplx const_fit = 0.0;
    cplx const_closed = 0.0;
    bool pass = false;
};

// Composes the two Fourier steps of the flat-picture kernel and checks the
// resulting power law and gamma-factor constant.
KernelChainReport noncompact_kernel_check(cplx sigma, cplx tau, int k, int n, int m,
                                          double tol = 1e-4,
                                          const PrecisionPolicy& policy = default_policy());

// Closed form of the composed kernel at (xi, eta) magnitudes.
cplx kernel_closed_form(cplx sigma, cplx tau, int k, int n, int m, double xi, double eta);

} // namespace hyperg::branching

#endif
