#ifndef HYPERG_TRANSFORM_HPP
#define HYPERG_TRANSFORM_HPP

#include <complex>
#include <functional>
#include <vector>

#include "hyperg/quadrature.hpp"
#include "hyperg/spectrum.hpp"

namespace hyperg::transform {

using cplx = std::complex<double>;
using sl::SpectralParams;

struct GridConfig {
    int t_panels = 88;      // log-spaced panels on [t_min, t_max]
    int t_pts = 16;
    double t_min = 1e-17;   // mass below t_min is O(sqrt(t_min)) for mu = 1
    double t_max = 3e4;     // non-decaying f: truncated tail ~ (2/3) t_max^{-3/2}
    int nu_panels = 64;     // uniform panels on [0, nu_max]
    int nu_pts = 16;
    double nu_max = 40.0;

    GridConfig doubled() const {
        GridConfig c = *this;
        c.t_panels *= 2;
        c.nu_panels *= 2;
        return c;
    }
};

struct QuadratureGrid {
    quad::Grid t;
    spectrum::NuGrid nu;
    GridConfig config;
};

QuadratureGrid build_grid(const GridConfig& config = {});

// Transform-side data: values on the atoms and on the continuous branch
// nodes of its nu grid.
struct SpectralFunction {
    SpectralParams params;
    spectrum::PlancherelMeasure measure;
    spectrum::NuGrid nu;
    std::vector<cplx> atom_values; // aligned with measure.atoms
    std::vector<cplx> cont_values; // aligned with nu.nu
    bool tail_warning = false;     // integrand not negligible at t_max
    double tail_magnitude = 0.0;
};

// g(tau) = int_0^inf F(t,tau) f(t) t^{(mu-2)/2} (1+t)^{-sigma/2} dt
// evaluated on the atoms and the continuous nodes.
SpectralFunction forward(const SpectralParams& p, const std::function<cplx(double)>& f,
                         const QuadratureGrid& grid,
                         const PrecisionPolicy& policy = default_policy());

// Same transform for several inputs at once; the hypergeometric values per
// spectrum point are computed once and reused (dominant cost).
std::vector<SpectralFunction> forward_multi(const SpectralParams& p,
                                            const std::vector<std::function<cplx(double)>>& fs,
                                            const QuadratureGrid& grid,
                                            const PrecisionPolicy& policy = default_policy());

// f(t) = sum_j w_j g_j F(t,tau_j) + int_0^numax F(t,i nu) g(i nu) rho(nu) d nu
std::vector<cplx> inverse(const SpectralFunction& g, const std::vector<double>& t_points,
                          const PrecisionPolicy& policy = default_policy());

// sum_j w_j |g_j|^2 + int |g(i nu)|^2 rho(nu) d nu
double plancherel_norm(const SpectralFunction& g);

// int |f(t)|^2 t^{(mu-2)/2} (1+t)^{-Re sigma/2} dt on the t grid
double input_norm(const SpectralParams& p, const std::function<cplx(double)>& f,
                  const quad::Grid& tgrid);

struct UnitarityReport {
    double norm_in = 0.0;
    double norm_spec = 0.0;
    double defect = 0.0; // |norm_in - norm_spec| / norm_in
    bool pass = false;
    bool tail_warning = false;
};

UnitarityReport verify_unitarity(const SpectralParams& p, const std::function<cplx(double)>& f,
                                 const GridConfig& config = {}, double tol = 1e-3,
                                 const PrecisionPolicy& policy = default_policy());

// sup |inverse(forward(f)) - f| / sup |f| over the probe points
double roundtrip_error(const SpectralParams& p, const std::function<cplx(double)>& f,
                       const QuadratureGrid& grid, const std::vector<double>& t_probes,
                       const PrecisionPolicy& policy = default_policy());

// Exact weighted pairing of atom eigenfunctions,
//   int_0^inf F(t,tau_j) F(t,tau_jp) t^{(mu-2)/2} (1+t)^{-sigma/2} dt,
// as a finite Beta-function sum (the eigenfunctions are polynomials).
// Equals delta_{j,jp} / weight_j.
double eigenfunction_orthogonality(const SpectralParams& p, int j, int jp);

// Pairing of an atom eigenfunction with the continuous branch:
//   int_0^inf F(t,tau_j) F(t,i nu) t^{(mu-2)/2} (1+t)^{-sigma/2} dt,
// quadrature on [0, T] plus the analytic tail from the 1/t expansion of
// F(t, i nu) (the integrand decays too slowly for bare truncation).
// Exactly zero in the limit; the return value measures quadrature quality.
cplx atom_continuous_pairing(const SpectralParams& p, int j, double nu, double T = 100.0,
                             const PrecisionPolicy& policy = default_policy());

// Coefficients of the polynomial eigenfunction F(t, tau_j) in powers of t.
std::vector<cplx> atom_eigenfunction_coeffs(const SpectralParams& p, int j);

} // namespace hyperg::transform

#endif
