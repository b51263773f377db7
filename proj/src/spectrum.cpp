#include "hyperg/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperg/gamma.hpp"
#include "hyperg/quadrature.hpp"

namespace hyperg::spectrum {

using specfun::gamma;
using specfun::rgamma;

namespace {
const double pi = 3.14159265358979323846;

void check_atom_index(const SpectralParams& p, int j) {
    if (p.sigma.imag() != 0.0)
        throw std::domain_error("discrete spectrum: sigma must be real");
    double bound = 0.25 * (p.sigma.real() - double(p.mu));
    if (j < 0 || double(j) >= bound)
        throw std::domain_error("discrete spectrum: atom index out of range");
}
} // namespace

std::vector<Atom> discrete_points(const SpectralParams& p) {
    std::vector<Atom> atoms;
    if (p.sigma.imag() != 0.0) return atoms;
    double sr = p.sigma.real();
    double bound = 0.25 * (sr - double(p.mu));
    for (int j = 0; double(j) < bound; ++j)
        atoms.push_back({j, sr - double(p.mu) - 4.0 * double(j), discrete_weight(p, j)});
    return atoms;
}

double discrete_weight(const SpectralParams& p, int j) {
    check_atom_index(p, j);
    double sr = p.sigma.real();
    double mu = double(p.mu);
    double s = 0.5 * (sr - mu);
    // all gamma arguments positive here: sigma/2 - j > mu/2 > 0 and
    // s - 2j > 0 throughout the admissible range j < (sigma-mu)/4
    double num = std::tgamma(0.5 * sr - double(j)) * std::tgamma(double(j) + 0.5 * mu);
    double den = std::tgamma(0.5 * mu);
    den *= den;
    den *= std::tgamma(s - 2.0 * double(j));
    double fact = 1.0, poch = 1.0;
    for (int k = 2; k <= j; ++k) fact *= double(k);
    for (int i = 0; i < j; ++i) poch *= (-s + double(j + i));
    double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    return sgn * num / (den * fact * poch);
}

double discrete_weight_eps_shift(const SpectralParams& p, int j, double eps) {
    check_atom_index(p, j);
    double sr = p.sigma.real() + eps;
    double mu = double(p.mu);
    double s = 0.5 * (sr - mu);
    double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    double fact = 1.0;
    for (int k = 2; k <= j; ++k) fact *= double(k);
    double val = sgn * std::tgamma(0.5 * sr - double(j)) * std::tgamma(-s + double(j)) *
                 std::tgamma(double(j) + 0.5 * mu) /
                 (fact * std::tgamma(0.5 * mu) * std::tgamma(0.5 * mu) *
                  std::tgamma(s - 2.0 * double(j)) * std::tgamma(-s + 2.0 * double(j)));
    return val;
}

double continuous_density(const SpectralParams& p, double nu) {
    if (nu < 0.0) throw std::domain_error("continuous_density: nu must be >= 0");
    cplx mu(double(p.mu), 0.0);
    if (nu == 0.0) {
        // nu -> 0 limit.  |Gamma(i nu/2)|^{-2} ~ nu^2/4 kills the density
        // unless (mu - sigma)/4 sits on a gamma pole; at that threshold
        // |Gamma(-k + i nu/4)|^2 ~ 16/(k!^2 nu^2) and the limit is positive.
        if (p.sigma.imag() == 0.0) {
            double k = 0.25 * (p.sigma.real() - double(p.mu));
            if (k >= 0.0 && std::abs(k - std::round(k)) < 1e-12) {
                double kf = 1.0;
                for (int q = 2; q <= int(std::round(k)); ++q) kf *= double(q);
                cplx g2 = gamma(0.25 * (p.sigma + mu));
                cplx rg4 = rgamma(0.5 * mu);
                return std::norm(g2 * rg4) / (2.0 * pi * kf * kf);
            }
        }
        return 0.0;
    }
    cplx inu(0.0, nu);
    cplx g1 = gamma(0.25 * (mu - p.sigma + inu));
    cplx g2 = gamma(0.25 * (p.sigma + mu + inu));
    cplx rg3 = rgamma(0.5 * inu);
    cplx rg4 = rgamma(0.5 * mu);
    return std::norm(g1 * g2 * rg3 * rg4) / (8.0 * pi);
}

double spectral_density_lambda(const SpectralParams& p, double lambda) {
    if (!(lambda > 0.0))
        throw std::domain_error("spectral_density_lambda: lambda must be > 0");
    double sq = std::sqrt(lambda);
    cplx isq(0.0, sq);
    cplx mu(double(p.mu), 0.0);
    cplx sm = 0.25 * (p.sigma - mu);
    cplx g1 = gamma(-sm + isq);
    cplx g2 = gamma(0.25 * (p.sigma + mu) + isq);
    cplx rg3 = rgamma(2.0 * isq);
    cplx rg4 = rgamma(0.5 * mu);
    return std::norm(g1 * g2 * rg3 * rg4) / (4.0 * pi * sq);
}

double residue_weight_oracle(const SpectralParams& p, int j) {
    check_atom_index(p, j);
    double mu = double(p.mu);
    double delta = 0.25 * (p.sigma.real() - mu) - double(j);
    // a - b = -2 delta at the atom; an integer gap merges the Jost-side
    // Frobenius exponents and the Gamma pole in kappa collides with a
    // reciprocal-Gamma zero. The two arguments cross the integer lattice at
    // speeds 2 and 1 in sqrt(-lambda), so the collision limit is exactly
    // half the generic continuation and the raw resolvent limit doubles the
    // weight; halve it at such triples.
    bool degenerate = std::abs(2.0 * delta - std::round(2.0 * delta)) < 1e-9;
    double lambda_j = -delta * delta;
    double eps0 = std::min(1e-3, 0.125 * std::abs(lambda_j));

    auto L = [&](double eps) {
        cplx lam(lambda_j + eps, 0.0);
        cplx isl = cplx(0.0, 1.0) * sl::sqrt_lambda(lam);
        cplx sm = 0.25 * (p.sigma - mu);
        cplx a = -sm + isl, b = -sm - isl, c = cplx(0.5 * mu, 0.0);
        cplx kappa = gamma(a - b) * gamma(c) * rgamma(a) * rgamma(c - b);
        cplx W = sl::wronskian_eta(p, lam);
        return (-eps / (W * kappa)).real();
    };

    // Neville extrapolation to eps = 0 over eps_k = eps0 / 2^k; |lambda_j|
    // bounds the analyticity radius, hence the |lambda_j|/8 cap on eps0.
    std::vector<double> x, v;
    double prev = 0.0;
    for (int k = 0; k < 14; ++k) {
        double ek = eps0 / double(1 << k);
        x.push_back(ek);
        v.push_back(L(ek));
        for (int i = int(v.size()) - 2; i >= 0; --i)
            v[size_t(i)] = (x[size_t(i)] * v[size_t(i) + 1] - ek * v[size_t(i)]) /
                           (x[size_t(i)] - ek);
        if (k > 2 && std::abs(v[0] - prev) <= 1e-9 * std::max(1.0, std::abs(v[0])))
            return degenerate ? 0.5 * v[0] : v[0];
        prev = v[0];
    }
    throw ConvergenceError("residue_weight_oracle: extrapolation not converged");
}

double norm_weight_oracle(const SpectralParams& p, int j) {
    check_atom_index(p, j);
    double mu = double(p.mu);
    double sr = p.sigma.real();
    double tau_j = sr - mu - 4.0 * double(j);
    auto tr = sl::hyper_triple(p, cplx(tau_j, 0.0));
    double a = tr.a.real(), b = tr.b.real(), c = tr.c.real(); // a = -j

    // F(t, tau_j) = sum_i (a)_i (b)_i / ((c)_i i!) (-t)^i, degree j in t
    std::vector<double> f(size_t(j) + 1, 0.0);
    double coef = 1.0;
    for (int i = 0; i <= j; ++i) {
        f[size_t(i)] = coef;
        coef *= -(a + double(i)) * (b + double(i)) / ((c + double(i)) * double(i + 1));
    }
    std::vector<double> g(2 * size_t(j) + 1, 0.0); // F^2
    for (size_t u = 0; u < f.size(); ++u)
        for (size_t w = 0; w < f.size(); ++w) g[u + w] += f[u] * f[w];

    auto f2 = [&](double t) {
        double acc = 0.0;
        for (size_t i = g.size(); i-- > 0;) acc = acc * t + g[i];
        return acc;
    };

    const double t_min = 1e-12, t_max = 1e8;
    auto grid = quad::geometric_panels(t_min, t_max, 100, 16);
    double body = 0.0;
    for (size_t i = 0; i < grid.x.size(); ++i) {
        double t = grid.x[i];
        body += grid.w[i] * f2(t) * std::pow(t, 0.5 * (mu - 2.0)) *
                std::pow(1.0 + t, -0.5 * sr);
    }
    // head: integrand ~ g0 t^{(mu-2)/2} (1 - (sigma/2) t + ...) on [0, t_min]
    double head = g[0] * std::pow(t_min, 0.5 * mu) *
                  (2.0 / mu - sr * t_min / (mu + 2.0));
    // tail: expand (1+t)^{-sigma/2} = t^{-sigma/2} sum_k C(-sigma/2, k) t^{-k}
    double tail = 0.0;
    for (size_t m = 0; m < g.size(); ++m) {
        double bin = 1.0;
        for (int k = 0; k <= 5; ++k) {
            double q1 = double(m) + 0.5 * mu - 0.5 * sr - double(k); // exponent + 1
            tail += g[m] * bin * std::pow(t_max, q1) / (-q1);
            bin *= (-0.5 * sr - double(k)) / double(k + 1);
        }
    }
    return 1.0 / (body + head + tail);
}

PlancherelMeasure plancherel_measure(const SpectralParams& p) {
    return PlancherelMeasure{p, discrete_points(p)};
}

NuGrid nu_grid(double nu_max, int panels, int pts) {
    quad::Grid g = quad::uniform_panels(0.0, nu_max, panels, pts);
    return NuGrid{std::move(g.x), std::move(g.w), nu_max};
}

IntegrateResult measure_integrate(const PlancherelMeasure& m,
                                  const std::function<cplx(const SpectrumPoint&)>& h,
                                  const NuGrid& grid) {
    cplx acc(0.0, 0.0);
    for (const Atom& a : m.atoms) {
        SpectrumPoint pt{SpectrumPoint::Kind::Discrete, cplx(a.tau, 0.0), a.j};
        acc += a.weight * h(pt);
    }
    double tail = 0.0;
    for (std::size_t i = 0; i < grid.nu.size(); ++i) {
        SpectrumPoint pt{SpectrumPoint::Kind::Continuous, cplx(0.0, grid.nu[i]), -1};
        double rho = m.density(grid.nu[i]);
        cplx val = h(pt);
        acc += grid.w[i] * rho * val;
        if (i + 1 == grid.nu.size()) tail = std::abs(val) * rho * 0.1 * grid.nu_max;
    }
    return {acc, tail};
}

} // namespace hyperg::spectrum
