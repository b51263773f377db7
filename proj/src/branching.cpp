#include "hyperg/branching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperg/gamma.hpp"
#include "hyperg/hyp2f1.hpp"
#include "hyperg/jbessel.hpp"
#include "hyperg/kbessel.hpp"
#include "hyperg/spectrum.hpp"
#include "hyperg/transform.hpp"

namespace hyperg::branching {

using poly::Monomial;
using poly::Polynomial;
using sl::SpectralParams;
using specfun::gamma;
using specfun::rgamma;

namespace {

const double pi = 3.14159265358979323846;

double double_factorial(int v) { // (-1)!! = 0!! = 1
    double r = 1.0;
    for (int q = v; q >= 2; q -= 2) r *= double(q);
    return r;
}

double binomial(int nn, int kk) {
    double r = 1.0;
    for (int q = 1; q <= kk; ++q) r *= double(nn - kk + q) / double(q);
    return r;
}

cplx ipow_minus(int k) { // i^{-k}
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

} // namespace

double sphere_monomial_integral(int d, const Monomial& mono) {
    if (d < 1 || d > 3)
        throw std::domain_error("sphere_monomial_integral: d must be 1, 2, or 3");
    for (int i = d; i < 4; ++i)
        if (mono[i] != 0)
            throw std::domain_error("sphere_monomial_integral: exponent outside dimension");
    for (int i = 0; i < d; ++i)
        if (mono[i] % 2 != 0) return 0.0;
    int a = mono[0];
    int b = d > 1 ? mono[1] : 0;
    int c = d > 2 ? mono[2] : 0;
    if (d == 1) return 2.0;
    if (d == 2)
        return 2.0 * pi * double_factorial(a - 1) * double_factorial(b - 1) /
               double_factorial(a + b);
    return 4.0 * pi * double_factorial(a - 1) * double_factorial(b - 1) *
           double_factorial(c - 1) / double_factorial(a + b + c + 1);
}

cplx sphere_inner(const Polynomial& p, const Polynomial& q, int d) {
    cplx acc = 0.0;
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) {
            Monomial m{};
            for (int i = 0; i < 4; ++i) m[i] = mp[i] + mq[i];
            acc += cp * std::conj(cq) * sphere_monomial_integral(d, m);
        }
    return acc;
}

Polynomial harmonic_projection(const Polynomial& q, int d, int k) {
    Polynomial rho2 = Polynomial::radius_sq(d);
    Polynomial acc;
    Polynomial lap = q; // Delta^i q
    Polynomial rho_pow(cplx(1.0, 0.0));
    double ci = 1.0;
    for (int i = 0;; ++i) {
        acc += rho_pow * lap * cplx(ci, 0.0);
        lap = lap.laplacian(d);
        if (lap.is_zero(0.0)) break;
        double denom = 2.0 * double(i + 1) * double(2 * k + d - 2 * i - 4);
        if (denom == 0.0)
            throw std::logic_error("harmonic_projection: degenerate recurrence");
        ci = -ci / denom;
        rho_pow = rho_pow * rho2;
    }
    return acc;
}

HarmonicBasis harmonic_basis(int d, int k) {
    if (d < 1 || d > 3) throw std::domain_error("harmonic_basis: d must be 1, 2, or 3");
    if (k < 0) throw std::domain_error("harmonic_basis: k must be >= 0");
    HarmonicBasis out{d, k, {}};

    if (d == 1) { // S^0: the even and odd characters only
        if (k == 0)
            out.basis.push_back(Polynomial(cplx(1.0 / std::sqrt(2.0), 0.0)));
        else if (k == 1)
            out.basis.push_back(Polynomial::variable(0) * cplx(1.0 / std::sqrt(2.0), 0.0));
        return out;
    }

    if (d == 2) {
        if (k == 0) {
            out.basis.push_back(Polynomial(cplx(1.0 / std::sqrt(2.0 * pi), 0.0)));
            return out;
        }
        Polynomial re, im; // (y0 + i y1)^k split into real and imaginary parts
        for (int j = 0; j <= k; ++j) {
            double bj = binomial(k, j);
            Monomial m{k - j, j, 0, 0};
            switch (j % 4) { // i^j
                case 0: re += Polynomial::monomial(m, cplx(bj, 0.0)); break;
                case 1: im += Polynomial::monomial(m, cplx(bj, 0.0)); break;
                case 2: re += Polynomial::monomial(m, cplx(-bj, 0.0)); break;
                default: im += Polynomial::monomial(m, cplx(-bj, 0.0)); break;
            }
        }
        double s = 1.0 / std::sqrt(pi);
        out.basis.push_back(re * cplx(s, 0.0));
        out.basis.push_back(im * cplx(s, 0.0));
        return out;
    }

    // d = 3: harmonic projections of degree-k monomials, Gram-Schmidt with
    // exact sphere inner products, until the 2k+1 dimensional space is full.
    for (int a = k; a >= 0 && (int)out.basis.size() < 2 * k + 1; --a)
        for (int b = k - a; b >= 0 && (int)out.basis.size() < 2 * k + 1; --b) {
            Polynomial h = harmonic_projection(Polynomial::monomial({a, b, k - a - b, 0}, 1.0), 3, k);
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& phi : out.basis) h = h - phi * sphere_inner(h, phi, 3);
            h.trim(1e-13);
            double n2 = sphere_inner(h, h, 3).real();
            if (n2 > 1e-10) out.basis.push_back(h * cplx(1.0 / std::sqrt(n2), 0.0));
        }
    return out;
}

cplx isotypic_project_at(const std::function<cplx(std::span<const double>)>& F, int m, int d,
                         std::span<const double> x, double r, const Polynomial& phi, int k,
                         const quad::SphereRule& sph) {
    if (!(r > 0.0)) throw std::domain_error("isotypic_project_at: r must be > 0");
    if ((int)x.size() != m) throw std::domain_error("isotypic_project_at: x block size mismatch");
    std::vector<double> z(m + d);
    std::copy(x.begin(), x.end(), z.begin());
    cplx acc = 0.0;
    for (std::size_t i = 0; i < sph.x.size(); ++i) {
        for (int c = 0; c < d; ++c) z[m + c] = r * sph.x[i][c];
        acc += sph.w[i] * F(z) * phi.eval(std::span<const double>(sph.x[i].data(), std::size_t(d)));
    }
    return acc / std::pow(r, double(k));
}

PlancherelReport full_plancherel_check(int n, int m, cplx sigma,
                                       const std::function<cplx(std::span<const double>)>& F,
                                       int k_max, double tol, bool census_only,
                                       const BranchingConfig& config,
                                       const PrecisionPolicy& policy) {
    int d = n - m;
    if (m < 1 || m > 3 || d < 1 || d > 3)
        throw std::domain_error("full_plancherel_check: need 1 <= m, n-m <= 3");
    if (k_max < 0) throw std::domain_error("full_plancherel_check: k_max must be >= 0");

    PlancherelReport rep;
    rep.census_only = census_only;
    bool sigma_real = sigma.imag() == 0.0;

    for (int k = 0; k <= k_max; ++k) {
        HarmonicBasis hb = harmonic_basis(d, k);
        PlancherelReport::KRow row;
        row.k = k;
        int mu_k = 2 * k + d;
        if (!hb.basis.empty()) {
            SpectralParams pk(sigma, mu_k);
            auto atoms = spectrum::discrete_points(pk);
            row.atoms_found = int(atoms.size());
            for (const auto& a : atoms) row.taus.push_back(a.tau);
            if (sigma_real) {
                double edge = (sigma.real() - double(mu_k)) / 4.0; // atoms j in [0, edge)
                int expected = 0;
                if (edge > 0.0) {
                    expected = int(std::ceil(edge));
                    if (std::abs(edge - std::round(edge)) < 1e-12) expected = int(std::round(edge));
                }
                row.atoms_expected = expected;
            }
        }
        row.census_ok = row.atoms_found == row.atoms_expected;
        for (int j = 0; j < row.atoms_found && row.census_ok; ++j)
            if (std::abs(row.taus[j] - (sigma.real() - mu_k - 4.0 * j)) > 1e-10)
                row.census_ok = false;
        rep.census_ok = rep.census_ok && row.census_ok;
        rep.rows.push_back(row);
    }
    if (census_only) {
        rep.pass = rep.census_ok;
        return rep;
    }

    double res = sigma.real();
    quad::Grid rxg = quad::geometric_panels(config.rx_min, config.rx_max, config.rx_panels, config.rx_pts);
    quad::Grid ryg = quad::geometric_panels(config.ry_min, config.ry_max, config.ry_panels, config.ry_pts);
    quad::SphereRule sphx = quad::sphere_rule(m, 10);
    quad::SphereRule sphy = quad::sphere_rule(d, std::max(config.sphere_order, 2 * k_max + 6));

    struct XNode {
        std::vector<double> x;
        double rx = 0.0;
        double wx = 0.0; // radial weight x sphere weight x rx^{m-1}
    };
    std::vector<XNode> xnodes;
    for (std::size_t i = 0; i < rxg.x.size(); ++i)
        for (std::size_t s = 0; s < sphx.x.size(); ++s) {
            XNode nd;
            nd.rx = rxg.x[i];
            nd.wx = rxg.w[i] * sphx.w[s] * std::pow(nd.rx, double(m - 1));
            nd.x.resize(m);
            for (int c = 0; c < m; ++c) nd.x[c] = nd.rx * sphx.x[s][c];
            xnodes.push_back(std::move(nd));
        }

    // ambient side, on the same x shells as the spectral side
    double lhs = 0.0;
    {
        std::vector<double> z(n);
        for (const auto& nd : xnodes) {
            std::copy(nd.x.begin(), nd.x.end(), z.begin());
            double inner = 0.0;
            for (std::size_t iy = 0; iy < ryg.x.size(); ++iy) {
                double ry = ryg.x[iy];
                double wgt = std::pow(nd.rx * nd.rx + ry * ry, -0.5 * res);
                double shell = 0.0;
                for (std::size_t s = 0; s < sphy.x.size(); ++s) {
                    for (int c = 0; c < d; ++c) z[m + c] = ry * sphy.x[s][c];
                    shell += sphy.w[s] * std::norm(F(z));
                }
                inner += ryg.w[iy] * std::pow(ry, double(d - 1)) * wgt * shell;
            }
            lhs += nd.wx * inner;
        }
    }
    rep.lhs = lhs;

    transform::GridConfig gc;
    gc.t_panels = config.t_panels;
    gc.t_pts = config.t_pts;
    gc.t_min = config.t_min;
    gc.t_max = config.t_max;
    gc.nu_panels = config.nu_panels;
    gc.nu_pts = config.nu_pts;
    gc.nu_max = config.nu_max;
    transform::QuadratureGrid grid = transform::build_grid(gc);

    double rhs = 0.0;
    const double r_switch = 0.2;
    for (int k = 0; k <= k_max; ++k) {
        HarmonicBasis hb = harmonic_basis(d, k);
        if (hb.basis.empty()) continue;
        int mu_k = 2 * k + d;
        SpectralParams pk(sigma, mu_k);

        // sphere pairing with a magnitude scale: the raw r^{-k} division
        // amplifies quadrature cancellation noise when the component is
        // absent or r is small, so tiny pairings are flushed to zero and
        // radii below r_switch use a quadratic-in-r^2 extrapolation.
        auto gval = [&](const XNode& nd, double r, const Polynomial& phi) -> cplx {
            std::vector<double> z(n);
            std::copy(nd.x.begin(), nd.x.end(), z.begin());
            cplx acc = 0.0;
            double scale = 0.0;
            for (std::size_t s = 0; s < sphy.x.size(); ++s) {
                for (int c = 0; c < d; ++c) z[m + c] = r * sphy.x[s][c];
                cplx fv = F(z);
                cplx pv = phi.eval(std::span<const double>(sphy.x[s].data(), std::size_t(d)));
                acc += sphy.w[s] * fv * pv;
                scale += sphy.w[s] * std::abs(fv) * std::abs(pv);
            }
            if (std::abs(acc) <= 1e-13 * scale) return 0.0;
            return acc / std::pow(r, double(k));
        };

        std::vector<std::function<cplx(double)>> fs;
        std::vector<double> xw;
        fs.reserve(xnodes.size() * hb.basis.size());
        for (const auto& nd : xnodes) {
            for (const auto& phi : hb.basis) {
                double u0 = r_switch * r_switch, u1 = 1.96 * u0, u2 = 4.0 * u0;
                cplx v0 = gval(nd, std::sqrt(u0), phi);
                cplx v1 = gval(nd, std::sqrt(u1), phi);
                cplx v2 = gval(nd, std::sqrt(u2), phi);
                cplx s01 = (v1 - v0) / (u1 - u0), s02 = (v2 - v0) / (u2 - u0);
                cplx C = (s02 - s01) / (u2 - u1);
                cplx B = s01 - C * (u0 + u1);
                cplx A = v0 - B * u0 - C * u0 * u0;
                double rx2 = nd.rx * nd.rx;
                const XNode* pnd = &nd;
                const Polynomial* pphi = &phi;
                fs.push_back([=, &gval](double t) -> cplx {
                    double u = rx2 * t;
                    if (u < u0) return A + B * u + C * u * u;
                    return gval(*pnd, std::sqrt(u), *pphi);
                });
                xw.push_back(nd.wx * std::pow(nd.rx, double(mu_k) - res));
            }
        }

        auto gs = transform::forward_multi(pk, fs, grid, policy);
        double contrib = 0.0;
        for (std::size_t q = 0; q < gs.size(); ++q)
            contrib += xw[q] * 0.5 * transform::plancherel_norm(gs[q]);
        rhs += contrib;
        rep.rows[k].contribution = contrib;
    }
    rep.rhs = rhs;
    if (rhs > 0.0)
        for (auto& row : rep.rows) row.contribution /= rhs;
    rep.defect = std::abs(lhs - rhs) / std::abs(lhs);
    rep.pass = rep.census_ok && rep.defect <= tol;
    return rep;
}

std::vector<cplx> hankel_transform(double nu, const std::function<cplx(double)>& f,
                                   const std::vector<double>& r_points, double S,
                                   const PrecisionPolicy& policy) {
    if (!(S > 0.0)) throw std::domain_error("hankel_transform: S must be > 0");
    double rmax = 0.0;
    for (double r : r_points) {
        if (!(r > 0.0)) throw std::domain_error("hankel_transform: r must be > 0");
        rmax = std::max(rmax, r);
    }

    // graded panels resolve s^{nu+1} near 0, uniform panels the oscillation
    std::vector<double> breaks;
    double head = std::min(1.0, 0.25 * S);
    breaks.push_back(1e-9 * head);
    while (breaks.back() < head) breaks.push_back(std::min(head, breaks.back() * 4.0));
    double w = std::min(4.0 / std::max(1.0, rmax), (S - head) / 8.0);
    int cnt = int(std::ceil((S - head) / w));
    for (int i = 1; i <= cnt; ++i) breaks.push_back(head + (S - head) * double(i) / double(cnt));
    quad::Grid g = quad::panel_grid(breaks, 12);

    std::vector<cplx> fw(g.x.size());
    for (std::size_t i = 0; i < g.x.size(); ++i)
        fw[i] = g.w[i] * f(g.x[i]) * std::pow(g.x[i], nu + 1.0);

    std::vector<cplx> out;
    out.reserve(r_points.size());
    for (double r : r_points) {
        cplx acc = 0.0, comp = 0.0;
        for (std::size_t i = 0; i < g.x.size(); ++i) {
            cplx term = fw[i] * specfun::jbessel(nu, r * g.x[i], policy) - comp;
            cplx next = acc + term;
            comp = (next - acc) - term;
            acc = next;
        }
        out.push_back(acc * std::pow(r, -nu));
    }
    return out;
}

namespace {

// (2 pi)^{-n/2} int e^{-i <xi, y>} f(|y|) phi(y) dy by polar quadrature
cplx fourier_direct(int n, const std::function<cplx(double)>& f, const Polynomial& phi,
                    const std::vector<double>& xi, double S) {
    double xin = 0.0;
    for (double c : xi) xin += c * c;
    xin = std::sqrt(xin);
    int panels = int(S * std::max(1.0, xin) / 4.0) + 16;
    quad::Grid rg = quad::uniform_panels(0.0, S, panels, 12);
    quad::SphereRule sph = quad::sphere_rule(n, int(S * xin) + 40);
    cplx acc = 0.0;
    std::vector<double> y(n);
    for (std::size_t i = 0; i < rg.x.size(); ++i) {
        double r = rg.x[i];
        cplx fr = f(r) * rg.w[i] * std::pow(r, double(n - 1));
        cplx shell = 0.0;
        for (std::size_t s = 0; s < sph.x.size(); ++s) {
            double dot = 0.0;
            for (int c = 0; c < n; ++c) {
                y[c] = r * sph.x[s][c];
                dot += xi[c] * y[c];
            }
            shell += sph.w[s] * phi.eval(y) * std::exp(cplx(0.0, -dot));
        }
        acc += fr * shell;
    }
    return acc * std::pow(2.0 * pi, -0.5 * double(n));
}

} // namespace

double fourier_factorization_err(int n, int k, const std::function<cplx(double)>& f, double S,
                                 const PrecisionPolicy& policy) {
    if (n < 2 || n > 3) throw std::domain_error("fourier_factorization_err: n must be 2 or 3");
    HarmonicBasis hb = harmonic_basis(n, k);
    if (hb.basis.empty())
        throw std::domain_error("fourier_factorization_err: empty harmonic space");
    const Polynomial& phi = hb.basis.back();

    std::vector<std::vector<double>> xis;
    if (n == 2)
        xis = {{0.7 * std::cos(0.7), 0.7 * std::sin(0.7)},
               {1.6 * std::cos(1.9), 1.6 * std::sin(1.9)},
               {2.3 * std::cos(3.9), 2.3 * std::sin(3.9)}};
    else
        xis = {{0.5, 0.4, 0.3}, {-0.9, 1.1, 0.6}, {1.3, -0.7, 1.4}};

    double nu = 0.5 * double(n + 2 * k - 2);
    std::vector<double> rprobes;
    for (const auto& xi : xis) {
        double s = 0.0;
        for (double c : xi) s += c * c;
        rprobes.push_back(std::sqrt(s));
    }
    auto hv = hankel_transform(nu, f, rprobes, S, policy);

    double worst = 0.0;
    for (std::size_t i = 0; i < xis.size(); ++i) {
        cplx direct = fourier_direct(n, f, phi, xis[i], S);
        cplx factored = ipow_minus(k) * hv[i] * phi.eval(xis[i]);
        double den = std::max({std::abs(direct), std::abs(factored), 1e-9});
        worst = std::max(worst, std::abs(direct - factored) / den);
    }
    return worst;
}

SphericalVectorReport spherical_vector_ft_check(cplx sigma, int n, const PrecisionPolicy& policy) {
    if (!(sigma.real() > 0.0 && sigma.real() < double(n)))
        throw std::domain_error("spherical_vector_ft_check: need 0 < Re sigma < n");
    double nu = 0.5 * double(n - 2);
    auto psi = [&](double s) { return specfun::ktilde(-sigma / 2.0, s, policy); };
    double S = 45.0 + 5.0 * std::abs(sigma.real());

    std::vector<double> probes;
    for (int i = 0; i < 20; ++i)
        probes.push_back(0.25 * std::pow(3.0 / 0.25, double(i) / 19.0));
    probes.push_back(1.0); // fit point, last
    auto vals = hankel_transform(nu, psi, probes, S, policy);

    auto shape = [&](double r) { return std::pow(cplx(1.0 + r * r, 0.0), -(sigma + double(n)) / 2.0); };
    SphericalVectorReport rep;
    rep.fitted = vals.back() / shape(1.0);
    for (std::size_t i = 0; i + 1 < probes.size(); ++i)
        rep.max_rel_dev = std::max(rep.max_rel_dev,
                                   std::abs(vals[i] / shape(probes[i]) - rep.fitted) / std::abs(rep.fitted));
    rep.closed = std::pow(2.0, 0.5 * double(n - 2)) * gamma((sigma + double(n)) / 2.0);
    rep.const_rel_err = std::abs(rep.fitted - rep.closed) / std::abs(rep.closed);
    return rep;
}

FormulaCheck check_hankel_hyp2f1(cplx alpha, cplx beta, double nu, double lambda, double y,
                                 double tol, const PrecisionPolicy& policy) {
    if (!(y > 0.0) || !(lambda > 0.0))
        throw std::domain_error("check_hankel_hyp2f1: need y > 0 and lambda > 0");
    if (nu < -0.5)
        throw std::domain_error("check_hankel_hyp2f1: order must satisfy nu >= -1/2");
    if (!(nu < 2.0 * std::max(alpha.real(), beta.real()) - 1.5))
        throw std::domain_error("check_hankel_hyp2f1: decay strip nu < 2 max Re - 3/2 violated");
    cplx ab = alpha - beta;
    if (std::abs(ab - std::round(ab.real())) < 0.05)
        throw std::domain_error("check_hankel_hyp2f1: alpha - beta too close to an integer");

    cplx c(nu + 1.0, 0.0);
    double T = std::max({30.0, 30.0 / y, 30.0 / lambda});

    // truncated head
    std::vector<double> breaks;
    double h0 = std::min(1.0, T / 20.0);
    breaks.push_back(1e-10 * h0);
    while (breaks.back() < h0) breaks.push_back(std::min(h0, breaks.back() * 4.0));
    double w = std::min(2.5 / y, (T - h0) / 10.0);
    int cnt = int(std::ceil((T - h0) / w));
    for (int i = 1; i <= cnt; ++i) breaks.push_back(h0 + (T - h0) * double(i) / double(cnt));
    quad::Grid g = quad::panel_grid(breaks, 14);

    cplx head = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        double x = g.x[i];
        cplx term = g.w[i] * specfun::hyp2f1(alpha, beta, c, -lambda * lambda * x * x, policy) *
                        specfun::jbessel(nu, x * y, policy) * std::pow(x, nu + 1.0) -
                    comp;
        cplx next = head + term;
        comp = (next - head) - term;
        head = next;
    }

    // tail beyond T: inverse-argument expansion of the 2F1 times the J
    // asymptotics, each oscillatory moment by repeated integration by parts
    auto Ifun = [&](cplx p, int sgn) -> cplx {
        cplx iy(0.0, sgn * y);
        cplx eiTy = std::exp(cplx(0.0, sgn * T * y));
        cplx I = 0.0;
        for (int q = 13; q >= 0; --q) {
            cplx e = p - double(q);
            I = -std::pow(cplx(T, 0.0), e) * eiTy / iy - e / iy * I;
        }
        return I;
    };

    double mu4 = 4.0 * nu * nu;
    double phi0 = nu * pi / 2.0 + pi / 4.0;
    double p2 = (mu4 - 1.0) * (mu4 - 9.0) / (2.0 * std::pow(8.0 * y, 2));
    double q1 = (mu4 - 1.0) / (8.0 * y);
    double q3 = (mu4 - 1.0) * (mu4 - 9.0) * (mu4 - 25.0) / (6.0 * std::pow(8.0 * y, 3));
    double front = std::sqrt(2.0 / (pi * y));

    cplx tail = 0.0;
    for (int side = 0; side < 2; ++side) {
        cplx v = side == 0 ? alpha : beta;
        cplx o = side == 0 ? beta : alpha;
        cplx Cw = gamma(o - v) * gamma(c) * rgamma(o) * rgamma(c - v);
        cplx dq = 1.0;
        for (int q = 0; q <= 2; ++q) {
            if (q > 0) {
                cplx qm(double(q - 1), 0.0);
                dq *= (v + qm) * (v - c + 1.0 + qm) / ((v - o + 1.0 + qm) * (qm + 1.0));
            }
            cplx coef = Cw * std::pow(cplx(lambda, 0.0), -2.0 * v - 2.0 * double(q)) * dq *
                        (q % 2 ? -1.0 : 1.0);
            cplx e = cplx(nu + 0.5, 0.0) - 2.0 * v - 2.0 * double(q);
            cplx bp = std::exp(cplx(0.0, -phi0)) *
                      (Ifun(e, 1) - p2 * Ifun(e - 2.0, 1) +
                       cplx(0.0, 1.0) * (q1 * Ifun(e - 1.0, 1) - q3 * Ifun(e - 3.0, 1)));
            cplx bm = std::exp(cplx(0.0, phi0)) *
                      (Ifun(e, -1) - p2 * Ifun(e - 2.0, -1) -
                       cplx(0.0, 1.0) * (q1 * Ifun(e - 1.0, -1) - q3 * Ifun(e - 3.0, -1)));
            tail += coef * front * 0.5 * (bp + bm);
        }
    }

    FormulaCheck out;
    out.lhs = head + tail;
    cplx kb = specfun::ktilde(ab, y / lambda, policy) * std::pow(cplx(0.5 * y / lambda, 0.0), ab);
    out.rhs = std::pow(cplx(2.0, 0.0), cplx(nu + 2.0, 0.0) - alpha - beta) * gamma(c) *
              std::pow(cplx(lambda, 0.0), -(alpha + beta)) * rgamma(alpha) * rgamma(beta) *
              std::pow(cplx(y, 0.0), alpha + beta - cplx(nu + 2.0, 0.0)) * kb;
    out.rel_err = std::abs(out.lhs - out.rhs) / std::abs(out.rhs);
    out.pass = out.rel_err <= tol;
    return out;
}

namespace {

// int_0^S' x^{mu+nu+1} J_mu(a x) K_nu(b x) dx with S' set by the K decay
cplx jk_integral(double mu, cplx nu, double a, double b, const PrecisionPolicy& policy) {
    double S = (45.0 + 8.0 * std::max(0.0, mu + nu.real())) / b;
    std::vector<double> breaks;
    double h0 = std::min(1.0 / b, 0.25 * S);
    breaks.push_back(1e-10 * S);
    while (breaks.back() < h0) breaks.push_back(std::min(h0, breaks.back() * 4.0));
    double w = std::min(3.0 / a, (S - h0) / 8.0);
    int cnt = int(std::ceil((S - h0) / w));
    for (int i = 1; i <= cnt; ++i) breaks.push_back(h0 + (S - h0) * double(i) / double(cnt));
    quad::Grid g = quad::panel_grid(breaks, 12);

    cplx acc = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        double x = g.x[i];
        cplx kv = specfun::ktilde(nu, b * x, policy) * std::pow(cplx(0.5 * b * x, 0.0), nu);
        cplx term = g.w[i] * std::pow(cplx(x, 0.0), cplx(mu + 1.0, 0.0) + nu) *
                        specfun::jbessel(mu, a * x, policy) * kv -
                    comp;
        cplx next = acc + term;
        comp = (next - acc) - term;
        acc = next;
    }
    return acc;
}

} // namespace

FormulaCheck check_hankel_kbessel(double mu, cplx nu, double a, double b, double tol, bool strict,
                                  const PrecisionPolicy& policy) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("check_hankel_kbessel: need a > 0 and b > 0");
    if (mu < -0.5)
        throw std::domain_error("check_hankel_kbessel: order must satisfy mu >= -1/2");
    if (strict && !(mu > std::abs(nu.real()) - 1.0))
        throw std::domain_error("check_hankel_kbessel: strip Re mu > |Re nu| - 1 violated");
    if (!(2.0 * mu + nu.real() - std::abs(nu.real()) + 2.0 > 0.0))
        throw std::domain_error("check_hankel_kbessel: integral diverges at 0");

    FormulaCheck out;
    out.lhs = jk_integral(mu, nu, a, b, policy);
    out.rhs = std::pow(cplx(2.0, 0.0), mu + nu) * std::pow(a, mu) * std::pow(cplx(b, 0.0), nu) *
              gamma(cplx(mu + 1.0, 0.0) + nu) / std::pow(cplx(a * a + b * b, 0.0), cplx(mu + 1.0, 0.0) + nu);
    out.rel_err = std::abs(out.lhs - out.rhs) / std::abs(out.rhs);
    out.pass = out.rel_err <= tol;
    return out;
}

cplx kernel_closed_form(cplx sigma, cplx tau, int k, int n, int m, double xi, double eta) {
    int d = n - m;
    int mu = 2 * k + d;
    cplx a3 = (double(mu) - sigma + tau) / 4.0, b3 = (double(mu) - sigma - tau) / 4.0;
    cplx cst = std::pow(cplx(2.0, 0.0), (sigma - tau + double(m)) / 2.0) * ipow_minus(k) *
               gamma(cplx(0.5 * mu, 0.0)) * gamma((double(m) - tau) / 2.0) * rgamma(a3) * rgamma(b3);
    return cst * std::pow(cplx(eta, 0.0), -(sigma + tau + double(mu)) / 2.0) *
           std::pow(cplx(xi * xi + eta * eta, 0.0), -(double(m) - tau) / 2.0);
}

KernelChainReport noncompact_kernel_check(cplx sigma, cplx tau, int k, int n, int m, double tol,
                                          const PrecisionPolicy& policy) {
    int d = n - m;
    if (d < 1 || m < 1) throw std::domain_error("noncompact_kernel_check: need m >= 1 and n > m");
    int mu = 2 * k + d;
    double nuf = 0.5 * mu - 1.0;
    cplx a3 = (double(mu) - sigma + tau) / 4.0, b3 = (double(mu) - sigma - tau) / 4.0;

    KernelChainReport rep;

    FormulaCheck f1 = check_hankel_hyp2f1(a3, b3, nuf, 1.25, 1.2, tol, policy);
    FormulaCheck f2 = check_hankel_hyp2f1(a3, b3, nuf, 0.625, 2.3, tol, policy);
    rep.fiber = f1.rel_err >= f2.rel_err ? f1 : f2;

    double mub = 0.5 * double(m - 2);
    cplx nub = -tau / 2.0;
    FormulaCheck g1 = check_hankel_kbessel(mub, nub, 0.9, 1.1, tol, false, policy);
    FormulaCheck g2 = check_hankel_kbessel(mub, nub, 1.7, 2.2, tol, false, policy);
    rep.base = g1.rel_err >= g2.rel_err ? g1 : g2;

    // semi-numeric composition: closed fiber output, numeric base integral
    auto Knum = [&](double xi, double eta) -> cplx {
        cplx C1 = ipow_minus(k) * std::pow(cplx(2.0, 0.0), cplx(nuf + 2.0, 0.0) - a3 - b3) *
                  gamma(cplx(nuf + 1.0, 0.0)) * rgamma(a3) * rgamma(b3) *
                  std::pow(cplx(eta, 0.0), a3 + b3 - 2.0 * nuf - 2.0);
        return C1 * std::pow(xi, -mub) * jk_integral(mub, nub, xi, eta, policy);
    };

    rep.slope_fit = std::log(std::abs(Knum(2.0, 0.2) / Knum(2.0, 0.1))) / std::log(2.0);
    rep.slope_closed = std::log(std::abs(kernel_closed_form(sigma, tau, k, n, m, 2.0, 0.2) /
                                         kernel_closed_form(sigma, tau, k, n, m, 2.0, 0.1))) /
                       std::log(2.0);
    cplx pw = a3 + b3 - 2.0 * nuf - 2.0 - tau / 2.0;
    rep.slope_limit_dev = std::abs(pw + (sigma + tau + double(mu)) / 2.0);

    double xi0 = 1.3, eta0 = 1.4;
    rep.const_fit = Knum(xi0, eta0) *
                    std::pow(cplx(xi0 * xi0 + eta0 * eta0, 0.0), (double(m) - tau) / 2.0) *
                    std::pow(cplx(eta0, 0.0), (sigma + tau + double(mu)) / 2.0);
    rep.const_closed = std::pow(cplx(2.0, 0.0), (sigma - tau + double(m)) / 2.0) * ipow_minus(k) *
                       gamma(cplx(0.5 * mu, 0.0)) * gamma((double(m) - tau) / 2.0) * rgamma(a3) *
                       rgamma(b3);
    rep.const_fit_err = std::abs(rep.const_fit - rep.const_closed) / std::abs(rep.const_closed);

    rep.pass = rep.fiber.pass && rep.base.pass && std::abs(rep.slope_fit - rep.slope_closed) <= 2e-3 &&
               rep.slope_limit_dev <= 1e-10 && rep.const_fit_err <= tol;
    return rep;
}

} // namespace hyperg::branching
