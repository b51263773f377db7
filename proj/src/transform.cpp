#include "hyperg/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperg/gamma.hpp"
#include "hyperg/hyp2f1.hpp"

namespace hyperg::transform {

using specfun::hyp2f1;

QuadratureGrid build_grid(const GridConfig& config) {
    QuadratureGrid g;
    g.config = config;
    g.t = quad::geometric_panels(config.t_min, config.t_max, config.t_panels, config.t_pts);
    g.nu = spectrum::nu_grid(config.nu_max, config.nu_panels, config.nu_pts);
    return g;
}

namespace {

// f(t) t^{(mu-2)/2} (1+t)^{-sigma/2} at the grid nodes, quadrature weights folded in
std::vector<cplx> weighted_samples(const SpectralParams& p, const std::function<cplx(double)>& f,
                                   const quad::Grid& tg) {
    std::vector<cplx> wf(tg.x.size());
    double te = 0.5 * (double(p.mu) - 2.0);
    cplx se = -0.5 * p.sigma;
    for (size_t i = 0; i < tg.x.size(); ++i) {
        double t = tg.x[i];
        wf[i] = tg.w[i] * f(t) * std::pow(t, te) * std::pow(cplx(1.0 + t, 0.0), se);
    }
    return wf;
}

cplx transform_at(const SpectralParams& p, cplx tau, const quad::Grid& tg,
                  const std::vector<cplx>& wf, const PrecisionPolicy& policy) {
    auto tr = sl::hyper_triple(p, tau);
    cplx acc = 0.0;
    cplx comp = 0.0; // Kahan
    for (size_t i = 0; i < tg.x.size(); ++i) {
        cplx term = hyp2f1(tr.a, tr.b, tr.c, -tg.x[i], policy) * wf[i];
        cplx y = term - comp;
        cplx s = acc + y;
        comp = (s - acc) - y;
        acc = s;
    }
    return acc;
}

} // namespace

SpectralFunction forward(const SpectralParams& p, const std::function<cplx(double)>& f,
                         const QuadratureGrid& grid, const PrecisionPolicy& policy) {
    SpectralFunction out{p, spectrum::plancherel_measure(p), grid.nu, {}, {}, false, 0.0};
    auto wf = weighted_samples(p, f, grid.t);

    out.atom_values.reserve(out.measure.atoms.size());
    for (const auto& atom : out.measure.atoms)
        out.atom_values.push_back(transform_at(p, cplx(atom.tau, 0.0), grid.t, wf, policy));

    out.cont_values.resize(grid.nu.nu.size());
    for (size_t i = 0; i < grid.nu.nu.size(); ++i)
        out.cont_values[i] = transform_at(p, cplx(0.0, grid.nu.nu[i]), grid.t, wf, policy);

    double tmx = grid.config.t_max;
    out.tail_magnitude = std::abs(f(tmx)) * std::pow(tmx, 0.5 * (double(p.mu) - 2.0)) *
                         std::pow(1.0 + tmx, -0.5 * p.sigma.real());
    out.tail_warning = out.tail_magnitude > 1e-10;
    return out;
}

std::vector<SpectralFunction> forward_multi(const SpectralParams& p,
                                            const std::vector<std::function<cplx(double)>>& fs,
                                            const QuadratureGrid& grid,
                                            const PrecisionPolicy& policy) {
    auto measure = spectrum::plancherel_measure(p);
    std::vector<SpectralFunction> out(fs.size(), SpectralFunction{p, measure, grid.nu, {}, {}, false, 0.0});
    std::vector<std::vector<cplx>> wf(fs.size());
    for (size_t q = 0; q < fs.size(); ++q) {
        out[q].atom_values.resize(measure.atoms.size());
        out[q].cont_values.resize(grid.nu.nu.size());
        wf[q] = weighted_samples(p, fs[q], grid.t);
        double tmx = grid.config.t_max;
        out[q].tail_magnitude = std::abs(fs[q](tmx)) *
                                std::pow(tmx, 0.5 * (double(p.mu) - 2.0)) *
                                std::pow(1.0 + tmx, -0.5 * p.sigma.real());
        out[q].tail_warning = out[q].tail_magnitude > 1e-10;
    }
    // one hypergeometric row per spectrum point, shared across all inputs
    std::vector<cplx> row(grid.t.x.size());
    auto fill_row = [&](cplx tau) {
        auto tr = sl::hyper_triple(p, tau);
        for (size_t i = 0; i < grid.t.x.size(); ++i)
            row[i] = hyp2f1(tr.a, tr.b, tr.c, -grid.t.x[i], policy);
    };
    auto dot = [&](const std::vector<cplx>& w) {
        cplx acc = 0.0, comp = 0.0;
        for (size_t i = 0; i < row.size(); ++i) {
            cplx y = row[i] * w[i] - comp;
            cplx s = acc + y;
            comp = (s - acc) - y;
            acc = s;
        }
        return acc;
    };
    for (size_t j = 0; j < measure.atoms.size(); ++j) {
        fill_row(cplx(measure.atoms[j].tau, 0.0));
        for (size_t q = 0; q < fs.size(); ++q) out[q].atom_values[j] = dot(wf[q]);
    }
    for (size_t i = 0; i < grid.nu.nu.size(); ++i) {
        fill_row(cplx(0.0, grid.nu.nu[i]));
        for (size_t q = 0; q < fs.size(); ++q) out[q].cont_values[i] = dot(wf[q]);
    }
    return out;
}

std::vector<cplx> inverse(const SpectralFunction& g, const std::vector<double>& t_points,
                          const PrecisionPolicy& policy) {
    const auto& p = g.params;
    std::vector<double> rho(g.nu.nu.size());
    for (size_t i = 0; i < rho.size(); ++i) rho[i] = g.measure.density(g.nu.nu[i]);

    std::vector<cplx> out(t_points.size());
    for (size_t k = 0; k < t_points.size(); ++k) {
        double t = t_points[k];
        cplx acc = 0.0;
        for (size_t j = 0; j < g.measure.atoms.size(); ++j) {
            auto tr = sl::hyper_triple(p, cplx(g.measure.atoms[j].tau, 0.0));
            acc += g.measure.atoms[j].weight * g.atom_values[j] *
                   hyp2f1(tr.a, tr.b, tr.c, -t, policy);
        }
        for (size_t i = 0; i < g.nu.nu.size(); ++i) {
            auto tr = sl::hyper_triple(p, cplx(0.0, g.nu.nu[i]));
            acc += g.nu.w[i] * rho[i] * g.cont_values[i] * hyp2f1(tr.a, tr.b, tr.c, -t, policy);
        }
        out[k] = acc;
    }
    return out;
}

double plancherel_norm(const SpectralFunction& g) {
    double acc = 0.0;
    for (size_t j = 0; j < g.measure.atoms.size(); ++j)
        acc += g.measure.atoms[j].weight * std::norm(g.atom_values[j]);
    for (size_t i = 0; i < g.nu.nu.size(); ++i)
        acc += g.nu.w[i] * g.measure.density(g.nu.nu[i]) * std::norm(g.cont_values[i]);
    return acc;
}

double input_norm(const SpectralParams& p, const std::function<cplx(double)>& f,
                  const quad::Grid& tgrid) {
    double te = 0.5 * (double(p.mu) - 2.0);
    double se = -0.5 * p.sigma.real();
    double acc = 0.0;
    for (size_t i = 0; i < tgrid.x.size(); ++i) {
        double t = tgrid.x[i];
        acc += tgrid.w[i] * std::norm(f(t)) * std::pow(t, te) * std::pow(1.0 + t, se);
    }
    return acc;
}

UnitarityReport verify_unitarity(const SpectralParams& p, const std::function<cplx(double)>& f,
                                 const GridConfig& config, double tol,
                                 const PrecisionPolicy& policy) {
    auto grid = build_grid(config);
    auto g = forward(p, f, grid, policy);
    UnitarityReport rep;
    rep.norm_in = input_norm(p, f, grid.t);
    rep.norm_spec = plancherel_norm(g);
    if (rep.norm_in <= 0.0) throw std::invalid_argument("verify_unitarity: zero input norm");
    rep.defect = std::abs(rep.norm_in - rep.norm_spec) / rep.norm_in;
    rep.tail_warning = g.tail_warning;
    rep.pass = rep.defect <= tol;
    return rep;
}

double roundtrip_error(const SpectralParams& p, const std::function<cplx(double)>& f,
                       const QuadratureGrid& grid, const std::vector<double>& t_probes,
                       const PrecisionPolicy& policy) {
    auto g = forward(p, f, grid, policy);
    auto fr = inverse(g, t_probes, policy);
    double sup = 0.0, err = 0.0;
    for (size_t i = 0; i < t_probes.size(); ++i) {
        sup = std::max(sup, std::abs(f(t_probes[i])));
        err = std::max(err, std::abs(fr[i] - f(t_probes[i])));
    }
    if (sup <= 0.0) throw std::invalid_argument("roundtrip_error: zero function");
    return err / sup;
}

std::vector<cplx> atom_eigenfunction_coeffs(const SpectralParams& p, int j) {
    auto atoms = spectrum::discrete_points(p);
    if (j < 0 || size_t(j) >= atoms.size())
        throw std::invalid_argument("atom_eigenfunction_coeffs: index out of range");
    auto tr = sl::hyper_triple(p, atoms[size_t(j)].tau);
    // F(t, tau_j) = 2F1(-j, b; c; -t) is a degree-j polynomial in t
    std::vector<cplx> coef(size_t(j) + 1);
    coef[0] = 1.0;
    for (int r = 0; r < j; ++r)
        coef[size_t(r) + 1] = -coef[size_t(r)] * (tr.a + double(r)) * (tr.b + double(r)) /
                              ((tr.c + double(r)) * double(r + 1));
    return coef;
}

double eigenfunction_orthogonality(const SpectralParams& p, int j, int jp) {
    if (p.sigma.imag() != 0.0)
        throw std::invalid_argument("eigenfunction_orthogonality: sigma must be real");
    auto cj = atom_eigenfunction_coeffs(p, j);
    auto cjp = atom_eigenfunction_coeffs(p, jp);
    double sr = p.sigma.real();
    double mu = double(p.mu);
    // int_0^inf t^{p-1} (1+t)^{-p-q} dt = B(p, q); here p = r+r'+mu/2, q = (sigma-mu)/2-r-r'
    double acc = 0.0;
    for (size_t r = 0; r < cj.size(); ++r) {
        for (size_t rp = 0; rp < cjp.size(); ++rp) {
            double bp = double(r + rp) + 0.5 * mu;
            double bq = 0.5 * (sr - mu) - double(r + rp);
            if (bq <= 0.0)
                throw std::domain_error("eigenfunction_orthogonality: divergent Beta term");
            double beta = std::exp(std::lgamma(bp) + std::lgamma(bq) - std::lgamma(bp + bq));
            acc += cj[r].real() * cjp[rp].real() * beta;
        }
    }
    return acc;
}

cplx atom_continuous_pairing(const SpectralParams& p, int j, double nu, double T,
                             const PrecisionPolicy& policy) {
    if (p.sigma.imag() != 0.0)
        throw std::invalid_argument("atom_continuous_pairing: sigma must be real");
    if (nu <= 0.0) throw std::invalid_argument("atom_continuous_pairing: nu must be positive");
    auto atoms = spectrum::discrete_points(p);
    if (j < 0 || size_t(j) >= atoms.size())
        throw std::invalid_argument("atom_continuous_pairing: index out of range");
    double sr = p.sigma.real();
    double mu = double(p.mu);
    auto trj = sl::hyper_triple(p, atoms[size_t(j)].tau);
    auto trn = sl::hyper_triple(p, cplx(0.0, nu));

    // quadrature over [0, T]
    auto tg = quad::geometric_panels(1e-17, T, 60, 16);
    cplx head = tg.integrate([&](double t) {
        return hyp2f1(trj.a, trj.b, trj.c, -t, policy) * hyp2f1(trn.a, trn.b, trn.c, -t, policy) *
               std::pow(t, 0.5 * (mu - 2.0)) * std::pow(1.0 + t, -0.5 * sr);
    });

    // analytic tail: expand F(t, i nu) by its two 1/t branches,
    // (1+1/t)^{-sigma/2} binomially, and integrate term by term
    auto cj = atom_eigenfunction_coeffs(p, j);
    auto ab = specfun::hyp2f1_connection_coeffs(trn.a, trn.b, trn.c);
    const int M = 12;
    auto branch_series = [&](cplx x) {
        // 2F1(x, x-c+1; x-w+1; u) coefficients, w = the other exponent
        cplx other = (x == trn.a) ? trn.b : trn.a;
        std::vector<cplx> s(M + 1);
        s[0] = 1.0;
        for (int k = 0; k < M; ++k)
            s[size_t(k) + 1] = s[size_t(k)] * (x + double(k)) * (x - trn.c + 1.0 + double(k)) /
                               ((x - other + 1.0 + double(k)) * double(k + 1));
        return s;
    };
    auto pa = branch_series(trn.a);
    auto pb = branch_series(trn.b);
    std::vector<double> binom(size_t(M) + 1);
    binom[0] = 1.0;
    for (int l = 0; l < M; ++l)
        binom[size_t(l) + 1] = binom[size_t(l)] * (-0.5 * sr - double(l)) / double(l + 1);

    cplx tail = 0.0;
    for (size_t r = 0; r < cj.size(); ++r) {
        for (int k = 0; k <= M; ++k) {
            for (int l = 0; k + l <= M; ++l) {
                double sgn = (k % 2 == 0) ? 1.0 : -1.0; // (1/z)^k = (-1)^k t^{-k}
                double base = double(r) + 0.5 * (mu - 2.0) - 0.5 * sr - double(k + l);
                cplx ea = base - trn.a;
                cplx eb = base - trn.b;
                // int_T^inf t^e dt = -T^{e+1}/(e+1), Re(e+1) < 0
                cplx fa = ab.A * pa[size_t(k)] * std::pow(T, ea + 1.0) / (-(ea + 1.0));
                cplx fb = ab.B * pb[size_t(k)] * std::pow(T, eb + 1.0) / (-(eb + 1.0));
                tail += cj[r] * sgn * binom[size_t(l)] * (fa + fb);
            }
        }
    }
    return head + tail;
}

} // namespace hyperg::transform
