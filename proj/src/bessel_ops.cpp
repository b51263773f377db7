#include "hyperg/bessel_ops.hpp"

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "hyperg/hyp2f1.hpp"
#include "hyperg/kbessel.hpp"
#include "hyperg/quadrature.hpp"

namespace hyperg::bessel {

namespace {

double block_norm(std::span<const double> x, size_t lo, size_t hi) {
    double s = 0.0;
    for (size_t i = lo; i < hi && i < x.size(); ++i) s += x[i] * x[i];
    return std::sqrt(s);
}

} // namespace

cplx ClosedFormFunction::eval(std::span<const double> x, const PrecisionPolicy& policy) const {
    double r = block_norm(x, 0, x.size());
    if (r < 1e-12) throw std::domain_error("ClosedFormFunction: singular at the origin");
    cplx acc = 0.0;
    for (const auto& t : terms) {
        cplx radial = specfun::ktilde(t.alpha, r, policy) * std::pow(r, 2.0 * t.a);
        acc += radial * t.p.eval(x);
    }
    return acc;
}

ClosedFormFunction kfinite_vector(cplx sigma, int a, const poly::Polynomial& p, int dim) {
    if (a < 0) throw std::invalid_argument("kfinite_vector: a must be >= 0");
    ClosedFormFunction u;
    u.dim = dim;
    u.terms.push_back({-0.5 * sigma + double(a), a, p});
    return u;
}

ClosedFormFunction derivative(const ClosedFormFunction& u, int j) {
    ClosedFormFunction r;
    r.dim = u.dim;
    for (const auto& t : u.terms) {
        poly::Polynomial xp = t.p.mul_var(j);
        r.terms.push_back({t.alpha + 1.0, t.a, xp * cplx(-0.5)});
        if (t.a > 0) r.terms.push_back({t.alpha, t.a - 1, xp * cplx(2.0 * t.a)});
        poly::Polynomial dp = t.p.derivative(j);
        if (!dp.is_zero()) r.terms.push_back({t.alpha, t.a, dp});
    }
    return r;
}

ClosedFormFunction reduce_orders(const ClosedFormFunction& u) {
    ClosedFormFunction r;
    r.dim = u.dim;
    std::vector<KTerm> work(u.terms);
    while (!work.empty()) {
        KTerm t = work.back();
        work.pop_back();
        if (t.a == 0) {
            r.terms.push_back(t);
            continue;
        }
        work.push_back({t.alpha - 1.0, t.a - 1, t.p * (4.0 * (t.alpha - 1.0))});
        work.push_back({t.alpha - 2.0, t.a - 1, t.p * cplx(4.0)});
    }
    return r;
}

ClosedFormFunction merge(const ClosedFormFunction& u) {
    std::map<std::tuple<double, double, int>, poly::Polynomial> acc;
    for (const auto& t : u.terms)
        acc[{t.alpha.real(), t.alpha.imag(), t.a}] += t.p;
    ClosedFormFunction r;
    r.dim = u.dim;
    for (auto& [key, p] : acc) {
        p.trim();
        if (p.is_zero()) continue;
        r.terms.push_back({cplx(std::get<0>(key), std::get<1>(key)), std::get<2>(key), p});
    }
    return r;
}

ClosedFormFunction bessel_apply(int n, cplx sigma, int j, const ClosedFormFunction& u) {
    if (j < 0 || j >= n) throw std::invalid_argument("bessel_apply: axis out of range");
    auto mul_var = [](const ClosedFormFunction& v, int ax) {
        ClosedFormFunction r;
        r.dim = v.dim;
        for (const auto& t : v.terms) r.terms.push_back({t.alpha, t.a, t.p.mul_var(ax)});
        return r;
    };
    auto add = [](ClosedFormFunction& dst, const ClosedFormFunction& src, cplx scale) {
        for (const auto& t : src.terms) dst.terms.push_back({t.alpha, t.a, t.p * scale});
    };

    ClosedFormFunction dj = derivative(u, j);
    ClosedFormFunction out;
    out.dim = u.dim;
    for (int k = 0; k < n; ++k) {
        ClosedFormFunction dkk = derivative(derivative(u, k), k);
        add(out, mul_var(dkk, j), 1.0);                        // x_j Lap u
        add(out, mul_var(derivative(dj, k), k), -2.0);         // -2 E d_j u
    }
    add(out, dj, -(double(n) - sigma)); // -(n - sigma) d_j u
    return merge(reduce_orders(out));
}

cplx bessel_apply_numeric(int n, cplx sigma, int j,
                          const std::function<cplx(std::span<const double>)>& u,
                          std::span<const double> x, double h_scale) {
    if (j < 0 || j >= n) throw std::invalid_argument("bessel_apply_numeric: axis out of range");
    std::vector<double> base(x.begin(), x.end());
    double r = block_norm(x, 0, x.size());
    double h = h_scale * std::max(1.0, r);
    if (h <= 0.0) throw std::underflow_error("bessel_apply_numeric: step underflow");

    auto at2 = [&](int ax1, double d1, int ax2, double d2) {
        std::vector<double> y = base;
        y[size_t(ax1)] += d1;
        if (ax2 >= 0) y[size_t(ax2)] += d2;
        return u(std::span<const double>(y));
    };
    auto at = [&](int ax, double d) { return at2(ax, d, -1, 0.0); };

    cplx u0 = u(x);
    // per-axis values at -2h, -h, +h, +2h
    std::vector<std::array<cplx, 4>> s(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        s[size_t(k)] = {at(k, -2.0 * h), at(k, -h), at(k, h), at(k, 2.0 * h)};

    auto second = [&](int k) {
        const auto& v = s[size_t(k)];
        return (-v[0] + 16.0 * v[1] - 30.0 * u0 + 16.0 * v[2] - v[3]) / (12.0 * h * h);
    };
    cplx lap = 0.0;
    for (int k = 0; k < n; ++k) lap += second(k);

    const auto& vj = s[size_t(j)];
    cplx dju = (vj[0] - 8.0 * vj[1] + 8.0 * vj[2] - vj[3]) / (12.0 * h);

    // E d_j u = sum_k x_k d_k d_j u
    static const double off[4] = {-2.0, -1.0, 1.0, 2.0};
    static const double cf[4] = {1.0, -8.0, 8.0, -1.0};
    cplx edju = base[size_t(j)] * second(j);
    for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        cplx mixed = 0.0;
        for (int p = 0; p < 4; ++p) {
            cplx djp = 0.0;
            for (int q = 0; q < 4; ++q) djp += cf[q] * at2(k, off[p] * h, j, off[q] * h);
            mixed += cf[p] * djp / (12.0 * h);
        }
        mixed /= 12.0 * h;
        edju += base[size_t(k)] * mixed;
    }

    return base[size_t(j)] * lap - 2.0 * edju - (double(n) - sigma) * dju;
}

std::function<cplx(std::span<const double>)>
lift_profile(cplx sigma, cplx tau, int k, int n, int m,
             const std::function<cplx(std::span<const double>)>& f, const poly::Polynomial& phi,
             const std::function<cplx(double)>& Fprofile) {
    if (m < 1 || m >= n) throw std::invalid_argument("lift_profile: need 1 <= m < n");
    double mu = 2.0 * k + double(n - m);
    cplx expo = 0.25 * (sigma - tau - mu); // |x|^{(sigma-tau-mu)/2} = (|x|^2)^expo
    return [=](std::span<const double> z) {
        if (z.size() != size_t(n)) throw std::invalid_argument("lift: wrong dimension");
        double rx2 = 0.0, ry2 = 0.0;
        for (int i = 0; i < m; ++i) rx2 += z[size_t(i)] * z[size_t(i)];
        for (int i = m; i < n; ++i) ry2 += z[size_t(i)] * z[size_t(i)];
        if (rx2 < 1e-24) throw std::domain_error("lift: x block vanishes");
        double t = ry2 / rx2;
        return std::pow(cplx(rx2, 0.0), expo) * Fprofile(t) * f(z.first(size_t(m))) *
               phi.eval(z.subspan(size_t(m)));
    };
}

std::function<cplx(std::span<const double>)>
lift_psi(cplx sigma, cplx tau, int k, int n, int m,
         const std::function<cplx(std::span<const double>)>& f, const poly::Polynomial& phi,
         const PrecisionPolicy& policy) {
    double mu = 2.0 * k + double(n - m);
    cplx a = 0.25 * (mu - sigma + tau);
    cplx b = 0.25 * (mu - sigma - tau);
    cplx c = 0.5 * mu;
    auto Fh = [=](double t) { return specfun::hyp2f1(a, b, c, -t, policy); };
    return lift_profile(sigma, tau, k, n, m, f, phi, Fh);
}

std::vector<std::vector<double>> annulus_samples(int n, int m, int count, unsigned seed) {
    std::mt19937 rng(seed);
    // 53-bit uniform in [0,1), independent of distribution implementations
    auto u01 = [&]() {
        uint64_t hi = rng(), lo = rng();
        return double(((hi << 21) ^ lo) & ((uint64_t(1) << 53) - 1)) / 9007199254740992.0;
    };
    std::vector<std::vector<double>> pts;
    while (int(pts.size()) < count) {
        std::vector<double> z(static_cast<size_t>(n));
        for (auto& v : z) v = 6.0 * u01() - 3.0;
        double rz = block_norm(z, 0, z.size());
        double rx = block_norm(z, 0, size_t(m));
        if (rz < 0.3 || rz > 3.0 || rx < 0.3) continue;
        pts.push_back(std::move(z));
    }
    return pts;
}

double intertwining_residual(cplx sigma, cplx tau, int k, int n, int m,
                             const ClosedFormFunction& f, const poly::Polynomial& phi, int j,
                             const std::vector<std::vector<double>>& samples,
                             const std::function<cplx(double)>& Fprofile,
                             const PrecisionPolicy& policy) {
    if (j < 0 || j >= m) throw std::invalid_argument("intertwining_residual: axis out of range");
    double mu = 2.0 * k + double(n - m);
    std::function<cplx(double)> Fh = Fprofile;
    if (!Fh) {
        cplx a = 0.25 * (mu - sigma + tau);
        cplx b = 0.25 * (mu - sigma - tau);
        cplx c = 0.5 * mu;
        Fh = [=](double t) { return specfun::hyp2f1(a, b, c, -t, policy); };
    }
    auto feval = [&f, &policy](std::span<const double> x) { return f.eval(x, policy); };
    auto Psi = lift_profile(sigma, tau, k, n, m, feval, phi, Fh);

    ClosedFormFunction Bf = bessel_apply(m, tau, j, f);
    auto Bfeval = [Bf, &policy](std::span<const double> x) { return Bf.eval(x, policy); };
    auto PsiB = lift_profile(sigma, tau, k, n, m, Bfeval, phi, Fh);

    double worst = 0.0;
    for (const auto& pt : samples) {
        std::span<const double> z(pt);
        cplx left = bessel_apply_numeric(n, sigma, j, Psi, z);
        cplx right = PsiB(z);
        double res = std::abs(left - right) / (1.0 + std::abs(Psi(z)));
        worst = std::max(worst, res);
    }
    return worst;
}

cplx weighted_inner_product(int n, cplx sigma, const ClosedFormFunction& u,
                            const ClosedFormFunction& v, const PrecisionPolicy& policy) {
    int deg = 0;
    for (const auto& t : u.terms) deg = std::max(deg, t.p.degree());
    for (const auto& t : v.terms) deg = std::max(deg, t.p.degree());
    auto sph = quad::sphere_rule(n, 2 * deg + 6);
    auto rg = quad::geometric_panels(1e-6, 40.0, 60, 12);

    cplx acc = 0.0;
    std::vector<cplx> cu(u.terms.size()), cv(v.terms.size());
    std::vector<double> pt(static_cast<size_t>(n));
    for (size_t i = 0; i < rg.x.size(); ++i) {
        double r = rg.x[i];
        for (size_t a = 0; a < u.terms.size(); ++a)
            cu[a] = specfun::ktilde(u.terms[a].alpha, r, policy) *
                    std::pow(r, 2.0 * u.terms[a].a);
        for (size_t a = 0; a < v.terms.size(); ++a)
            cv[a] = specfun::ktilde(v.terms[a].alpha, r, policy) *
                    std::pow(r, 2.0 * v.terms[a].a);
        cplx sphere_sum = 0.0;
        for (size_t w = 0; w < sph.w.size(); ++w) {
            for (int d = 0; d < n; ++d) pt[size_t(d)] = r * sph.x[w][size_t(d)];
            cplx uv = 0.0, vv = 0.0;
            for (size_t a = 0; a < u.terms.size(); ++a) uv += cu[a] * u.terms[a].p.eval(pt);
            for (size_t a = 0; a < v.terms.size(); ++a) vv += cv[a] * v.terms[a].p.eval(pt);
            sphere_sum += sph.w[w] * uv * std::conj(vv);
        }
        acc += rg.w[i] * std::pow(r, double(n - 1) - sigma.real()) * sphere_sum;
    }
    return acc;
}

double symmetry_check(int n, cplx sigma, const ClosedFormFunction& f,
                      const ClosedFormFunction& g, int j, const PrecisionPolicy& policy) {
    ClosedFormFunction bf = bessel_apply(n, sigma, j, f);
    ClosedFormFunction bg = bessel_apply(n, sigma, j, g);
    cplx lhs = weighted_inner_product(n, sigma, bf, g, policy);
    cplx rhs = weighted_inner_product(n, sigma, f, bg, policy);
    auto nrm = [&](const ClosedFormFunction& u) {
        return std::sqrt(std::abs(weighted_inner_product(n, sigma, u, u, policy)));
    };
    double scale = nrm(bf) * nrm(g) + nrm(f) * nrm(bg);
    return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + scale + 1e-300);
}

} // namespace hyperg::bessel
