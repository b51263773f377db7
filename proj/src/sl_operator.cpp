#include "hyperg/sl_operator.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperg/gamma.hpp"
#include "hyperg/hyp2f1.hpp"

namespace hyperg::sl {

using specfun::gamma;
using specfun::hyp2f1;
using specfun::hyp2f1_derivative;
using specfun::rgamma;

void SpectralParams::validate() const {
    if (mu < 1)
        throw std::invalid_argument("SpectralParams: mu must be a positive integer");
    bool real_pos = (sigma.imag() == 0.0 && sigma.real() > 0.0);
    bool imaginary = (sigma.real() == 0.0);
    if (!real_pos && !imaginary)
        throw std::invalid_argument("SpectralParams: sigma must be real > 0 or purely imaginary");
}

cplx sqrt_lambda(cplx lambda) {
    cplx s = std::sqrt(lambda);
    if (s.imag() < 0.0) s = -s;
    return s;
}

cplx lambda_star(const SpectralParams& p, cplx tau) {
    cplx sm = 0.25 * (p.sigma - cplx(double(p.mu), 0.0));
    return sm * sm - 0.0625 * tau * tau;
}

HypergeometricTriple hyper_triple(const SpectralParams& p, cplx tau) {
    HypergeometricTriple tr;
    cplx mu(double(p.mu), 0.0);
    tr.a = 0.25 * (mu - p.sigma + tau);
    tr.b = 0.25 * (mu - p.sigma - tau);
    tr.c = 0.5 * mu;
    return tr;
}

cplx eigenfunction_F(const SpectralParams& p, cplx tau, double t,
                     const PrecisionPolicy& policy) {
    if (t < 0.0) throw std::domain_error("eigenfunction_F: t must be >= 0");
    HypergeometricTriple tr = hyper_triple(p, tau);
    return hyp2f1(tr.a, tr.b, tr.c, -t, policy);
}

Jet2 eigenfunction_F_jet(const SpectralParams& p, cplx tau, double t,
                         const PrecisionPolicy& policy) {
    HypergeometricTriple tr = hyper_triple(p, tau);
    Jet2 j;
    j.f = hyp2f1(tr.a, tr.b, tr.c, -t, policy);
    // d/dt 2F1(..; -t) = -(ab/c) 2F1(a+1,b+1;c+1;-t)
    cplx f1 = hyp2f1(tr.a + 1.0, tr.b + 1.0, tr.c + 1.0, -t, policy);
    cplx f2 = hyp2f1(tr.a + 2.0, tr.b + 2.0, tr.c + 2.0, -t, policy);
    cplx r1 = tr.a * tr.b / tr.c;
    cplx r2 = r1 * (tr.a + 1.0) * (tr.b + 1.0) / (tr.c + 1.0);
    j.df = -r1 * f1;
    j.d2f = r2 * f2;
    return j;
}

cplx apply_D(const SpectralParams& p, const std::function<Jet2(double)>& u, double t) {
    if (t < 0.0) throw std::domain_error("apply_D: t must be >= 0");
    Jet2 j = u(t);
    cplx mu(double(p.mu), 0.0);
    cplx lin = 0.5 * (mu - p.sigma + 2.0) * t + 0.5 * mu;
    return t * (1.0 + t) * j.d2f + lin * j.df;
}

cplx apply_D_fd(const SpectralParams& p, const std::function<cplx(double)>& u, double t) {
    double h = 1e-4 * std::max(1.0, t);
    if (t > 0.0) h = std::min(h, 0.25 * t);
    auto jet = [&](double tt) {
        Jet2 j;
        cplx um2 = u(tt - 2.0 * h), um1 = u(tt - h), u0 = u(tt);
        cplx up1 = u(tt + h), up2 = u(tt + 2.0 * h);
        j.f = u0;
        j.df = (-up2 + 8.0 * up1 - 8.0 * um1 + um2) / (12.0 * h);
        j.d2f = (-up2 + 16.0 * up1 - 30.0 * u0 + 16.0 * um1 - um2) / (12.0 * h * h);
        return j;
    };
    return apply_D(p, jet, t);
}

double x_of_t(double t) {
    if (t < 0.0) throw std::domain_error("x_of_t: t must be >= 0");
    return 2.0 * std::asinh(std::sqrt(t));
}

double t_of_x(double x) {
    double s = std::sinh(0.5 * x);
    return s * s;
}

cplx gauge_r(const SpectralParams& p, double x) {
    if (!(x > 0.0)) throw std::domain_error("gauge_r: x must be > 0");
    double sh = std::sinh(0.5 * x), ch = std::cosh(0.5 * x);
    cplx es = -0.5 * (double(p.mu) - 1.0);
    cplx ec = 0.5 * (p.sigma - 1.0);
    return std::pow(cplx(sh, 0.0), es) * std::pow(cplx(ch, 0.0), ec);
}

cplx beta_coeff(const SpectralParams& p, double x) {
    if (!(x > 0.0)) throw std::domain_error("beta_coeff: x must be > 0");
    double th = std::tanh(0.5 * x);
    return 0.5 * (double(p.mu) - 1.0) / th - 0.5 * (p.sigma - 1.0) * th;
}

cplx potential_q(const SpectralParams& p, double x) {
    if (!(x > 0.0)) throw std::domain_error("potential_q: x must be > 0");
    double mu = double(p.mu);
    double th = std::tanh(0.5 * x);
    cplx qstar = (mu - 1.0) * (mu - 3.0) / 16.0 / (th * th)
               - (mu * (p.sigma - 2.0) + 1.0) / 8.0
               + (p.sigma + 1.0) * (p.sigma - 1.0) / 16.0 * th * th;
    cplx sm = 0.25 * (p.sigma - mu);
    return qstar - sm * sm;
}

cplx eta1(const SpectralParams& p, cplx lambda, double x, const PrecisionPolicy& policy) {
    if (!(x > 0.0)) throw std::domain_error("eta1: x must be > 0");
    cplx isl = cplx(0.0, 1.0) * sqrt_lambda(lambda);
    cplx sm = 0.25 * (p.sigma - double(p.mu));
    cplx a = -sm + isl, b = -sm - isl, c = 0.5 * double(p.mu);
    double t = t_of_x(x);
    return hyp2f1(a, b, c, -t, policy) / gauge_r(p, x);
}

cplx eta2(const SpectralParams& p, cplx lambda, double x, const PrecisionPolicy& policy) {
    if (!(x > 0.0)) throw std::domain_error("eta2: x must be > 0");
    cplx isl = cplx(0.0, 1.0) * sqrt_lambda(lambda);
    cplx sm = 0.25 * (p.sigma - double(p.mu));
    cplx a = -sm + isl, b = -sm - isl, c = 0.5 * double(p.mu);
    cplx cpar = b - a + 1.0;
    if (specfun::near_nonpositive_integer(cpar, 1e-12))
        throw std::domain_error("eta2: degenerate parameters (b - a + 1 is a non-positive integer)");
    double sh = std::sinh(0.5 * x);
    double zi = -1.0 / (sh * sh);
    cplx pref = std::pow(cplx(sh, 0.0), -2.0 * b);
    return pref * hyp2f1(b, b - c + 1.0, cpar, zi, policy) / gauge_r(p, x);
}

cplx wronskian_eta(const SpectralParams& p, cplx lambda) {
    if (lambda == cplx(0.0, 0.0))
        throw std::domain_error("wronskian_eta: lambda must be nonzero");
    cplx sl = sqrt_lambda(lambda);
    cplx isl = cplx(0.0, 1.0) * sl;
    cplx mu(double(p.mu), 0.0);
    cplx sm = 0.25 * (p.sigma - mu);
    // W = -2 i sqrt(lambda) Gamma(-2 i sqrt(lambda)) Gamma(mu/2)
    //     / (Gamma(-(sigma-mu)/4 - i sqrt(lambda)) Gamma((sigma+mu)/4 - i sqrt(lambda)))
    return -2.0 * isl * gamma(-2.0 * isl) * gamma(0.5 * mu) *
           rgamma(-sm - isl) * rgamma(0.25 * (p.sigma + mu) - isl);
}

EndpointClass classify_endpoint(int mu) {
    if (mu < 1) throw std::invalid_argument("classify_endpoint: mu must be >= 1");
    return mu <= 3 ? EndpointClass::LimitCircle : EndpointClass::LimitPoint;
}

} // namespace hyperg::sl
