#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "hyperg/hyp2f1.hpp"
#include "hyperg/sl_operator.hpp"
#include "hyperg/spectrum.hpp"

using cplx = std::complex<double>;
using namespace hyperg;
using sl::SpectralParams;

namespace {
double cdist(cplx a, cplx b) { return std::abs(a - b); }
} // namespace

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(SpectralParams(cplx(5.0), 1));
    CHECK_NOTHROW(SpectralParams(cplx(0.0, 3.0), 2));
    CHECK_NOTHROW(SpectralParams(cplx(1.5), 5));
    CHECK_THROWS_AS(SpectralParams(cplx(5.0), 0), std::invalid_argument);
    CHECK_THROWS_AS(SpectralParams(cplx(-2.0), 1), std::invalid_argument);
    CHECK_THROWS_AS(SpectralParams(cplx(1.0, 2.0), 1), std::invalid_argument);
}

TEST_CASE("spectral coordinate conventions") {
    CHECK(cdist(sl::sqrt_lambda(cplx(4.0)), cplx(2.0)) < 1e-14);
    CHECK(cdist(sl::sqrt_lambda(cplx(-1.0)), cplx(0.0, 1.0)) < 1e-14);
    CHECK(cdist(sl::sqrt_lambda(cplx(-4.0)), cplx(0.0, 2.0)) < 1e-14);

    // lambda_star equals the product of the first two series parameters
    SpectralParams p(cplx(5.0), 2);
    for (cplx tau : {cplx(3.0), cplx(0.0, 1.7), cplx(-0.4)}) {
        auto tr = sl::hyper_triple(p, tau);
        CHECK(cdist(tr.a, (cplx(2.0) - cplx(5.0) + tau) / 4.0) < 1e-14);
        CHECK(cdist(tr.b, (cplx(2.0) - cplx(5.0) - tau) / 4.0) < 1e-14);
        CHECK(cdist(tr.c, cplx(1.0)) < 1e-14);
        CHECK(cdist(sl::lambda_star(p, tau), tr.a * tr.b) < 1e-13);
    }

    // the atom of (5,1) sits at normal-form lambda = -1
    SpectralParams p51(cplx(5.0), 1);
    CHECK(cdist(sl::lambda_star(p51, cplx(4.0)), cplx(0.0)) < 1e-14);
}

TEST_CASE("eigenfunction value and jet") {
    SpectralParams p(cplx(6.0), 1);
    CHECK(cdist(sl::eigenfunction_F(p, cplx(0.0, 2.0), 0.0), cplx(1.0)) < 1e-14);

    // jet derivatives against finite differences
    cplx tau(0.0, 1.3);
    double t = 0.8, h = 1e-5;
    auto jc = sl::eigenfunction_F_jet(p, tau, t);
    cplx fm = sl::eigenfunction_F(p, tau, t - h), fp = sl::eigenfunction_F(p, tau, t + h);
    CHECK(cdist(jc.df, (fp - fm) / (2.0 * h)) < 1e-9);
    CHECK(cdist(jc.d2f, (fp - 2.0 * jc.f + fm) / (h * h)) < 1e-5);
}

TEST_CASE("atom eigenfunctions degenerate to jacobi polynomials") {
    // F(t, tau_j) = j!/((mu/2)_j) P_j^{(mu/2-1, -sigma/2)}(1+2t)
    for (auto [sig, mu] : {std::pair<double, int>{6.0, 1}, {5.0, 2}, {5.0, 3}}) {
        SpectralParams p(cplx(sig), mu);
        auto atoms = spectrum::discrete_points(p);
        REQUIRE(!atoms.empty());
        for (const auto& at : atoms) {
            double poch = 1.0;
            for (int i = 0; i < at.j; ++i) poch *= (mu / 2.0 + i);
            double fact = 1.0;
            for (int i = 2; i <= at.j; ++i) fact *= i;
            for (double t : {0.1, 0.9, 3.3}) {
                cplx F = sl::eigenfunction_F(p, cplx(at.tau), t);
                double P = specfun::jacobi_poly(at.j, mu / 2.0 - 1.0, -sig / 2.0, 1.0 + 2.0 * t);
                CHECK(cdist(F, cplx(fact / poch * P)) < 1e-10 * std::max(1.0, std::abs(F)));
            }
        }
    }
}

TEST_CASE("operator application: analytic jet vs finite differences") {
    SpectralParams p(cplx(1.5), 3);
    auto u_jet = [](double t) {
        double e = std::exp(-t);
        return sl::Jet2{cplx(e * (1.0 + t)), cplx(-e * t), cplx(e * (t - 1.0))};
    };
    auto u_plain = [](double t) { return cplx(std::exp(-t) * (1.0 + t)); };
    for (double t : {0.2, 1.4, 7.0}) {
        cplx a = sl::apply_D(p, u_jet, t);
        cplx b = sl::apply_D_fd(p, u_plain, t);
        CHECK(cdist(a, b) < 1e-6 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("eigenequation residual at spot parameters") {
    SpectralParams p(cplx(0.0, 3.0), 2);
    cplx tau(0.0, 2.7);
    cplx lam = sl::lambda_star(p, tau);
    auto jet = [&](double t) { return sl::eigenfunction_F_jet(p, tau, t); };
    for (double t : {1e-4, 0.5, 20.0, 400.0}) {
        cplx F = jet(t).f;
        cplx r = sl::apply_D(p, jet, t) + lam * F;
        CHECK(std::abs(r) / (1.0 + std::abs(lam * F)) < 1e-9);
    }
}

TEST_CASE("half-line coordinate change") {
    for (double x : {0.3, 1.0, 4.2}) {
        double t = sl::t_of_x(x);
        CHECK(std::abs(t - std::pow(std::sinh(x / 2.0), 2)) < 1e-13 * std::max(1.0, t));
        CHECK(std::abs(sl::x_of_t(t) - x) < 1e-12);
    }
}

TEST_CASE("normal-form solutions satisfy the schroedinger equation") {
    SpectralParams p(cplx(2.5), 1);
    for (cplx lam : {cplx(1.3), cplx(-0.7)}) {
        for (auto which : {0, 1}) {
            auto y = [&](double x) {
                return which == 0 ? sl::eta1(p, lam, x) : sl::eta2(p, lam, x);
            };
            for (double x : {0.7, 1.9, 3.4}) {
                double h = 1e-3;
                cplx d2 = (-y(x - 2 * h) + 16.0 * y(x - h) - 30.0 * y(x) + 16.0 * y(x + h) -
                           y(x + 2 * h)) /
                          (12.0 * h * h);
                cplx res = -d2 + (sl::potential_q(p, x) - lam) * y(x);
                CHECK(std::abs(res) < 1e-6 * std::max(1.0, std::abs(y(x))));
            }
        }
    }
}

TEST_CASE("wronskian is x-independent and matches the closed form") {
    SpectralParams p(cplx(4.0), 1);
    cplx lam(2.2);
    auto W_at = [&](double x) {
        double h = 1e-4;
        auto d = [&](auto f) {
            return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
        };
        auto e1 = [&](double xx) { return sl::eta1(p, lam, xx); };
        auto e2 = [&](double xx) { return sl::eta2(p, lam, xx); };
        return d(e1) * e2(x) - e1(x) * d(e2);
    };
    cplx w1 = W_at(0.8), w2 = W_at(2.6);
    cplx wc = sl::wronskian_eta(p, lam);
    CHECK(cdist(w1, w2) < 1e-7 * std::abs(wc));
    CHECK(cdist(w1, wc) < 1e-6 * std::abs(wc));
}

TEST_CASE("wronskian zero detection at atoms only") {
    SpectralParams p(cplx(5.0), 1);
    // atom at tau = 4, normal-form lambda = -(tau/4)^2 = -1
    CHECK(std::abs(sl::wronskian_eta(p, cplx(-1.0))) < 1e-12);
    CHECK(std::abs(sl::wronskian_eta(p, cplx(-0.8))) > 1e-3);
    CHECK(std::abs(sl::wronskian_eta(p, cplx(-1.2))) > 1e-3);
}

TEST_CASE("endpoint classification by integer parameter") {
    CHECK(sl::classify_endpoint(1) == sl::EndpointClass::LimitCircle);
    CHECK(sl::classify_endpoint(2) == sl::EndpointClass::LimitCircle);
    CHECK(sl::classify_endpoint(3) == sl::EndpointClass::LimitCircle);
    CHECK(sl::classify_endpoint(4) == sl::EndpointClass::LimitPoint);
    CHECK(sl::classify_endpoint(7) == sl::EndpointClass::LimitPoint);
}
