#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "hyperg/branching.hpp"
#include "hyperg/polynomial.hpp"
#include "hyperg/quadrature.hpp"

using cplx = std::complex<double>;
using namespace hyperg;
using poly::Polynomial;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("sphere monomial moments") {
    // S^2: int y1^2 y2^2 = 4 pi / 15, odd powers vanish
    CHECK(std::abs(branching::sphere_monomial_integral(3, {2, 2, 0, 0}) - 4.0 * pi / 15.0) <
          1e-14);
    CHECK(branching::sphere_monomial_integral(3, {1, 2, 0, 0}) == 0.0);
    CHECK(std::abs(branching::sphere_monomial_integral(3, {0, 0, 0, 0}) - 4.0 * pi) < 1e-13);
    // S^1: int y1^4 = 3 pi / 4
    CHECK(std::abs(branching::sphere_monomial_integral(2, {4, 0, 0, 0}) - 3.0 * pi / 4.0) <
          1e-14);
    // S^0: two points
    CHECK(std::abs(branching::sphere_monomial_integral(1, {2, 0, 0, 0}) - 2.0) < 1e-15);
    CHECK(branching::sphere_monomial_integral(1, {3, 0, 0, 0}) == 0.0);
}

TEST_CASE("harmonic projection removes the laplacian") {
    auto x = Polynomial::variable(0);
    auto h = branching::harmonic_projection(x * x, 3, 2);
    // x^2 - rho^2/3
    std::vector<double> at = {0.7, -0.4, 1.1};
    double rho2 = at[0] * at[0] + at[1] * at[1] + at[2] * at[2];
    CHECK(std::abs(h.eval(at) - cplx(at[0] * at[0] - rho2 / 3.0)) < 1e-13);
    CHECK(h.laplacian(3).is_zero(1e-13));

    auto q = x * x * x;
    auto h3 = branching::harmonic_projection(q, 3, 3);
    CHECK(h3.laplacian(3).is_zero(1e-12));
}

TEST_CASE("harmonic bases are orthonormal on the sphere") {
    for (auto [d, k, want] : {std::tuple<int, int, size_t>{3, 2, 5},
                              {3, 3, 7},
                              {2, 3, 2},
                              {2, 0, 1},
                              {1, 0, 1},
                              {1, 1, 1}}) {
        auto hb = branching::harmonic_basis(d, k);
        REQUIRE(hb.basis.size() == want);
        for (size_t i = 0; i < hb.basis.size(); ++i) {
            CHECK(hb.basis[i].laplacian(d).is_zero(1e-11));
            for (size_t j = 0; j <= i; ++j) {
                double g = branching::sphere_inner(hb.basis[i], hb.basis[j], d).real();
                CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) < 1e-11);
            }
        }
    }
    // no harmonics of degree >= 2 on the two-point sphere
    CHECK(branching::harmonic_basis(1, 2).basis.empty());
}

TEST_CASE("circle harmonics match the trigonometric family") {
    auto hb = branching::harmonic_basis(2, 3);
    REQUIRE(hb.basis.size() == 2);
    for (double th : {0.3, 1.4, 4.0}) {
        std::vector<double> y = {std::cos(th), std::sin(th)};
        double re = hb.basis[0].eval(y).real();
        double im = hb.basis[1].eval(y).real();
        // basis order between the two span vectors is a convention
        double want_re = std::cos(3.0 * th) / std::sqrt(pi);
        double want_im = std::sin(3.0 * th) / std::sqrt(pi);
        bool direct = std::abs(re - want_re) < 1e-12 && std::abs(im - want_im) < 1e-12;
        bool flipped = std::abs(re - want_im) < 1e-12 && std::abs(im - want_re) < 1e-12;
        CHECK((direct || flipped));
    }
}

TEST_CASE("isotypic projection extracts a factored component") {
    // F(x, y) = g(x0) h(y), h a degree-2 harmonic on R^3: the k=2 projection
    // against h returns g(x0), independent of the fiber radius
    auto hb = branching::harmonic_basis(3, 2);
    const auto& h = hb.basis[1];
    auto F = [&h](std::span<const double> z) {
        std::vector<double> y(z.begin() + 1, z.end());
        return cplx(std::exp(-z[0] * z[0])) * h.eval(y);
    };
    auto sph = quad::sphere_rule(3, 16);
    for (double r : {0.4, 1.0, 2.3}) {
        std::vector<double> x = {0.8};
        cplx g = branching::isotypic_project_at(F, 1, 3, x, r, h, 2, sph);
        CHECK(std::abs(g - cplx(std::exp(-0.64))) < 1e-10);
    }
}

TEST_CASE("hankel transform: gaussian self-reciprocity") {
    auto gauss = [](double s) { return cplx(std::exp(-0.5 * s * s)); };
    for (double nu : {0.0, 0.5, 1.5}) {
        auto hv = branching::hankel_transform(nu, gauss, {0.5, 1.5}, 12.0);
        CHECK(std::abs(hv[0] - cplx(std::exp(-0.125))) < 1e-8);
        CHECK(std::abs(hv[1] - cplx(std::exp(-1.125))) < 1e-8);
    }
}

TEST_CASE("fourier transform factors through the hankel transform") {
    auto gauss = [](double s) { return cplx(std::exp(-0.5 * s * s)); };
    CHECK(branching::fourier_factorization_err(2, 1, gauss, 12.0) < 1e-6);
    CHECK(branching::fourier_factorization_err(3, 0, gauss, 12.0) < 1e-6);
}

TEST_CASE("closed-form hankel integral identities") {
    auto c1 = branching::check_hankel_hyp2f1(cplx(2.0), cplx(1.2), 0.5, 1.0, 1.0);
    CHECK(c1.pass);
    CHECK(c1.rel_err < 1e-5);

    auto c2 = branching::check_hankel_kbessel(1.0, cplx(0.3), 1.0, 2.0, 1e-6);
    CHECK(c2.pass);
    CHECK(c2.rel_err < 1e-6);

    CHECK_THROWS_AS((void)branching::check_hankel_hyp2f1(cplx(0.4), cplx(0.45), 1.2, 1.0, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS((void)branching::check_hankel_kbessel(-0.2, cplx(1.4), 1.0, 2.0),
                    std::domain_error);
    // nearly integer parameter difference is rejected (tail expansion breaks down)
    CHECK_THROWS_AS((void)branching::check_hankel_hyp2f1(cplx(2.0), cplx(1.0), 0.5, 1.0, 1.0),
                    std::domain_error);
}

TEST_CASE("composed kernel closed form is a pure power law times a base factor") {
    cplx sig(-3.0), tau(-1.2);
    int k = 0, n = 2, m = 1;
    double mu = 2.0 * k + n - m;
    // v * eta^{(sigma+tau+mu)/2} * (xi^2+eta^2)^{(m-tau)/2} must be constant
    auto stripped = [&](double xi, double eta) {
        cplx v = branching::kernel_closed_form(sig, tau, k, n, m, xi, eta);
        return v * std::pow(eta, (sig + tau + mu) / 2.0) *
               std::pow(xi * xi + eta * eta, (cplx(m) - tau) / 2.0);
    };
    cplx c1 = stripped(1.3, 0.2);
    cplx c2 = stripped(0.6, 1.1);
    cplx c3 = stripped(2.1, 0.05);
    CHECK(std::abs(c1 - c2) < 1e-11 * std::abs(c1));
    CHECK(std::abs(c1 - c3) < 1e-11 * std::abs(c1));
}

TEST_CASE("spherical vector fourier transform keeps its shape") {
    auto rep = branching::spherical_vector_ft_check(cplx(1.0), 2);
    CHECK(rep.max_rel_dev < 1e-4);
    CHECK(rep.const_rel_err < 1e-4);
}

TEST_CASE("isotypic plancherel balance at reduced resolution") {
    auto gaussF = [](std::span<const double> z) {
        double s = 0.0;
        for (double v : z) s += v * v;
        return cplx(std::exp(-0.5 * s));
    };
    branching::BranchingConfig bc;
    bc.rx_panels = 16;
    bc.rx_pts = 8;
    bc.rx_min = 1e-3;
    bc.rx_max = 6.0;
    bc.ry_panels = 24;
    bc.ry_pts = 8;
    bc.ry_max = 8.0;
    bc.t_panels = 40;
    bc.t_pts = 10;
    bc.t_min = 1e-10;
    bc.t_max = 3e4;
    bc.nu_panels = 24;
    bc.nu_pts = 10;
    bc.nu_max = 30.0;
    bc.sphere_order = 12;
    auto rep = branching::full_plancherel_check(2, 1, cplx(1.5), gaussF, 2, 1e-2, false, bc);
    CHECK(rep.census_ok);
    CHECK(rep.defect < 1e-2);
    REQUIRE(!rep.rows.empty());
    CHECK(rep.rows[0].atoms_found == 1);
    CHECK(rep.rows[0].taus[0] == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("atom census only mode uses the index formula") {
    auto gaussF = [](std::span<const double> z) {
        double s = 0.0;
        for (double v : z) s += v * v;
        return cplx(std::exp(-0.5 * s));
    };
    auto rep = branching::full_plancherel_check(3, 2, cplx(4.0), gaussF, 6, 1e-2, true);
    CHECK(rep.census_only);
    CHECK(rep.census_ok);
    for (const auto& r : rep.rows) {
        if (r.k == 0) {
            REQUIRE(r.atoms_found == 1);
            CHECK(r.taus[0] == doctest::Approx(3.0).epsilon(1e-12));
        } else if (r.k == 1) {
            REQUIRE(r.atoms_found == 1);
            CHECK(r.taus[0] == doctest::Approx(1.0).epsilon(1e-12));
        } else {
            CHECK(r.atoms_found == 0);
        }
    }
}
