#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "hyperg/spectrum.hpp"

using cplx = std::complex<double>;
using namespace hyperg;
using sl::SpectralParams;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("atom locations follow the arithmetic progression") {
    auto a51 = spectrum::discrete_points(SpectralParams(cplx(5.0), 1));
    REQUIRE(a51.size() == 1);
    CHECK(a51[0].j == 0);
    CHECK(a51[0].tau == doctest::Approx(4.0).epsilon(1e-14));

    auto a61 = spectrum::discrete_points(SpectralParams(cplx(6.0), 1));
    REQUIRE(a61.size() == 2);
    CHECK(a61[0].tau == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(a61[1].tau == doctest::Approx(1.0).epsilon(1e-14));

    CHECK(spectrum::discrete_points(SpectralParams(cplx(0.0, 3.0), 2)).empty());
    CHECK(spectrum::discrete_points(SpectralParams(cplx(1.5), 3)).empty());

    auto a414 = spectrum::discrete_points(SpectralParams(cplx(4.1), 4));
    REQUIRE(a414.size() == 1);
    CHECK(a414[0].tau == doctest::Approx(0.1).epsilon(1e-12));

    // boundary: sigma - mu = 4 j_edge exactly excludes the edge index
    auto a52 = spectrum::discrete_points(SpectralParams(cplx(5.0), 1));
    for (const auto& at : a52) CHECK(at.tau > 0.0);
}

TEST_CASE("atom masses: anchors and residue oracle") {
    SpectralParams p51(cplx(5.0), 1);
    CHECK(std::abs(spectrum::discrete_weight(p51, 0) - 0.75) < 1e-10);

    SpectralParams p61(cplx(6.0), 1);
    CHECK(std::abs(spectrum::discrete_weight(p61, 1) - 1.0 / (3.0 * pi)) <
          1e-10 / (3.0 * pi));

    for (auto [sig, mu, j] : {std::tuple<double, int, int>{5.0, 1, 0},
                              {6.0, 1, 0},
                              {6.0, 1, 1},
                              {4.1, 4, 0}}) {
        SpectralParams p(cplx(sig), mu);
        double w = spectrum::discrete_weight(p, j);
        double o = spectrum::norm_weight_oracle(p, j);
        CHECK(w > 0.0);
        CHECK(std::abs(w - o) / o < 1e-6);
    }

    // residue oracle, including the degenerate (5,1,0) where the collision
    // halving applies
    for (auto [sig, mu, j] : {std::tuple<double, int, int>{5.0, 1, 0},
                              {6.0, 1, 0},
                              {6.0, 1, 1},
                              {4.1, 4, 0}}) {
        SpectralParams p(cplx(sig), mu);
        double w = spectrum::discrete_weight(p, j);
        double o = spectrum::residue_weight_oracle(p, j);
        CHECK(std::abs(w - o) / o < 1e-6);
    }

    // epsilon-shifted evaluation agrees with the pole-free form
    SpectralParams p(cplx(6.0), 1);
    for (int j : {0, 1})
        CHECK(std::abs(spectrum::discrete_weight_eps_shift(p, j) -
                       spectrum::discrete_weight(p, j)) < 1e-6);
}

TEST_CASE("continuous density: positivity, endpoint, coherence") {
    for (auto [sig, mu] : {std::pair<cplx, int>{cplx(3.5), 2},
                           {cplx(0.0, 2.0), 2},
                           {cplx(1.5), 5}}) {
        SpectralParams p(sig, mu);
        CHECK(spectrum::continuous_density(p, 0.0) == 0.0);
    }
    // threshold: (sigma-mu)/4 integer leaves a positive nu -> 0 limit
    SpectralParams p51(cplx(5.0), 1);
    double lim = spectrum::continuous_density(p51, 0.0);
    CHECK(lim == doctest::Approx(1.0 / (8.0 * pi)).epsilon(1e-12));
    CHECK(spectrum::continuous_density(p51, 1e-5) == doctest::Approx(lim).epsilon(1e-6));

    for (auto [sig, mu] : {std::pair<cplx, int>{cplx(5.0), 1},
                           {cplx(3.5), 2},
                           {cplx(0.0, 2.0), 2},
                           {cplx(1.5), 5}}) {
        SpectralParams p(sig, mu);
        for (double nu : {0.4, 1.9, 6.3, 21.0}) {
            double d = spectrum::continuous_density(p, nu);
            CHECK(d > 0.0);
            double viaLam = spectrum::spectral_density_lambda(p, nu * nu / 16.0) * nu / 8.0;
            CHECK(std::abs(d - viaLam) / d < 1e-10);
        }
    }
}

TEST_CASE("measure assembly and integration plumbing") {
    SpectralParams p(cplx(6.0), 1);
    auto meas = spectrum::plancherel_measure(p);
    REQUIRE(meas.atoms.size() == 2);
    CHECK(meas.atoms[0].weight == doctest::Approx(spectrum::discrete_weight(p, 0)));
    CHECK(meas.density(1.3) == doctest::Approx(spectrum::continuous_density(p, 1.3)));

    auto grid = spectrum::nu_grid(40.0, 64, 16);
    REQUIRE(grid.nu.size() == grid.w.size());
    CHECK(grid.nu_max == doctest::Approx(40.0));
    double s = 0.0;
    for (size_t i = 0; i < grid.nu.size(); ++i) s += grid.w[i] * std::exp(-grid.nu[i]);
    CHECK(std::abs(s - 1.0) < 1e-12); // integral of e^{-nu} on [0, 40]

    // measure_integrate matches a manual sum on the same nodes
    auto h = [](const spectrum::SpectrumPoint& pt) {
        return cplx(std::exp(-std::abs(pt.tau)));
    };
    auto res = spectrum::measure_integrate(meas, h, grid);
    CHECK(std::isfinite(res.value.real()));
    CHECK(res.tail_estimate >= 0.0);
}
