#ifndef HYPERG_QUADRATURE_HPP
#define HYPERG_QUADRATURE_HPP

#include <array>
#include <vector>

namespace hyperg::quad {

struct GLRule {
    std::vector<double> x; // nodes on [-1,1]
    std::vector<double> w;
};

// n-point Gauss-Legendre rule, computed by Newton iteration and cached.
const GLRule& gauss_legendre(int n);

// Nodes and weights of a composite rule; integral ~ sum w[i] f(x[i]).
struct Grid {
    std::vector<double> x;
    std::vector<double> w;

    template <class F> auto integrate(F&& f) const {
        decltype(f(0.0) * 0.0) acc{};
        for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * f(x[i]);
        return acc;
    }
};

// Composite Gauss-Legendre over consecutive [breaks[i], breaks[i+1]].
Grid panel_grid(const std::vector<double>& breaks, int pts_per_panel);

// Equal-width panels on [a, b].
Grid uniform_panels(double a, double b, int panels, int pts_per_panel);

// Log-spaced panels on [a, b], 0 < a < b.  Suited to power-law factors
// t^p near 0 and algebraic tails.
Grid geometric_panels(double a, double b, int panels, int pts_per_panel);

// Quadrature on the unit sphere S^{d-1} in R^d, d in {1,2,3}:
// d=1 the two-point set {-1,+1}; d=2 the trapezoid rule in angle;
// d=3 a product of Gauss-Legendre in cos(theta) and trapezoid in phi.
// Exact for polynomials of total degree <= order.
struct SphereRule {
    int dim = 0;
    std::vector<std::array<double, 3>> x;
    std::vector<double> w;
};
SphereRule sphere_rule(int d, int order);

} // namespace hyperg::quad

#endif
