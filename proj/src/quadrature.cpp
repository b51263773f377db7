#include "hyperg/quadrature.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace hyperg::quad {

namespace {
const double pi = 3.14159265358979323846;
}

const GLRule& gauss_legendre(int n) {
    static std::map<int, GLRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");

    GLRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (double(i) + 0.75) / (double(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
                p0 = p1;
                p1 = p2;
            }
            dp = double(n) * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return cache.emplace(n, std::move(r)).first->second;
}

Grid panel_grid(const std::vector<double>& breaks, int pts) {
    if (breaks.size() < 2) throw std::invalid_argument("panel_grid: need >= 2 breakpoints");
    const GLRule& gl = gauss_legendre(pts);
    Grid g;
    g.x.reserve((breaks.size() - 1) * pts);
    g.w.reserve((breaks.size() - 1) * pts);
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        double a = breaks[p], b = breaks[p + 1];
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < pts; ++i) {
            g.x.push_back(mid + half * gl.x[i]);
            g.w.push_back(half * gl.w[i]);
        }
    }
    return g;
}

Grid uniform_panels(double a, double b, int panels, int pts) {
    std::vector<double> breaks(panels + 1);
    for (int i = 0; i <= panels; ++i)
        breaks[i] = a + (b - a) * double(i) / double(panels);
    return panel_grid(breaks, pts);
}

Grid geometric_panels(double a, double b, int panels, int pts) {
    if (!(a > 0.0 && b > a)) throw std::invalid_argument("geometric_panels: need 0 < a < b");
    std::vector<double> breaks(panels + 1);
    double la = std::log(a), lb = std::log(b);
    for (int i = 0; i <= panels; ++i)
        breaks[i] = std::exp(la + (lb - la) * double(i) / double(panels));
    breaks.front() = a;
    breaks.back() = b;
    return panel_grid(breaks, pts);
}

SphereRule sphere_rule(int d, int order) {
    SphereRule r;
    r.dim = d;
    if (d == 1) {
        r.x = {{1.0, 0.0, 0.0}, {-1.0, 0.0, 0.0}};
        r.w = {1.0, 1.0};
    } else if (d == 2) {
        int n = std::max(8, 2 * order + 4);
        double w = 2.0 * pi / double(n);
        for (int i = 0; i < n; ++i) {
            double th = 2.0 * pi * double(i) / double(n);
            r.x.push_back({std::cos(th), std::sin(th), 0.0});
            r.w.push_back(w);
        }
    } else if (d == 3) {
        int nt = std::max(4, order / 2 + 2);
        int np = std::max(8, order + 4);
        const GLRule& gl = gauss_legendre(nt);
        double wp = 2.0 * pi / double(np);
        for (int i = 0; i < nt; ++i) {
            double ct = gl.x[i];
            double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
            for (int j = 0; j < np; ++j) {
                double ph = 2.0 * pi * double(j) / double(np);
                r.x.push_back({st * std::cos(ph), st * std::sin(ph), ct});
                r.w.push_back(gl.w[i] * wp);
            }
        }
    } else {
        throw std::invalid_argument("sphere_rule: d must be 1, 2 or 3");
    }
    return r;
}

} // namespace hyperg::quad
