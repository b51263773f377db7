#include "hyperg/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperg::poly {

Polynomial::Polynomial(cplx constant) {
    if (constant != 0.0) terms_[{0, 0, 0, 0}] = constant;
}

Polynomial Polynomial::variable(int j) {
    if (j < 0 || j >= 4) throw std::invalid_argument("Polynomial: variable index");
    Monomial m{0, 0, 0, 0};
    m[size_t(j)] = 1;
    Polynomial p;
    p.terms_[m] = 1.0;
    return p;
}

Polynomial Polynomial::monomial(const Monomial& m, cplx coef) {
    for (int e : m)
        if (e < 0) throw std::invalid_argument("Polynomial: negative exponent");
    Polynomial p;
    if (coef != 0.0) p.terms_[m] = coef;
    return p;
}

Polynomial Polynomial::radius_sq(int dim) {
    Polynomial p;
    for (int j = 0; j < dim; ++j) {
        Monomial m{0, 0, 0, 0};
        m[size_t(j)] = 2;
        p.terms_[m] = 1.0;
    }
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end())
            terms_[m] = c;
        else {
            it->second += c;
            if (it->second == 0.0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * cplx(-1.0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m;
            for (size_t i = 0; i < 4; ++i) m[i] = m1[i] + m2[i];
            r.terms_[m] += c1 * c2;
        }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = (it->second == 0.0) ? r.terms_.erase(it) : std::next(it);
    return r;
}

Polynomial Polynomial::operator*(cplx s) const {
    Polynomial r;
    if (s == 0.0) return r;
    r.terms_ = terms_;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
}

Polynomial Polynomial::derivative(int j) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m[size_t(j)] == 0) continue;
        Monomial d = m;
        d[size_t(j)] -= 1;
        r.terms_[d] += c * double(m[size_t(j)]);
    }
    return r;
}

Polynomial Polynomial::mul_var(int j) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Monomial d = m;
        d[size_t(j)] += 1;
        r.terms_[d] = c;
    }
    return r;
}

Polynomial Polynomial::euler(int dim) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        int deg = 0;
        for (int j = 0; j < dim; ++j) deg += m[size_t(j)];
        if (deg != 0) r.terms_[m] = c * double(deg);
    }
    return r;
}

Polynomial Polynomial::laplacian(int dim) const {
    Polynomial r;
    for (int j = 0; j < dim; ++j) r += derivative(j).derivative(j);
    return r;
}

cplx Polynomial::eval(std::span<const double> x) const {
    cplx acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double v = 1.0;
        bool dead = false;
        for (size_t i = 0; i < 4; ++i) {
            if (m[i] == 0) continue;
            if (i >= x.size()) {
                dead = true; // missing coordinate treated as 0
                break;
            }
            for (int e = 0; e < m[i]; ++e) v *= x[i];
        }
        if (!dead) acc += c * v;
    }
    return acc;
}

int Polynomial::degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        (void)c;
        int d = m[0] + m[1] + m[2] + m[3];
        deg = std::max(deg, d);
    }
    return deg;
}

bool Polynomial::is_zero(double tol) const {
    for (const auto& [m, c] : terms_) {
        (void)m;
        if (std::abs(c) > tol) return false;
    }
    return true;
}

double Polynomial::max_coeff() const {
    double mx = 0.0;
    for (const auto& [m, c] : terms_) {
        (void)m;
        mx = std::max(mx, std::abs(c));
    }
    return mx;
}

Polynomial& Polynomial::trim(double tol) {
    double mx = max_coeff();
    if (mx == 0.0) return *this;
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (std::abs(it->second) <= tol * mx) ? terms_.erase(it) : std::next(it);
    return *this;
}

} // namespace hyperg::poly
