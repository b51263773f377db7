#ifndef HYPERG_POLYNOMIAL_HPP
#define HYPERG_POLYNOMIAL_HPP

#include <array>
#include <complex>
#include <map>
#include <span>

namespace hyperg::poly {

using cplx = std::complex<double>;

// Exponent tuple for up to 4 variables; unused variables carry exponent 0.
using Monomial = std::array<int, 4>;

class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(cplx constant);
    static Polynomial variable(int j);
    static Polynomial monomial(const Monomial& m, cplx coef);
    static Polynomial radius_sq(int dim); // x_0^2 + ... + x_{dim-1}^2

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(cplx s) const;
    Polynomial& operator+=(const Polynomial& o);

    Polynomial derivative(int j) const;
    Polynomial mul_var(int j) const;     // multiply by x_j
    Polynomial euler(int dim) const;     // sum_j x_j d/dx_j
    Polynomial laplacian(int dim) const;

    cplx eval(std::span<const double> x) const;
    int degree() const;                  // total degree, -1 for zero polynomial
    bool is_zero(double tol = 0.0) const;
    Polynomial& trim(double tol = 1e-14); // drop coefficients below tol * max
    double max_coeff() const;

    const std::map<Monomial, cplx>& terms() const { return terms_; }

  private:
    std::map<Monomial, cplx> terms_;
};

} // namespace hyperg::poly

#endif
