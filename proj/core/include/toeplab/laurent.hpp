#pragma once

#include <complex>
#include <map>
#include <string>

namespace toeplab {

using Complex = std::complex<double>;

/// Finite Laurent polynomial sum_k a_k w^k on the unit circle.
///
/// Coefficients are stored sparsely by degree. Every mutating operation ends
/// with a normalization pass that drops coefficients whose modulus is below
/// `kZeroTolerance`, so the support never grows from rounding noise.
class LaurentPoly {
public:
    static constexpr double kZeroTolerance = 1e-14;

    LaurentPoly() = default;
    explicit LaurentPoly(std::map<int, Complex> coefficients);

    static LaurentPoly monomial(int degree, Complex coefficient = 1.0);
    static LaurentPoly constant(Complex c) { return monomial(0, c); }

    Complex coefficient(int degree) const;
    const std::map<int, Complex>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Both degrees are 0 for the zero polynomial.
    int min_degree() const noexcept;
    int max_degree() const noexcept;

    Complex evaluate(Complex w) const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    LaurentPoly& operator*=(Complex scalar);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, Complex s) { return a *= s; }
    friend LaurentPoly operator*(Complex s, LaurentPoly a) { return a *= s; }

    std::string to_string() const;

private:
    void normalize();

    std::map<int, Complex> coeffs_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// Drops every strictly negative power: the Szego projection onto E^2(D)
/// restricted to Laurent polynomials.
LaurentPoly analytic_projection(const LaurentPoly& p);

/// Boundary values of conj(p) on |w| = 1, using conj(w) = 1/w. The degree -k
/// coefficient of the result is the conjugate of the degree k coefficient of p.
LaurentPoly circle_conjugate(const LaurentPoly& p);

Complex evaluate(const LaurentPoly& p, Complex w);

/// L^2(arc length) inner product on the unit circle: 2*pi times the constant
/// coefficient of p * circle_conjugate(q).
Complex circle_inner_product(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace toeplab
