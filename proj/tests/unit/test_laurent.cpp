#include "doctest.h"
#include "generators.hpp"
#include "toeplab/errors.hpp"
#include "toeplab/laurent.hpp"

using toeplab::Complex;
using toeplab::LaurentPoly;

namespace {

LaurentPoly w(int k = 1, Complex c = 1.0) { return LaurentPoly::monomial(k, c); }

bool close(const LaurentPoly& a, const LaurentPoly& b, double tol) {
    const LaurentPoly d = a - b;
    for (const auto& [k, c] : d.coefficients()) {
        if (std::abs(c) > tol) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("add") {
    const LaurentPoly sum = add(w(1), w(-1));
    CHECK(sum.coefficient(1) == Complex(1.0));
    CHECK(sum.coefficient(-1) == Complex(1.0));
    CHECK(sum.coefficients().size() == 2);

    const LaurentPoly p = w(2, {3, 1}) + w(-3, 2.0);
    CHECK(close(add(p, LaurentPoly{}), p, 0.0));

    const LaurentPoly cancel = add(LaurentPoly::constant(1.0) + w(1), LaurentPoly::constant(-1.0) + w(1, -1.0));
    CHECK(cancel.is_zero());
    CHECK(cancel.min_degree() == 0);
    CHECK(cancel.max_degree() == 0);
}

TEST_CASE("mul") {
    CHECK(close(mul(w(1), w(-1)), LaurentPoly::constant(1.0), 0.0));

    const double eps = 0.5;
    const LaurentPoly a = w(1) + w(2, eps);
    const LaurentPoly b = w(-1) + w(-2, eps);
    const LaurentPoly prod = mul(a, b);
    CHECK(prod.coefficient(0).real() == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(prod.coefficient(1).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(prod.coefficient(-1).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(prod.coefficients().size() == 3);

    const LaurentPoly p = gen::laurent();
    CHECK(close(mul(p, LaurentPoly::constant(1.0)), p, 0.0));
}

TEST_CASE("zero tolerance drops rounding noise") {
    const LaurentPoly p = w(3, 1.0) + w(3, -1.0 + 1e-15);
    CHECK(p.is_zero());
    const LaurentPoly q = LaurentPoly({{2, 1e-13}});
    CHECK_FALSE(q.is_zero());
}

TEST_CASE("analytic_projection") {
    const LaurentPoly p = w(-2) + LaurentPoly::constant(3.0) + w(1);
    const LaurentPoly proj = analytic_projection(p);
    CHECK(close(proj, LaurentPoly::constant(3.0) + w(1), 0.0));

    // Principal part of F*(1/w) for the example map projects to zero.
    const double eps = 0.3;
    const LaurentPoly f_star = w(-1) + w(-2, eps) + w(-3, eps * eps / 3.0);
    CHECK(analytic_projection(f_star).is_zero());

    const LaurentPoly poly = LaurentPoly::constant({1, 2}) + w(4, 0.5);
    CHECK(close(analytic_projection(poly), poly, 0.0));
}

TEST_CASE("circle_conjugate") {
    const double eps = 0.7;
    const LaurentPoly f = w(1) + w(2, eps) + w(3, eps * eps / 3);
    const LaurentPoly fc = circle_conjugate(f);
    CHECK(fc.coefficient(-1) == Complex(1.0));
    CHECK(fc.coefficient(-2) == Complex(eps));
    CHECK(fc.coefficient(-3).real() == doctest::Approx(eps * eps / 3));
    CHECK(fc.max_degree() == -1);

    CHECK(circle_conjugate(LaurentPoly::constant({2, -5})).coefficient(0) == Complex(2, 5));

    for (int trial = 0; trial < 50; ++trial) {
        const LaurentPoly p = gen::laurent();
        CHECK(close(circle_conjugate(circle_conjugate(p)), p, 0.0));
    }
}

TEST_CASE("evaluate") {
    CHECK(evaluate(LaurentPoly::constant(1.0) + w(1), 1.0) == Complex(2.0));
    const Complex v = evaluate(w(-1), Complex(0, 1));
    CHECK(v.real() == doctest::Approx(0.0));
    CHECK(v.imag() == doctest::Approx(-1.0));

    const double eps = 0.5;
    const LaurentPoly f = w(1) + w(2, eps) + w(3, eps * eps / 3);
    CHECK(evaluate(f, 1.0).real() == doctest::Approx(1.5833333333333333).epsilon(1e-15));

    CHECK_THROWS_AS(evaluate(w(-2), 0.0), toeplab::PoleError);
    CHECK(evaluate(w(2), 0.0) == Complex(0.0));
}

TEST_CASE("property: ring laws, projection idempotence, conjugation on the circle") {
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly p = gen::laurent(), q = gen::laurent(), r = gen::laurent();
        const double scale = 1.0 + std::abs(evaluate(p * q * r, 1.0));

        CHECK(close(p * q, q * p, 1e-12 * scale));
        CHECK(close((p * q) * r, p * (q * r), 1e-12 * scale * 10));

        const LaurentPoly proj = analytic_projection(p * q);
        CHECK(close(analytic_projection(proj), proj, 0.0));

        const Complex z = std::polar(1.0, gen::uniform(0.0, 2 * M_PI));
        const Complex lhs = evaluate(circle_conjugate(p), z);
        const Complex rhs = std::conj(evaluate(p, z));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("property: circle inner product is Hermitian and positive definite") {
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly p = gen::laurent(), q = gen::laurent();
        const Complex pq = circle_inner_product(p, q);
        const Complex qp = circle_inner_product(q, p);
        CHECK(std::abs(pq - std::conj(qp)) <= 1e-12 * (1.0 + std::abs(pq)));

        const Complex pp = circle_inner_product(p, p);
        CHECK(std::abs(pp.imag()) <= 1e-14 * pp.real());
        if (!p.is_zero()) CHECK(pp.real() > 0.0);
    }
    // Monomials are orthogonal with squared norm 2 pi.
    CHECK(circle_inner_product(w(3), w(3)).real() == doctest::Approx(2 * M_PI));
    CHECK(std::abs(circle_inner_product(w(3), w(2))) == 0.0);
}
