#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "toeplab/errors.hpp"
#include "toeplab/numerics.hpp"

using namespace toeplab;

namespace {

HermitianMatrix random_hermitian(std::size_t n) {
    HermitianMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = gen::uniform(-2, 2);
        for (std::size_t j = i + 1; j < n; ++j) {
            h(i, j) = gen::complex_in(1.0);
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

SparseSymmetricMatrix laplacian_1d(std::size_t n, double h) {
    SparseSymmetricMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a.add(i, i, 2.0 / (h * h));
        if (i > 0) a.add(i, i - 1, -1.0 / (h * h));
        if (i + 1 < n) a.add(i, i + 1, -1.0 / (h * h));
    }
    return a;
}

}  // namespace

TEST_CASE("hermitian_eigen: small examples") {
    const std::vector<double> d{3, 1, 2};
    const auto e = hermitian_eigen(HermitianMatrix::diagonal(d));
    CHECK(e.values == std::vector<double>{1, 2, 3});

    HermitianMatrix swap(2);
    swap(0, 1) = swap(1, 0) = 1.0;
    const auto s = hermitian_eigen(swap);
    CHECK(s.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(s.values[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eigen: example matrix against the characteristic cubic") {
    const auto m = oracle::example_matrix(0.5);
    HermitianMatrix h(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) h(i, j) = m[i][j];
    const double expected = oracle::largest_eigenvalue_3x3(m);
    CHECK(expected == doctest::Approx(1.4999023354246041).epsilon(1e-14));
    CHECK(std::abs(hermitian_eigen(h).values.back() - expected) <= 1e-12);
}

TEST_CASE("hermitian_eigen: invariants on random complex matrices") {
    for (std::size_t n : {1u, 2u, 5u, 12u, 40u}) {
        const HermitianMatrix h = random_hermitian(n);
        const auto e = hermitian_eigen(h);
        const double hn = h.frobenius_norm();

        double sum = 0.0;
        for (double v : e.values) sum += v;
        CHECK(std::abs(sum - h.trace().real()) <= 1e-10 * hn);
        CHECK(std::is_sorted(e.values.begin(), e.values.end()));

        for (std::size_t i = 0; i < n; ++i) {
            const auto hv = h.apply(e.vectors[i]);
            double res = 0.0;
            for (std::size_t k = 0; k < n; ++k) res += std::norm(hv[k] - e.values[i] * e.vectors[i][k]);
            CHECK(std::sqrt(res) <= 1e-10 * hn);
            for (std::size_t j = 0; j < n; ++j) {
                Complex ip{};
                for (std::size_t k = 0; k < n; ++k) ip += std::conj(e.vectors[i][k]) * e.vectors[j][k];
                CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("hermitian_eigen: rejects non-Hermitian input and is deterministic") {
    HermitianMatrix bad(2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigen(bad), InvalidInput);

    const HermitianMatrix h = random_hermitian(8);
    CHECK(hermitian_eigen(h).values == hermitian_eigen(h).values);
}

TEST_CASE("cg_solve: identity, tridiagonal and random SPD systems") {
    SparseSymmetricMatrix id(4);
    for (std::size_t i = 0; i < 4; ++i) id.add(i, i, 1.0);
    const std::vector<double> b{1, -2, 3, 0.5};
    const auto r = cg_solve(id, b, 1e-12);
    for (std::size_t i = 0; i < 4; ++i) CHECK(r.x[i] == doctest::Approx(b[i]));

    const double h = 0.25;
    const auto lap = laplacian_1d(3, h);
    const std::vector<double> rhs{2, 2, 2};
    const auto sol = cg_solve(lap, rhs, 1e-12);
    const double s = 1.0 / (h * h);
    const auto direct = oracle::dense_solve({{2 * s, -s, 0}, {-s, 2 * s, -s}, {0, -s, 2 * s}}, rhs);
    for (std::size_t i = 0; i < 3; ++i) CHECK(sol.x[i] == doctest::Approx(direct[i]).epsilon(1e-10));
    // Continuum solution x(1-x) is reproduced exactly by the 3-point stencil.
    CHECK(sol.x[0] == doctest::Approx(0.1875).epsilon(1e-10));
    CHECK(sol.x[1] == doctest::Approx(0.25).epsilon(1e-10));

    const std::size_t n = 10;
    std::vector<std::vector<double>> bmat(n, std::vector<double>(n));
    for (auto& row : bmat)
        for (auto& v : row) v = gen::uniform(-1, 1);
    std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
    SparseSymmetricMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double v = i == j ? 1.0 : 0.0;
            for (std::size_t k = 0; k < n; ++k) v += bmat[k][i] * bmat[k][j];
            dense[i][j] = v;
            a.add(i, j, v);
        }
    }
    CHECK(a.is_symmetric(1e-14));
    std::vector<double> rb(n);
    for (auto& v : rb) v = gen::uniform(-1, 1);
    const double tol = 1e-11;
    const auto cg = cg_solve(a, rb, tol);
    const auto ref = oracle::dense_solve(dense, rb);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(cg.x[i] - ref[i]) <= 1e-8 * (1 + std::abs(ref[i])));
    CHECK(cg.relative_residual <= tol);
}

TEST_CASE("cg_solve: residual history is monotone and the cap is enforced") {
    const auto lap = laplacian_1d(200, 1.0 / 201);
    std::vector<double> b(200);
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = std::sin(0.37 * static_cast<double>(i * i)) + 1.0;
    const auto r = cg_solve(lap, b, 1e-10, {}, true);
    REQUIRE(r.residual_history.size() > 2);
    for (std::size_t i = 1; i < r.residual_history.size(); ++i) {
        CHECK(r.residual_history[i] <= r.residual_history[i - 1] * (1 + 1e-12));
    }
    // Independent residual check.
    std::vector<double> ax(200);
    lap.multiply(r.x, ax);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        num += (ax[i] - b[i]) * (ax[i] - b[i]);
        den += b[i] * b[i];
    }
    CHECK(std::sqrt(num / den) <= 1e-9);

    SparseSymmetricMatrix indefinite(2);
    indefinite.add(0, 0, 1.0);
    indefinite.add(1, 1, -1.0);
    CHECK_THROWS_AS(cg_solve(indefinite, std::vector<double>{1.0, 1.0}, 1e-10), SolverError);
}

TEST_CASE("inverse_power_iteration") {
    SparseSymmetricMatrix d(3);
    d.add(0, 0, 5);
    d.add(1, 1, 2);
    d.add(2, 2, 9);
    CHECK(inverse_power_iteration(d, 1e-12).value == doctest::Approx(2.0).epsilon(1e-10));

    const std::size_t n = 50;
    const double h = 1.0 / (n + 1);
    const double exact = 2.0 / (h * h) * (1 - std::cos(M_PI / (n + 1)));
    const auto ip = inverse_power_iteration(laplacian_1d(n, h), 1e-12);
    CHECK(ip.value == doctest::Approx(exact).epsilon(1e-9));
    double nrm = 0;
    for (double v : ip.vector) nrm += v * v;
    CHECK(nrm == doctest::Approx(1.0));

    // 2-D square grid: sum of two 1-D eigenvalues.
    const std::size_t m = 20;
    const double hh = 1.0 / (m + 1);
    SparseSymmetricMatrix a(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t k = i * m + j;
            a.add(k, k, 4 / (hh * hh));
            if (i > 0) a.add(k, k - m, -1 / (hh * hh));
            if (i + 1 < m) a.add(k, k + m, -1 / (hh * hh));
            if (j > 0) a.add(k, k - 1, -1 / (hh * hh));
            if (j + 1 < m) a.add(k, k + 1, -1 / (hh * hh));
        }
    }
    const double exact2 = 2 * (2.0 / (hh * hh) * (1 - std::cos(M_PI / (m + 1))));
    CHECK(inverse_power_iteration(a, 1e-12).value == doctest::Approx(exact2).epsilon(1e-9));
}

TEST_CASE("psd_largest_eigenvalue matches Jacobi") {
    HermitianMatrix h = random_hermitian(15);
    // Make it PSD: H^2.
    HermitianMatrix sq(15);
    for (std::size_t i = 0; i < 15; ++i)
        for (std::size_t j = 0; j < 15; ++j)
            for (std::size_t k = 0; k < 15; ++k) sq(i, j) += h(i, k) * h(k, j);
    const double jac = hermitian_eigen(sq).values.back();
    const double pow = psd_largest_eigenvalue(
        15,
        [&](std::span<const Complex> x, std::span<Complex> y) {
            const auto v = sq.apply(x);
            std::copy(v.begin(), v.end(), y.begin());
        },
        1e-14);
    CHECK(pow == doctest::Approx(jac).epsilon(1e-8));
}

TEST_CASE("polynomial_roots") {
    auto sorted_real = [](std::vector<Complex> r) {
        std::sort(r.begin(), r.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
        return r;
    };
    const std::vector<Complex> sq{-1.0, 0.0, 1.0};
    const auto r = sorted_real(polynomial_roots(sq));
    CHECK(r[0].real() == doctest::Approx(-1.0));
    CHECK(r[1].real() == doctest::Approx(1.0));

    // (1 + 0.5 w)^2: double root at -2.
    const std::vector<Complex> dbl{1.0, 1.0, 0.25};
    for (const auto& z : polynomial_roots(dbl)) CHECK(std::abs(z + 2.0) < 1e-6);

    const std::vector<Complex> cube{0.0, 0.0, 0.0, 1.0};
    const auto z = polynomial_roots(cube);
    CHECK(z.size() == 3);
    for (const auto& v : z) CHECK(std::abs(v) == 0.0);

    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Complex> c(7);
        for (auto& v : c) v = gen::complex_in(2.0);
        double cn = 0;
        for (auto& v : c) cn += std::norm(v);
        for (const auto& root : polynomial_roots(c)) {
            CHECK(std::abs(polynomial_value(c, root)) <= 1e-9 * std::sqrt(cn));
        }
    }

    const std::vector<Complex> bad{1.0, 0.0};
    CHECK_THROWS_AS(polynomial_roots(bad), InvalidInput);
}

TEST_CASE("geometry kernels") {
    using geometry::Point;
    std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(geometry::winding_number(square, {0.5, 0.5}) == 1);
    CHECK(geometry::winding_number(square, {1.5, 0.5}) == 0);
    std::vector<Point> cw(square.rbegin(), square.rend());
    CHECK(geometry::winding_number(cw, {0.5, 0.5}) == -1);

    CHECK(geometry::segments_intersect({0, 0}, {1, 1}, {0, 1}, {1, 0}));
    CHECK_FALSE(geometry::segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
    CHECK(geometry::segments_intersect({0, 0}, {1, 0}, {1, 0}, {2, 1}));

    CHECK_FALSE(geometry::polyline_self_intersects(square));
    std::vector<Point> bowtie{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
    CHECK(geometry::polyline_self_intersects(bowtie));

    CHECK(geometry::point_segment_distance({0.5, 2}, {0, 0}, {1, 0}) == doctest::Approx(2.0));
    CHECK(geometry::distance_to_polyline(square, {0.5, 0.4}) == doctest::Approx(0.4));
}
