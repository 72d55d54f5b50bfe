#include "toeplab/hardy.hpp"

#include <algorithm>
#include <cmath>

#include "toeplab/errors.hpp"

namespace toeplab {

ConformalMap::ConformalMap(std::vector<Complex> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
    if (coeffs_.empty()) throw InvalidInput("ConformalMap: all coefficients are zero");
    for (const auto& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw InvalidInput("ConformalMap: non-finite coefficient");
        }
    }
}

Complex ConformalMap::coefficient(int k) const {
    if (k < 1 || k > degree()) return {};
    return coeffs_[static_cast<std::size_t>(k - 1)];
}

Complex ConformalMap::operator()(Complex w) const {
    Complex v{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = (v + *it) * w;
    return v;
}

Complex ConformalMap::derivative(Complex w) const {
    Complex v{};
    for (int k = degree(); k >= 1; --k) v = v * w + static_cast<double>(k) * coefficient(k);
    return v;
}

LaurentPoly ConformalMap::as_laurent() const {
    std::map<int, Complex> m;
    for (int k = 1; k <= degree(); ++k) m[k] = coefficient(k);
    return LaurentPoly(std::move(m));
}

std::vector<Complex> ConformalMap::derivative_coefficients() const {
    std::vector<Complex> d(static_cast<std::size_t>(degree()));
    for (int k = 1; k <= degree(); ++k) d[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * coefficient(k);
    return d;
}

std::vector<Complex> ConformalMap::boundary_curve(int samples) const {
    std::vector<Complex> pts(static_cast<std::size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        pts[static_cast<std::size_t>(j)] = (*this)(std::polar(1.0, 2.0 * M_PI * j / samples));
    }
    return pts;
}

ConformalMap ConformalMap::scaled(Complex factor) const {
    std::vector<Complex> c = coeffs_;
    for (auto& v : c) v *= factor;
    return ConformalMap(std::move(c));
}

ConformalMap make_example_map(double eps) {
    if (!(eps >= 0.0)) throw InvalidInput("make_example_map: eps must be nonnegative");
    return ConformalMap({1.0, eps, eps * eps / 3.0});
}

std::string_view to_string(UnivalenceStatus status) {
    switch (status) {
        case UnivalenceStatus::univalent_certified: return "univalent_certified";
        case UnivalenceStatus::derivative_nonvanishing_only: return "derivative_nonvanishing_only";
        case UnivalenceStatus::rejected: return "rejected";
    }
    return "unknown";
}

UnivalenceStatus univalence_check(const ConformalMap& f, int boundary_samples) {
    const auto deriv = f.derivative_coefficients();
    if (deriv.size() > 1) {
        for (const auto& root : polynomial_roots(deriv)) {
            if (std::abs(root) <= 1.0 + 1e-9) return UnivalenceStatus::rejected;
        }
    }
    const auto curve = f.boundary_curve(boundary_samples);
    return geometry::polyline_self_intersects(curve) ? UnivalenceStatus::derivative_nonvanishing_only
                                                     : UnivalenceStatus::univalent_certified;
}

LaurentPoly smirnov_commutator_action(const ConformalMap& f, int k) {
    const LaurentPoly big_f = f.as_laurent();
    const LaurentPoly f_bar = circle_conjugate(big_f);
    const LaurentPoly wk = LaurentPoly::monomial(k);
    return analytic_projection(big_f * f_bar * wk) - big_f * analytic_projection(f_bar * wk);
}

HermitianMatrix smirnov_commutator_matrix(const ConformalMap& f) {
    const int m = f.degree();
    double scale = 0.0;
    for (const auto& c : f.coefficients()) scale += std::norm(c);
    const double kernel_tol = 1e-12 * std::max(1.0, scale);

    for (int k = m; k <= m + 1; ++k) {
        const LaurentPoly x = smirnov_commutator_action(f, k);
        for (const auto& [deg, c] : x.coefficients()) {
            if (std::abs(c) > kernel_tol) {
                throw InternalConsistencyError("smirnov_commutator_matrix: X(w^" + std::to_string(k) +
                                               ") has a nonzero w^" + std::to_string(deg) + " term");
            }
        }
    }

    HermitianMatrix mat(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const LaurentPoly x = smirnov_commutator_action(f, j);
        for (const auto& [deg, c] : x.coefficients()) {
            if (deg < 0 || deg >= m) {
                if (std::abs(c) > kernel_tol) {
                    throw InternalConsistencyError("smirnov_commutator_matrix: column " + std::to_string(j) +
                                                   " spills into degree " + std::to_string(deg));
                }
                continue;
            }
            mat(static_cast<std::size_t>(deg), static_cast<std::size_t>(j)) = c;
        }
    }
    return mat;
}

double operator_norm(const HermitianMatrix& h) {
    if (h.max_hermitian_defect() > 1e-10) {
        throw InvalidInput("operator_norm: matrix is not Hermitian");
    }
    if (h.dim() == 0) return 0.0;
    const auto eig = hermitian_eigen(h);
    return std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
}

double area_of_image(const ConformalMap& f) {
    double s = 0.0;
    for (int k = 1; k <= f.degree(); ++k) s += k * std::norm(f.coefficient(k));
    return M_PI * s;
}

double perimeter_of_image(const ConformalMap& f, int nodes) {
    if (nodes < 16) throw InvalidInput("perimeter_of_image: need at least 16 nodes");
    double s = 0.0;
    for (int j = 0; j < nodes; ++j) {
        s += std::abs(f.derivative(std::polar(1.0, 2.0 * M_PI * j / nodes)));
    }
    return 2.0 * M_PI * s / nodes;
}

}  // namespace toeplab
