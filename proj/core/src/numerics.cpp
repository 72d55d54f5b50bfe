#include "toeplab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "toeplab/errors.hpp"

namespace toeplab {

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
    HermitianMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d) {
    HermitianMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

double HermitianMatrix::max_hermitian_defect() const {
    double defect = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i; j < n_; ++j) {
            defect = std::max(defect, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return defect;
}

double HermitianMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

Complex HermitianMatrix::trace() const {
    Complex t{};
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

std::vector<Complex> HermitianMatrix::apply(std::span<const Complex> x) const {
    std::vector<Complex> y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Complex s{};
        for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

// ---------------------------------------------------------------------------
// Complex Jacobi
//
// Each rotation is U = D R with D = diag(1, ..., e^{-i phi}, ...) making the
// pivot real and R the classical real Jacobi rotation on (p, q).

EigenDecomposition hermitian_eigen(const HermitianMatrix& h, int max_sweeps) {
    const std::size_t n = h.dim();
    if (h.max_hermitian_defect() > 1e-10 * std::max(1.0, h.frobenius_norm())) {
        throw InvalidInput("hermitian_eigen: matrix is not Hermitian");
    }

    HermitianMatrix a = h;
    for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
    HermitianMatrix v = HermitianMatrix::identity(n);

    const double scale = a.frobenius_norm();
    const double target = 1e-13 * scale;

    auto off_diagonal = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    EigenDecomposition out;
    int sweep = 0;
    while (scale > 0.0 && off_diagonal() > target) {
        if (sweep == max_sweeps) {
            throw SolverError("hermitian_eigen: no convergence after " + std::to_string(max_sweeps) +
                              " sweeps");
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = a(p, q);
                const double mag = std::abs(g);
                if (mag <= std::numeric_limits<double>::min() ||
                    mag < 1e-18 * (std::abs(a(p, p)) + std::abs(a(q, q)))) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const Complex phase = g / mag;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex em = std::conj(phase);  // e^{-i phi}

                // A <- A U (columns p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * em * akq;
                    a(k, q) = s * akp + c * em * akq;
                }
                // A <- U^H A (rows p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = app - t * mag;
                a(q, q) = aqq + t * mag;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * em * vkq;
                    v(k, q) = s * vkp + c * em * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    out.sweeps = sweep;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (std::size_t idx : order) {
        out.values.push_back(a(idx, idx).real());
        std::vector<Complex> col(n);
        for (std::size_t k = 0; k < n; ++k) col[k] = v(k, idx);
        out.vectors.push_back(std::move(col));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sparse symmetric matrices and Krylov solvers

void SparseSymmetricMatrix::add(std::size_t row, std::size_t col, double value) {
    for (auto& e : rows_[row]) {
        if (e.col == col) {
            e.value += value;
            return;
        }
    }
    rows_[row].push_back({col, value});
}

void SparseSymmetricMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        double s = 0.0;
        for (const auto& e : rows_[i]) s += e.value * x[e.col];
        y[i] = s;
    }
}

bool SparseSymmetricMatrix::is_symmetric(double tol) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto& e : rows_[i]) {
            const auto& mirror = rows_[e.col];
            auto it = std::find_if(mirror.begin(), mirror.end(),
                                   [i](const Entry& m) { return m.col == i; });
            if (it == mirror.end() || std::abs(it->value - e.value) > tol) return false;
        }
    }
    return true;
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace

// Preconditioned CG with minimal-residual smoothing (Schoenauer-Weiss): the
// smoothed iterate y_k has residual s_k = b - A y_k with
// ||s_k|| <= min(||s_{k-1}||, ||r_k||).
CgResult cg_solve(const SparseSymmetricMatrix& a, std::span<const double> b, double tol,
                  std::span<const double> initial_guess, bool record_history) {
    const std::size_t n = a.dim();
    if (b.size() != n) throw InvalidInput("cg_solve: dimension mismatch");
    if (!(tol > 0.0)) throw InvalidInput("cg_solve: tolerance must be positive");

    CgResult out;
    out.x.assign(n, 0.0);
    const double bnorm = norm2(b);
    if (bnorm == 0.0) return out;

    std::vector<double> inv_diag(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& e : a.row(i)) {
            if (e.col == i && e.value > 0.0) inv_diag[i] = 1.0 / e.value;
        }
    }

    std::vector<double> x(n, 0.0), r(b.begin(), b.end()), z(n), p(n), ap(n);
    if (!initial_guess.empty()) {
        std::copy(initial_guess.begin(), initial_guess.end(), x.begin());
        a.multiply(x, ap);
        for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - ap[i];
    }
    std::vector<double> y = x, s = r, d(n);

    for (std::size_t i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
    p = z;
    double rz = dot(r, z);
    double snorm = norm2(s);
    if (record_history) out.residual_history.push_back(snorm / bnorm);

    const int max_iter = static_cast<int>(10 * n);
    int it = 0;
    while (snorm > tol * bnorm) {
        if (it == max_iter) {
            throw SolverError("cg_solve: no convergence in " + std::to_string(max_iter) +
                              " iterations (relative residual " + std::to_string(snorm / bnorm) + ")");
        }
        ++it;
        a.multiply(p, ap);
        const double pap = dot(p, ap);
        if (!(pap > 0.0)) throw SolverError("cg_solve: matrix is not positive definite");
        const double alpha = rz / pap;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }

        for (std::size_t i = 0; i < n; ++i) d[i] = r[i] - s[i];
        const double dd = dot(d, d);
        if (dd > 0.0) {
            const double eta = -dot(s, d) / dd;
            for (std::size_t i = 0; i < n; ++i) {
                y[i] += eta * (x[i] - y[i]);
                s[i] += eta * d[i];
            }
        }
        snorm = norm2(s);
        if (record_history) out.residual_history.push_back(snorm / bnorm);

        for (std::size_t i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
        const double rz_new = dot(r, z);
        const double beta = rz_new / rz;
        rz = rz_new;
        for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }

    out.x = std::move(y);
    out.iterations = it;
    out.relative_residual = snorm / bnorm;
    return out;
}

EigenPair inverse_power_iteration(const SparseSymmetricMatrix& a, double tol, double inner_tol) {
    const std::size_t n = a.dim();
    if (n == 0) throw InvalidInput("inverse_power_iteration: empty matrix");

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(n), guess(n);
    a.multiply(x, ax);
    double lambda = dot(x, ax);

    constexpr int kMaxIterations = 500;
    for (int it = 1; it <= kMaxIterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) guess[i] = x[i] / lambda;
        CgResult solve = cg_solve(a, x, inner_tol, guess);
        const double nrm = norm2(solve.x);
        for (std::size_t i = 0; i < n; ++i) x[i] = solve.x[i] / nrm;
        a.multiply(x, ax);
        const double next = dot(x, ax);
        const bool done = std::abs(next - lambda) <= tol * std::abs(next);
        lambda = next;
        if (done) return {lambda, std::move(x), it};
    }
    throw SolverError("inverse_power_iteration: no convergence in 500 iterations");
}

double psd_largest_eigenvalue(
    std::size_t dim, const std::function<void(std::span<const Complex>, std::span<Complex>)>& apply,
    double tol, int max_iterations) {
    if (dim == 0) return 0.0;
    std::vector<Complex> x(dim), y(dim);
    double nrm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        x[i] = 1.0 / static_cast<double>(i + 1);
        nrm += std::norm(x[i]);
    }
    nrm = std::sqrt(nrm);
    for (auto& v : x) v /= nrm;

    double lambda = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
        apply(x, y);
        Complex rq{};
        double ynorm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            rq += std::conj(x[i]) * y[i];
            ynorm += std::norm(y[i]);
        }
        ynorm = std::sqrt(ynorm);
        const double next = rq.real();
        if (ynorm == 0.0) return 0.0;
        for (std::size_t i = 0; i < dim; ++i) x[i] = y[i] / ynorm;
        if (it > 0 && std::abs(next - lambda) <= tol * std::abs(next)) return next;
        lambda = next;
    }
    throw SolverError("psd_largest_eigenvalue: no convergence");
}

// ---------------------------------------------------------------------------
// Polynomial roots

Complex polynomial_value(std::span<const Complex> coeffs, Complex z) {
    Complex v{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
    return v;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
    if (coeffs.empty() || coeffs.back() == Complex{}) {
        throw InvalidInput("polynomial_roots: leading coefficient must be nonzero");
    }
    const std::size_t degree = coeffs.size() - 1;
    if (degree > 16) throw InvalidInput("polynomial_roots: degree above 16");

    double coeff_norm = 0.0;
    for (const auto& c : coeffs) coeff_norm += std::norm(c);
    coeff_norm = std::sqrt(coeff_norm);

    std::vector<Complex> roots;
    std::size_t lead_zero = 0;
    while (lead_zero < degree && coeffs[lead_zero] == Complex{}) {
        roots.emplace_back(0.0);
        ++lead_zero;
    }

    // Monic reduced polynomial.
    std::vector<Complex> monic(coeffs.begin() + static_cast<std::ptrdiff_t>(lead_zero), coeffs.end());
    const Complex lead = monic.back();
    for (auto& c : monic) c /= lead;
    const std::size_t m = monic.size() - 1;

    if (m > 0) {
        double radius = 0.0;  // Cauchy bound
        for (std::size_t k = 0; k < m; ++k) radius = std::max(radius, std::abs(monic[k]));
        radius += 1.0;

        std::vector<Complex> z(m);
        const Complex seed(0.4, 0.9);
        Complex power = 1.0;
        for (std::size_t k = 0; k < m; ++k) {
            power *= seed;
            z[k] = radius * power / std::abs(power) * (0.5 + 0.5 * static_cast<double>(k + 1) / m);
        }

        bool converged = false;
        for (int it = 0; it < 10000 && !converged; ++it) {
            double max_step = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                Complex denom = 1.0;
                for (std::size_t j = 0; j < m; ++j) {
                    if (j != i) denom *= (z[i] - z[j]);
                }
                if (denom == Complex{}) denom = 1e-300;
                const Complex step = polynomial_value(monic, z[i]) / denom;
                z[i] -= step;
                max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
            }
            converged = max_step < 1e-16;
        }
        roots.insert(roots.end(), z.begin(), z.end());
    }

    for (const auto& r : roots) {
        if (std::abs(polynomial_value(coeffs, r)) > 1e-9 * coeff_norm) {
            throw SolverError("polynomial_roots: residual check failed");
        }
    }
    return roots;
}

// ---------------------------------------------------------------------------
// Geometry

namespace geometry {

namespace {

double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }

double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

bool on_segment(Point a, Point b, Point p) {
    return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

}  // namespace

int winding_number(std::span<const Point> polyline, Point p) {
    int wn = 0;
    const std::size_t n = polyline.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = polyline[i];
        const Point b = polyline[(i + 1) % n];
        if (a.imag() <= p.imag()) {
            if (b.imag() > p.imag() && orient(a, b, p) > 0.0) ++wn;
        } else if (b.imag() <= p.imag() && orient(a, b, p) < 0.0) {
            --wn;
        }
    }
    return wn;
}

bool segments_intersect(Point a, Point b, Point c, Point d) {
    const double d1 = orient(c, d, a);
    const double d2 = orient(c, d, b);
    const double d3 = orient(a, b, c);
    const double d4 = orient(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return true;
    }
    if (d1 == 0 && on_segment(c, d, a)) return true;
    if (d2 == 0 && on_segment(c, d, b)) return true;
    if (d3 == 0 && on_segment(a, b, c)) return true;
    if (d4 == 0 && on_segment(a, b, d)) return true;
    return false;
}

bool polyline_self_intersects(std::span<const Point> polyline) {
    const std::size_t n = polyline.size();
    if (n < 4) return false;
    struct Edge {
        double xmin, xmax;
        std::size_t i;
    };
    std::vector<Edge> edges(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = polyline[i];
        const Point b = polyline[(i + 1) % n];
        edges[i] = {std::min(a.real(), b.real()), std::max(a.real(), b.real()), i};
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) { return l.xmin < r.xmin; });

    auto adjacent = [n](std::size_t i, std::size_t j) {
        const std::size_t d = i > j ? i - j : j - i;
        return d == 1 || d == n - 1;
    };

    std::vector<Edge> active;
    for (const Edge& e : edges) {
        std::erase_if(active, [&](const Edge& o) { return o.xmax < e.xmin; });
        for (const Edge& o : active) {
            if (adjacent(e.i, o.i)) continue;
            if (segments_intersect(polyline[e.i], polyline[(e.i + 1) % n], polyline[o.i],
                                   polyline[(o.i + 1) % n])) {
                return true;
            }
        }
        active.push_back(e);
    }
    return false;
}

double point_segment_distance(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

double distance_to_polyline(std::span<const Point> polyline, Point p) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = polyline.size();
    for (std::size_t i = 0; i < n; ++i) {
        best = std::min(best, point_segment_distance(p, polyline[i], polyline[(i + 1) % n]));
    }
    return best;
}

}  // namespace geometry

}  // namespace toeplab
