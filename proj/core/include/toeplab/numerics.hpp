#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace toeplab {

using Complex = std::complex<double>;

/// Dense n x n complex matrix, row-major, intended to hold Hermitian data.
///
/// Hermitian symmetry is not enforced on write; `is_hermitian` checks it and
/// the eigensolver rejects violations.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(std::size_t n) : n_(n), data_(n * n) {}

    static HermitianMatrix identity(std::size_t n);
    static HermitianMatrix diagonal(std::span<const double> d);

    std::size_t dim() const noexcept { return n_; }

    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

    double max_hermitian_defect() const;
    bool is_hermitian(double tol) const { return max_hermitian_defect() <= tol; }
    double frobenius_norm() const;
    Complex trace() const;

    std::vector<Complex> apply(std::span<const Complex> x) const;

private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

struct EigenDecomposition {
    std::vector<double> values;               // ascending
    std::vector<std::vector<Complex>> vectors;  // vectors[i] pairs with values[i]
    int sweeps = 0;
};

/// Cyclic complex Jacobi. Sweeps until the off-diagonal Frobenius mass drops
/// below 1e-13 * ||H||_F; throws SolverError after `max_sweeps`.
EigenDecomposition hermitian_eigen(const HermitianMatrix& h, int max_sweeps = 100);

/// Symmetric sparse matrix stored as per-row neighbor lists.
class SparseSymmetricMatrix {
public:
    struct Entry {
        std::size_t col;
        double value;
    };

    SparseSymmetricMatrix() = default;
    explicit SparseSymmetricMatrix(std::size_t n) : rows_(n) {}

    std::size_t dim() const noexcept { return rows_.size(); }

    // Stores value at (row, col); for row != col the caller adds the mirror entry.
    void add(std::size_t row, std::size_t col, double value);
    const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }

    void multiply(std::span<const double> x, std::span<double> y) const;
    bool is_symmetric(double tol = 0.0) const;

private:
    std::vector<std::vector<Entry>> rows_;
};

struct CgResult {
    std::vector<double> x;
    int iterations = 0;
    double relative_residual = 0.0;
    std::vector<double> residual_history;  // ||r_k|| / ||b||, filled only on request
};

/// Jacobi-preconditioned conjugate gradient. The iterate with the smallest
/// true residual is returned, so the reported residual history is monotone.
/// Throws SolverError when 10 * dim iterations do not reach `tol`.
CgResult cg_solve(const SparseSymmetricMatrix& a, std::span<const double> b, double tol,
                  std::span<const double> initial_guess = {}, bool record_history = false);

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
    int iterations = 0;
};

/// Smallest eigenpair of an SPD matrix by unshifted inverse iteration with CG
/// inner solves. Stops when the Rayleigh quotient changes by less than `tol`
/// relative; throws SolverError after 500 outer iterations.
EigenPair inverse_power_iteration(const SparseSymmetricMatrix& a, double tol,
                                  double inner_tol = 1e-10);

/// Largest eigenvalue of a positive semidefinite Hermitian operator given as a
/// matrix-vector product, by power iteration from a deterministic start.
double psd_largest_eigenvalue(std::size_t dim,
                              const std::function<void(std::span<const Complex>, std::span<Complex>)>& apply,
                              double tol, int max_iterations = 20000);

/// Roots of sum_k coeffs[k] z^k (ascending order). Weierstrass/Durand-Kerner
/// iteration; exact zero roots are deflated first.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

Complex polynomial_value(std::span<const Complex> coeffs, Complex z);

namespace geometry {

using Point = std::complex<double>;

/// Winding number of a closed polyline (last vertex joins the first) around p.
int winding_number(std::span<const Point> polyline, Point p);

/// Proper or touching intersection of closed segments [a, b] and [c, d].
bool segments_intersect(Point a, Point b, Point c, Point d);

/// True when two non-adjacent edges of the closed polyline intersect.
bool polyline_self_intersects(std::span<const Point> polyline);

double point_segment_distance(Point p, Point a, Point b);
double distance_to_polyline(std::span<const Point> polyline, Point p);

}  // namespace geometry

}  // namespace toeplab
