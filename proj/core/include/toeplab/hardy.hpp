#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "toeplab/laurent.hpp"
#include "toeplab/numerics.hpp"

namespace toeplab {

/// Polynomial map F(w) = sum_{k=1}^m c_k w^k from the unit disc, F(0) = 0.
class ConformalMap {
public:
    /// coefficients[k-1] = c_k. Trailing zeros are trimmed; throws InvalidInput
    /// if nothing nonzero remains.
    explicit ConformalMap(std::vector<Complex> coefficients);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()); }
    Complex coefficient(int k) const;  // c_k, zero outside 1..m
    const std::vector<Complex>& coefficients() const noexcept { return coeffs_; }

    Complex operator()(Complex w) const;
    Complex derivative(Complex w) const;

    /// F as a Laurent polynomial in w.
    LaurentPoly as_laurent() const;
    /// Coefficients of F' in ascending order.
    std::vector<Complex> derivative_coefficients() const;
    /// F(e^{i theta_j}) at `samples` equispaced angles.
    std::vector<Complex> boundary_curve(int samples) const;

    ConformalMap scaled(Complex factor) const;

private:
    std::vector<Complex> coeffs_;
};

/// w + eps w^2 + eps^2 w^3 / 3.
ConformalMap make_example_map(double eps);

enum class UnivalenceStatus { univalent_certified, derivative_nonvanishing_only, rejected };

std::string_view to_string(UnivalenceStatus status);

inline constexpr int kUnivalenceBoundarySamples = 4096;

/// Rejects maps whose derivative vanishes in the closed disc (1e-9 margin),
/// then samples the boundary curve and looks for self-intersections.
UnivalenceStatus univalence_check(const ConformalMap& f,
                                  int boundary_samples = kUnivalenceBoundarySamples);

/// Matrix of [T_z^*, T_z] on E^2(F(D)) in the monomial basis {1, ..., w^{m-1}}
/// of E^2(D). Column j holds the coefficients of
///   P(F conj(F) w^j) - F P(conj(F) w^j).
/// Throws InternalConsistencyError if the action on w^m, w^{m+1} is nonzero or a
/// column spills past degree m-1.
HermitianMatrix smirnov_commutator_matrix(const ConformalMap& f);

/// The action X(w^k) as a Laurent polynomial; exposed for the kernel check.
LaurentPoly smirnov_commutator_action(const ConformalMap& f, int k);

/// Largest |eigenvalue|. Throws InvalidInput when the Hermitian defect exceeds 1e-10.
double operator_norm(const HermitianMatrix& h);

/// pi * sum k |c_k|^2.
double area_of_image(const ConformalMap& f);

inline constexpr int kDefaultPerimeterNodes = 1024;

/// Periodic trapezoid rule for the integral of |F'(e^{i theta})| over [0, 2 pi].
double perimeter_of_image(const ConformalMap& f, int nodes = kDefaultPerimeterNodes);

}  // namespace toeplab
