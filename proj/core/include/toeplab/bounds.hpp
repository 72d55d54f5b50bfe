#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toeplab/hardy.hpp"
#include "toeplab/spectral.hpp"

namespace toeplab {

/// Area / pi.
double putnam_bound(double area);
/// 4 Area^2 / (||phi'||^2 P). For phi = z pass the perimeter as the norm.
double khavinson_bound(double area, double perimeter, double phi_deriv_norm_sq);
/// 16 pi / (lambda^2 Area).
double lambda_lower_bound(double lambda, double area);
/// rho / Area.
double torsion_lower_bound(double rho, double area);
/// R_I^2 / 2.
double inradius_lower_bound(double r_inner);

/// Tolerances for comparisons on closed-form values and on grid-computed ones.
inline constexpr double kExactTolerance = 1e-10;
inline constexpr double kGridSlack = 0.02;

/// One inequality lhs <= rhs, accepted when lhs <= rhs + tolerance.
struct InequalityCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    double margin = 0.0;  // rhs - lhs
    bool holds = false;
    std::string note;
};

InequalityCheck check_le(std::string name, double lhs, double rhs, double tolerance,
                         std::string note = {});

struct BoundsReport {
    std::string context;
    std::optional<double> putnam, khavinson, lambda_lower, torsion_lower, inradius_lower;
    std::optional<double> computed_norm;
    std::optional<double> area, perimeter, lambda, rho, inradius;
    std::vector<InequalityCheck> checks;

    bool all_hold() const;
};

/// Khavinson <= ||M|| <= Putnam for the Smirnov commutator of F.
BoundsReport smirnov_bounds_report(const ConformalMap& f);

/// lambda-bound <= torsion-bound <= norm <= Putnam with W the whole domain.
/// Bounds built from grid quantities get the kGridSlack relative tolerance.
BoundsReport bergman_chain_report(const std::string& context, double norm, double area,
                                  const SpectralQuantities& spectral);

struct TorsionWindow {
    std::string label;
    DomainSpec window;
};

struct WindowEvaluation {
    std::string label;
    double rho = 0.0;
    double area = 0.0;
    double bound = 0.0;
    bool exact = false;  // rho from a closed form rather than a grid solve
};

struct WindowSearchResult {
    double best_bound = 0.0;
    std::string best_window;
    std::vector<WindowEvaluation> evaluated;
    std::vector<std::string> rejected;  // containment diagnostics
};

/// Maximises rho_W / Area(W) over the full domain, its inscribed disc and the
/// caller's candidates. Candidates not contained in `spec` (checked on sampled
/// boundary points) are skipped with a diagnostic. Grid solves use spacing `h`.
WindowSearchResult best_torsion_window(const DomainSpec& spec,
                                       const std::vector<TorsionWindow>& candidates,
                                       double h = 0.01);

struct SweepRow {
    double eps = 0.0;
    double khavinson = 0.0;
    double norm = 0.0;
    double putnam = 0.0;
    double area = 0.0;
    double perimeter = 0.0;
};

/// Khavinson, exact norm and Putnam for the example family on a uniform grid
/// of `steps` points in [eps_min, eps_max]. Throws InternalConsistencyError
/// if any row breaks the sandwich by more than 1e-10.
std::vector<SweepRow> norm_sweep(double eps_min = 0.0, double eps_max = 0.9, int steps = 50);

struct ConstantCheck {
    double value = 0.0;           // lambda*Area or rho
    double weak_constant = 0.0;  // 4 pi, or Area^2/pi
    double sharp_constant = 0.0;  // j0^2 pi, or Area^2/(2 pi)
    bool weak_constant_holds = false;
    bool sharp_constant_holds = false;
};

inline constexpr double kIsoperimetricSlack = 0.01;

/// lambda * Area >= 4 pi and >= j0^2 pi, 1% slack.
ConstantCheck faber_krahn_check(double lambda, double area);
/// rho <= Area^2 / pi and <= Area^2 / (2 pi), 1% slack.
ConstantCheck saint_venant_check(double rho, double area);

}  // namespace toeplab
