#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toeplab/hardy.hpp"
#include "toeplab/numerics.hpp"

namespace toeplab {

/// First positive zero of the Bessel function J_0.
inline constexpr double kBesselJ0FirstZero = 2.404825557695772768621631879;

struct Disc {
    double radius;
};
struct Ellipse {
    double semi_x;
    double semi_y;
};
struct Rectangle {
    double width;
    double height;
};
struct MappedDisc {
    ConformalMap map;
    UnivalenceStatus status;
};

/// A planar domain centred at `center`. Axis-aligned shapes are centred
/// there; a mapped disc is F(D) translated by `center`.
class DomainSpec {
public:
    using Shape = std::variant<Disc, Ellipse, Rectangle, MappedDisc>;

    static DomainSpec disc(double radius, Complex center = 0.0);
    static DomainSpec ellipse(double semi_x, double semi_y, Complex center = 0.0);
    static DomainSpec rectangle(double width, double height, Complex center = 0.0);
    /// Runs the univalence check; throws InvalidInput when the map is rejected.
    static DomainSpec mapped_disc(const ConformalMap& map, Complex center = 0.0);

    /// Parses `disc:R`, `ellipse:A,B`, `rectangle:W,H` (also `square:S`).
    static DomainSpec parse(const std::string& text);

    const Shape& shape() const noexcept { return shape_; }
    Complex center() const noexcept { return center_; }

    bool contains(Complex z) const;
    /// Boundary samples, counter-clockwise.
    std::vector<Complex> boundary(int samples) const;
    /// Axis-aligned box {xmin, xmax, ymin, ymax}.
    std::array<double, 4> bounding_box() const;
    /// Closed-form area.
    double area() const;
    DomainSpec scaled(double factor) const;

    std::string describe() const;

private:
    DomainSpec(Shape shape, Complex center);

    Shape shape_;
    Complex center_;
    std::vector<Complex> polyline_;  // cached boundary for mapped discs
};

inline constexpr int kMembershipBoundarySamples = 4096;

/// Lattice points (i h, j h) strictly inside a domain.
struct GridDiscretization {
    double h = 0.0;
    // Per node and direction (+x, -x, +y, -y): fraction of h from the node to
    // the boundary when that neighbour is outside, 1 otherwise.
    std::vector<std::array<double, 4>> boundary_fraction;
    int i_min = 0, j_min = 0;  // lattice index of the bounding-box corner
    int nx = 0, ny = 0;
    std::vector<int> index;  // nx * ny, -1 outside the domain
    std::vector<std::pair<int, int>> nodes;  // lattice indices of interior nodes

    std::size_t size() const noexcept { return nodes.size(); }
    int node_at(int i, int j) const;  // -1 when outside or off the box
    Complex position(std::size_t node) const;
    double cell_area() const noexcept { return h * h; }
};

/// Throws ResolutionError when fewer than 9 interior nodes result.
GridDiscretization discretize(const DomainSpec& spec, double h);

enum class BoundaryScheme {
    /// Dirichlet zero imposed at the first lattice point outside: O(h).
    staircase,
    /// Ghost value linearly extrapolated to vanish on the true boundary. Only
    /// the diagonal changes, so the matrix stays symmetric positive definite.
    ghost_linear,
};

inline constexpr double kMinBoundaryFraction = 1e-3;

/// 5-point -Laplacian with Dirichlet data on the domain boundary.
SparseSymmetricMatrix dirichlet_laplacian(const GridDiscretization& grid,
                                          BoundaryScheme scheme = BoundaryScheme::ghost_linear);

struct EigenResult {
    double lambda = 0.0;
    std::vector<double> eigenfunction;  // nonnegative, sum(psi^2) h^2 = 1
    int iterations = 0;
};

EigenResult dirichlet_eigenvalue(const GridDiscretization& grid,
                                 BoundaryScheme scheme = BoundaryScheme::ghost_linear);

struct TorsionResult {
    double rho = 0.0;              // 2 h^2 sum u
    double variational_rho = 0.0;  // (2 ||u||_1 / ||grad_h u||_2)^2
    std::vector<double> torsion_function;
};

/// Solves -Laplace_h u = 2 and returns rho = 2 * integral of u.
/// Throws InternalConsistencyError if u dips below -1e-10.
TorsionResult torsional_rigidity(const GridDiscretization& grid,
                                 BoundaryScheme scheme = BoundaryScheme::ghost_linear);

struct Incircle {
    Complex center;
    double radius = 0.0;
};

/// Largest inscribed disc. Closed form for disc, ellipse and rectangle; for a
/// mapped disc the distance to the sampled boundary is maximised over a grid
/// and then refined by a pattern search.
Incircle incircle(const DomainSpec& spec);
double inradius(const DomainSpec& spec);

struct PayneRaynerCheck {
    double lhs = 0.0;  // ||psi||_1 / ||psi||_2
    double rhs = 0.0;  // 2 sqrt(pi) / sqrt(lambda)
    bool holds = false;
};

inline constexpr double kPayneRaynerSlack = 0.02;

PayneRaynerCheck payne_rayner_check(double lambda, const std::vector<double>& eigenfunction,
                                    const GridDiscretization& grid);

/// Closed forms where known: disc and ellipse exactly, rectangle by series.
std::optional<double> exact_torsional_rigidity(const DomainSpec& spec);
/// Disc (j0^2 / R^2) and rectangle (pi^2 (1/w^2 + 1/h^2)).
std::optional<double> exact_dirichlet_eigenvalue(const DomainSpec& spec);

/// Torsional rigidity of a w x h rectangle from the classical odd-k series.
double rectangle_torsional_rigidity(double width, double height);

struct SpectralQuantities {
    double lambda = 0.0;
    double rho = 0.0;
    double variational_rho = 0.0;
    double inradius = 0.0;
    double grid_area = 0.0;  // node count * h^2
    std::size_t nodes = 0;
    std::vector<double> eigenfunction;
    PayneRaynerCheck payne_rayner;
};

SpectralQuantities compute_spectral_quantities(const DomainSpec& spec, double h,
                                               BoundaryScheme scheme = BoundaryScheme::ghost_linear);

}  // namespace toeplab
