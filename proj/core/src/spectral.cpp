#include "toeplab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "toeplab/errors.hpp"

namespace toeplab {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw InvalidInput(std::string("DomainSpec: ") + what + " must be positive");
}

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw InvalidInput("cannot parse number '" + item + "'");
        }
        if (used != item.size()) throw InvalidInput("cannot parse number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// DomainSpec

DomainSpec::DomainSpec(Shape shape, Complex center) : shape_(std::move(shape)), center_(center) {
    if (const auto* md = std::get_if<MappedDisc>(&shape_)) {
        polyline_ = md->map.boundary_curve(kMembershipBoundarySamples);
        for (auto& p : polyline_) p += center_;
    }
}

DomainSpec DomainSpec::disc(double radius, Complex center) {
    require_positive(radius, "radius");
    return DomainSpec(Disc{radius}, center);
}

DomainSpec DomainSpec::ellipse(double semi_x, double semi_y, Complex center) {
    require_positive(semi_x, "semi-axis");
    require_positive(semi_y, "semi-axis");
    return DomainSpec(Ellipse{semi_x, semi_y}, center);
}

DomainSpec DomainSpec::rectangle(double width, double height, Complex center) {
    require_positive(width, "width");
    require_positive(height, "height");
    return DomainSpec(Rectangle{width, height}, center);
}

DomainSpec DomainSpec::mapped_disc(const ConformalMap& map, Complex center) {
    const UnivalenceStatus status = univalence_check(map);
    if (status == UnivalenceStatus::rejected) {
        throw InvalidInput("DomainSpec: mapped disc requires a map that is not rejected by the univalence check");
    }
    return DomainSpec(MappedDisc{map, status}, center);
}

DomainSpec DomainSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw InvalidInput("domain must look like <kind>:<params>, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const auto p = parse_numbers(text.substr(colon + 1));
    if (kind == "disc" && p.size() == 1) return disc(p[0]);
    if (kind == "ellipse" && p.size() == 2) return ellipse(p[0], p[1]);
    if (kind == "rectangle" && p.size() == 2) return rectangle(p[0], p[1]);
    if (kind == "square" && p.size() == 1) return rectangle(p[0], p[0]);
    throw InvalidInput("unknown domain '" + text + "'");
}

bool DomainSpec::contains(Complex z) const {
    const Complex d = z - center_;
    const double x = d.real(), y = d.imag();
    return std::visit(
        [&](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disc>) {
                return x * x + y * y < s.radius * s.radius;
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return (x / s.semi_x) * (x / s.semi_x) + (y / s.semi_y) * (y / s.semi_y) < 1.0;
            } else if constexpr (std::is_same_v<T, Rectangle>) {
                return std::abs(x) < 0.5 * s.width && std::abs(y) < 0.5 * s.height;
            } else {
                return geometry::winding_number(polyline_, z) != 0;
            }
        },
        shape_);
}

std::vector<Complex> DomainSpec::boundary(int samples) const {
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            for (int j = 0; j < samples; ++j) {
                const double t = 2.0 * M_PI * j / samples;
                if constexpr (std::is_same_v<T, Disc>) {
                    pts.push_back(center_ + std::polar(s.radius, t));
                } else if constexpr (std::is_same_v<T, Ellipse>) {
                    pts.push_back(center_ + Complex(s.semi_x * std::cos(t), s.semi_y * std::sin(t)));
                } else if constexpr (std::is_same_v<T, Rectangle>) {
                    // Walk the perimeter at constant speed.
                    const double w = s.width, h = s.height;
                    double u = (2.0 * (w + h)) * j / samples;
                    Complex p;
                    if (u < w) {
                        p = Complex(-w / 2 + u, -h / 2);
                    } else if ((u -= w) < h) {
                        p = Complex(w / 2, -h / 2 + u);
                    } else if ((u -= h) < w) {
                        p = Complex(w / 2 - u, h / 2);
                    } else {
                        u -= w;
                        p = Complex(-w / 2, h / 2 - u);
                    }
                    pts.push_back(center_ + p);
                } else {
                    pts.push_back(center_ + s.map(std::polar(1.0, t)));
                }
            }
        },
        shape_);
    return pts;
}

std::array<double, 4> DomainSpec::bounding_box() const {
    const double cx = center_.real(), cy = center_.imag();
    return std::visit(
        [&](const auto& s) -> std::array<double, 4> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disc>) {
                return {cx - s.radius, cx + s.radius, cy - s.radius, cy + s.radius};
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return {cx - s.semi_x, cx + s.semi_x, cy - s.semi_y, cy + s.semi_y};
            } else if constexpr (std::is_same_v<T, Rectangle>) {
                return {cx - s.width / 2, cx + s.width / 2, cy - s.height / 2, cy + s.height / 2};
            } else {
                std::array<double, 4> box{std::numeric_limits<double>::infinity(),
                                          -std::numeric_limits<double>::infinity(),
                                          std::numeric_limits<double>::infinity(),
                                          -std::numeric_limits<double>::infinity()};
                for (const auto& p : polyline_) {
                    box[0] = std::min(box[0], p.real());
                    box[1] = std::max(box[1], p.real());
                    box[2] = std::min(box[2], p.imag());
                    box[3] = std::max(box[3], p.imag());
                }
                return box;
            }
        },
        shape_);
}

double DomainSpec::area() const {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disc>) {
                return M_PI * s.radius * s.radius;
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return M_PI * s.semi_x * s.semi_y;
            } else if constexpr (std::is_same_v<T, Rectangle>) {
                return s.width * s.height;
            } else {
                return area_of_image(s.map);
            }
        },
        shape_);
}

DomainSpec DomainSpec::scaled(double factor) const {
    require_positive(factor, "scale factor");
    return std::visit(
        [&](const auto& s) -> DomainSpec {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disc>) {
                return disc(s.radius * factor, center_ * factor);
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return ellipse(s.semi_x * factor, s.semi_y * factor, center_ * factor);
            } else if constexpr (std::is_same_v<T, Rectangle>) {
                return rectangle(s.width * factor, s.height * factor, center_ * factor);
            } else {
                return DomainSpec(MappedDisc{s.map.scaled(factor), s.status}, center_ * factor);
            }
        },
        shape_);
}

std::string DomainSpec::describe() const {
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disc>) {
                os << "disc:" << s.radius;
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                os << "ellipse:" << s.semi_x << "," << s.semi_y;
            } else if constexpr (std::is_same_v<T, Rectangle>) {
                os << "rectangle:" << s.width << "," << s.height;
            } else {
                os << "mapped_disc:";
                bool first = true;
                for (const auto& c : s.map.coefficients()) {
                    if (!first) os << ",";
                    first = false;
                    os << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
                }
            }
        },
        shape_);
    if (center_ != Complex{}) os << "@" << center_.real() << "," << center_.imag();
    return os.str();
}

// ---------------------------------------------------------------------------
// Grids

int GridDiscretization::node_at(int i, int j) const {
    const int li = i - i_min, lj = j - j_min;
    if (li < 0 || lj < 0 || li >= nx || lj >= ny) return -1;
    return index[static_cast<std::size_t>(lj) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(li)];
}

Complex GridDiscretization::position(std::size_t node) const {
    return {nodes[node].first * h, nodes[node].second * h};
}

namespace {

// Signed crossings of the polyline with the horizontal line y = const, using
// the same half-open convention as geometry::winding_number.
std::vector<std::pair<double, int>> row_crossings(std::span<const Complex> poly, double y) {
    std::vector<std::pair<double, int>> out;
    const std::size_t n = poly.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex a = poly[k], b = poly[(k + 1) % n];
        int dir = 0;
        if (a.imag() <= y && b.imag() > y) dir = 1;
        if (a.imag() > y && b.imag() <= y) dir = -1;
        if (dir == 0) continue;
        const double t = (y - a.imag()) / (b.imag() - a.imag());
        out.emplace_back(a.real() + t * (b.real() - a.real()), dir);
    }
    std::sort(out.begin(), out.end());
    return out;
}

double clamp_fraction(double t) { return std::clamp(t, kMinBoundaryFraction, 1.0); }

double bisect_crossing_fraction(const DomainSpec& spec, Complex from, Complex to) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 48; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (spec.contains(from + mid * (to - from))) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return clamp_fraction(0.5 * (lo + hi));
}

// First crossing of the lattice edge from -> to with the boundary polyline.
double polyline_crossing_fraction(std::span<const Complex> poly, Complex from, Complex to) {
    const Complex d = to - from;
    double best = 1.0;
    const std::size_t n = poly.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex a = poly[k], b = poly[(k + 1) % n];
        const Complex e = b - a;
        const double denom = d.real() * e.imag() - d.imag() * e.real();
        if (denom == 0.0) continue;
        const Complex w = a - from;
        const double t = (w.real() * e.imag() - w.imag() * e.real()) / denom;
        const double u = (w.real() * d.imag() - w.imag() * d.real()) / denom;
        if (t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0) best = std::min(best, t);
    }
    return clamp_fraction(best);
}

}  // namespace

GridDiscretization discretize(const DomainSpec& spec, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw InvalidInput("discretize: spacing must be positive");
    const auto box = spec.bounding_box();

    GridDiscretization g;
    g.h = h;
    g.i_min = static_cast<int>(std::floor(box[0] / h)) - 1;
    g.j_min = static_cast<int>(std::floor(box[2] / h)) - 1;
    const int i_max = static_cast<int>(std::ceil(box[1] / h)) + 1;
    const int j_max = static_cast<int>(std::ceil(box[3] / h)) + 1;
    g.nx = i_max - g.i_min + 1;
    g.ny = j_max - g.j_min + 1;
    if (static_cast<double>(g.nx) * g.ny > 2e8) throw InvalidInput("discretize: grid too large");
    g.index.assign(static_cast<std::size_t>(g.nx) * static_cast<std::size_t>(g.ny), -1);

    const auto* mapped = std::get_if<MappedDisc>(&spec.shape());
    std::vector<Complex> poly;
    if (mapped) poly = spec.boundary(kMembershipBoundarySamples);

    for (int lj = 0; lj < g.ny; ++lj) {
        const int j = g.j_min + lj;
        const double y = j * h;
        std::vector<std::pair<double, int>> crossings;
        if (mapped) crossings = row_crossings(poly, y);
        for (int li = 0; li < g.nx; ++li) {
            const int i = g.i_min + li;
            const double x = i * h;
            bool inside = false;
            if (mapped) {
                int wn = 0;
                for (const auto& [cx, dir] : crossings)
                    if (cx > x) wn += dir;
                inside = wn != 0;
            } else {
                inside = spec.contains({x, y});
            }
            if (inside) {
                g.index[static_cast<std::size_t>(lj) * static_cast<std::size_t>(g.nx) + static_cast<std::size_t>(li)] =
                    static_cast<int>(g.nodes.size());
                g.nodes.emplace_back(i, j);
            }
        }
    }
    if (g.nodes.size() < 9) {
        throw ResolutionError("discretize: only " + std::to_string(g.nodes.size()) +
                              " interior nodes at h = " + std::to_string(h));
    }

    constexpr int di[4] = {1, -1, 0, 0};
    constexpr int dj[4] = {0, 0, 1, -1};
    g.boundary_fraction.assign(g.nodes.size(), {1.0, 1.0, 1.0, 1.0});
    for (std::size_t n = 0; n < g.nodes.size(); ++n) {
        const auto [i, j] = g.nodes[n];
        for (int k = 0; k < 4; ++k) {
            if (g.node_at(i + di[k], j + dj[k]) >= 0) continue;
            const Complex from(i * h, j * h);
            const Complex to((i + di[k]) * h, (j + dj[k]) * h);
            g.boundary_fraction[n][static_cast<std::size_t>(k)] =
                mapped ? polyline_crossing_fraction(poly, from, to) : bisect_crossing_fraction(spec, from, to);
        }
    }
    return g;
}

SparseSymmetricMatrix dirichlet_laplacian(const GridDiscretization& grid, BoundaryScheme scheme) {
    const double inv_h2 = 1.0 / (grid.h * grid.h);
    SparseSymmetricMatrix a(grid.size());
    constexpr int di[4] = {1, -1, 0, 0};
    constexpr int dj[4] = {0, 0, 1, -1};
    for (std::size_t n = 0; n < grid.size(); ++n) {
        const auto [i, j] = grid.nodes[n];
        double diag = 0.0;
        for (int k = 0; k < 4; ++k) {
            const int nb = grid.node_at(i + di[k], j + dj[k]);
            if (nb >= 0) {
                a.add(n, static_cast<std::size_t>(nb), -inv_h2);
                diag += inv_h2;
            } else if (scheme == BoundaryScheme::ghost_linear) {
                // u_ghost = -(1 - theta)/theta * u_n makes u vanish at distance theta*h.
                diag += inv_h2 / grid.boundary_fraction[n][static_cast<std::size_t>(k)];
            } else {
                diag += inv_h2;
            }
        }
        a.add(n, n, diag);
    }
    return a;
}

EigenResult dirichlet_eigenvalue(const GridDiscretization& grid, BoundaryScheme scheme) {
    const auto a = dirichlet_laplacian(grid, scheme);
    EigenPair pair = inverse_power_iteration(a, 1e-10, 1e-10);

    double sum = 0.0, sq = 0.0;
    for (double v : pair.vector) {
        sum += v;
        sq += v * v;
    }
    const double sign = sum < 0.0 ? -1.0 : 1.0;
    const double scale = sign / std::sqrt(sq * grid.cell_area());
    for (double& v : pair.vector) v *= scale;

    const double peak = *std::max_element(pair.vector.begin(), pair.vector.end());
    const double floor = *std::min_element(pair.vector.begin(), pair.vector.end());
    if (floor < -1e-10 * std::max(1.0, peak)) {
        throw InternalConsistencyError("dirichlet_eigenvalue: first eigenfunction changes sign");
    }
    return {pair.value, std::move(pair.vector), pair.iterations};
}

TorsionResult torsional_rigidity(const GridDiscretization& grid, BoundaryScheme scheme) {
    const auto a = dirichlet_laplacian(grid, scheme);
    const std::vector<double> rhs(grid.size(), 2.0);
    CgResult solve = cg_solve(a, rhs, 1e-10);

    double sum = 0.0, l1 = 0.0;
    for (double v : solve.x) {
        if (v < -1e-10) throw InternalConsistencyError("torsional_rigidity: negative torsion function");
        sum += v;
        l1 += std::abs(v);
    }
    // Discrete Dirichlet energy summed edge by edge; edges that leave the
    // domain end at the boundary point where u vanishes.
    constexpr int di[4] = {1, -1, 0, 0};
    constexpr int dj[4] = {0, 0, 1, -1};
    double energy = 0.0;
    for (std::size_t n = 0; n < grid.size(); ++n) {
        const auto [i, j] = grid.nodes[n];
        const double un = solve.x[n];
        for (int k = 0; k < 4; ++k) {
            const int nb = grid.node_at(i + di[k], j + dj[k]);
            if (nb >= 0) {
                if (k % 2 == 0) energy += (un - solve.x[static_cast<std::size_t>(nb)]) * (un - solve.x[static_cast<std::size_t>(nb)]);
            } else {
                const double theta =
                    scheme == BoundaryScheme::ghost_linear ? grid.boundary_fraction[n][static_cast<std::size_t>(k)] : 1.0;
                energy += un * un / theta;
            }
        }
    }

    TorsionResult out;
    out.rho = 2.0 * grid.cell_area() * sum;
    const double l1_norm = grid.cell_area() * l1;
    out.variational_rho = energy > 0.0 ? 4.0 * l1_norm * l1_norm / energy : 0.0;
    out.torsion_function = std::move(solve.x);
    return out;
}

// ---------------------------------------------------------------------------
// Inradius

Incircle incircle(const DomainSpec& spec) {
    return std::visit(
        [&](const auto& s) -> Incircle {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disc>) {
                return {spec.center(), s.radius};
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return {spec.center(), std::min(s.semi_x, s.semi_y)};
            } else if constexpr (std::is_same_v<T, Rectangle>) {
                return {spec.center(), std::min(s.width, s.height) / 2.0};
            } else {
                const auto poly = spec.boundary(kMembershipBoundarySamples);
                const auto box = spec.bounding_box();
                const double extent = std::max(box[1] - box[0], box[3] - box[2]);
                const double step0 = extent / 80.0;

                auto score = [&](Complex z) {
                    return spec.contains(z) ? geometry::distance_to_polyline(poly, z) : -1.0;
                };

                Complex best = spec.center();
                double best_d = score(best);
                for (double y = box[2]; y <= box[3]; y += step0) {
                    for (double x = box[0]; x <= box[1]; x += step0) {
                        const double d = score({x, y});
                        if (d > best_d) {
                            best_d = d;
                            best = {x, y};
                        }
                    }
                }
                // Compass search from the best grid node.
                for (double step = step0; step > 1e-9 * extent; step *= 0.5) {
                    bool moved = true;
                    while (moved) {
                        moved = false;
                        for (int k = 0; k < 16; ++k) {
                            const Complex cand = best + std::polar(step, 2.0 * M_PI * k / 16.0);
                            const double d = score(cand);
                            if (d > best_d) {
                                best_d = d;
                                best = cand;
                                moved = true;
                            }
                        }
                    }
                }
                return {best, best_d};
            }
        },
        spec.shape());
}

double inradius(const DomainSpec& spec) { return incircle(spec).radius; }

PayneRaynerCheck payne_rayner_check(double lambda, const std::vector<double>& eigenfunction,
                                    const GridDiscretization& grid) {
    if (!(lambda > 0.0)) throw InvalidInput("payne_rayner_check: lambda must be positive");
    double l1 = 0.0, l2 = 0.0;
    for (double v : eigenfunction) {
        l1 += std::abs(v);
        l2 += v * v;
    }
    l1 *= grid.cell_area();
    l2 = std::sqrt(l2 * grid.cell_area());
    PayneRaynerCheck c;
    c.lhs = l1 / l2;
    c.rhs = 2.0 * std::sqrt(M_PI) / std::sqrt(lambda);
    c.holds = c.lhs >= c.rhs * (1.0 - kPayneRaynerSlack);
    return c;
}

// ---------------------------------------------------------------------------
// Closed forms

double rectangle_torsional_rigidity(double width, double height) {
    const double a = std::max(width, height);
    const double b = std::min(width, height);
    double series = 0.0;
    for (int k = 1; k < 10001; k += 2) {
        const double term = std::tanh(k * M_PI * a / (2.0 * b)) / std::pow(static_cast<double>(k), 5);
        series += term;
        if (term < 1e-20) break;
    }
    return a * b * b * b / 3.0 * (1.0 - 192.0 * b / (std::pow(M_PI, 5) * a) * series);
}

std::optional<double> exact_torsional_rigidity(const DomainSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::optional<double> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disc>) {
                return M_PI * std::pow(s.radius, 4) / 2.0;
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                const double a = s.semi_x, b = s.semi_y;
                return M_PI * a * a * a * b * b * b / (a * a + b * b);
            } else if constexpr (std::is_same_v<T, Rectangle>) {
                return rectangle_torsional_rigidity(s.width, s.height);
            } else {
                return std::nullopt;
            }
        },
        spec.shape());
}

std::optional<double> exact_dirichlet_eigenvalue(const DomainSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::optional<double> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disc>) {
                return kBesselJ0FirstZero * kBesselJ0FirstZero / (s.radius * s.radius);
            } else if constexpr (std::is_same_v<T, Rectangle>) {
                return M_PI * M_PI * (1.0 / (s.width * s.width) + 1.0 / (s.height * s.height));
            } else {
                return std::nullopt;
            }
        },
        spec.shape());
}

SpectralQuantities compute_spectral_quantities(const DomainSpec& spec, double h, BoundaryScheme scheme) {
    const auto grid = discretize(spec, h);
    auto eig = dirichlet_eigenvalue(grid, scheme);
    const auto torsion = torsional_rigidity(grid, scheme);

    SpectralQuantities q;
    q.lambda = eig.lambda;
    q.rho = torsion.rho;
    q.variational_rho = torsion.variational_rho;
    q.inradius = inradius(spec);
    q.nodes = grid.size();
    q.grid_area = static_cast<double>(grid.size()) * grid.cell_area();
    q.payne_rayner = payne_rayner_check(eig.lambda, eig.eigenfunction, grid);
    q.eigenfunction = std::move(eig.eigenfunction);
    return q;
}

}  // namespace toeplab
