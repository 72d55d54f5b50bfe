#include "toeplab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toeplab/errors.hpp"

namespace toeplab {

double putnam_bound(double area) {
    if (area < 0.0) throw InvalidInput("putnam_bound: negative area");
    return area / M_PI;
}

double khavinson_bound(double area, double perimeter, double phi_deriv_norm_sq) {
    if (!(area > 0.0 && perimeter > 0.0 && phi_deriv_norm_sq > 0.0)) {
        throw InvalidInput("khavinson_bound: inputs must be positive");
    }
    return 4.0 * area * area / (phi_deriv_norm_sq * perimeter);
}

double lambda_lower_bound(double lambda, double area) {
    if (!(lambda > 0.0 && area > 0.0)) throw InvalidInput("lambda_lower_bound: inputs must be positive");
    return 16.0 * M_PI / (lambda * lambda * area);
}

double torsion_lower_bound(double rho, double area) {
    if (!(rho > 0.0 && area > 0.0)) throw InvalidInput("torsion_lower_bound: inputs must be positive");
    return rho / area;
}

double inradius_lower_bound(double r_inner) {
    if (!(r_inner > 0.0)) throw InvalidInput("inradius_lower_bound: radius must be positive");
    return 0.5 * r_inner * r_inner;
}

InequalityCheck check_le(std::string name, double lhs, double rhs, double tolerance, std::string note) {
    InequalityCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.tolerance = tolerance;
    c.margin = rhs - lhs;
    c.holds = lhs <= rhs + tolerance;
    c.note = std::move(note);
    return c;
}

bool BoundsReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.holds; });
}

BoundsReport smirnov_bounds_report(const ConformalMap& f) {
    BoundsReport r;
    r.context = "smirnov";
    r.area = area_of_image(f);
    r.perimeter = perimeter_of_image(f);
    r.computed_norm = operator_norm(smirnov_commutator_matrix(f));
    r.putnam = putnam_bound(*r.area);
    r.khavinson = khavinson_bound(*r.area, *r.perimeter, *r.perimeter);
    r.checks.push_back(check_le("khavinson <= norm", *r.khavinson, *r.computed_norm, kExactTolerance));
    r.checks.push_back(check_le("norm <= putnam", *r.computed_norm, *r.putnam, kExactTolerance));
    r.checks.push_back(check_le("4 pi area <= perimeter^2", 4.0 * M_PI * *r.area,
                                *r.perimeter * *r.perimeter, kExactTolerance * *r.perimeter * *r.perimeter));
    return r;
}

BoundsReport bergman_chain_report(const std::string& context, double norm, double area,
                                  const SpectralQuantities& spectral) {
    BoundsReport r;
    r.context = context;
    r.computed_norm = norm;
    r.area = area;
    r.lambda = spectral.lambda;
    r.rho = spectral.rho;
    r.inradius = spectral.inradius;
    r.putnam = putnam_bound(area);
    r.lambda_lower = lambda_lower_bound(spectral.lambda, area);
    r.torsion_lower = torsion_lower_bound(spectral.rho, area);
    r.inradius_lower = inradius_lower_bound(spectral.inradius);

    const std::string grid_note = "grid-computed input, 2% slack";
    const double grid_tol = std::max(1e-6, kGridSlack * *r.torsion_lower);
    r.checks.push_back(check_le("lambda_lower <= torsion_lower", *r.lambda_lower, *r.torsion_lower, grid_tol, grid_note));
    r.checks.push_back(check_le("torsion_lower <= norm", *r.torsion_lower, norm, grid_tol, grid_note));
    r.checks.push_back(check_le("inradius_lower <= norm", *r.inradius_lower, norm,
                                std::max(1e-6, kGridSlack * *r.inradius_lower), "sampled-boundary inradius"));
    r.checks.push_back(check_le("norm <= putnam", norm, *r.putnam, 1e-6));
    return r;
}

namespace {

bool window_inside(const DomainSpec& outer, const DomainSpec& window, std::string& why) {
    constexpr int kSamples = 512;
    const Complex c = window.center();
    for (const auto& p : window.boundary(kSamples)) {
        const Complex q = c + (p - c) * (1.0 - 1e-9);
        if (!outer.contains(q)) {
            std::ostringstream os;
            os << "boundary point (" << q.real() << ", " << q.imag() << ") lies outside " << outer.describe();
            why = os.str();
            return false;
        }
    }
    return true;
}

WindowEvaluation evaluate_window(const std::string& label, const DomainSpec& w, double h) {
    WindowEvaluation e;
    e.label = label;
    e.area = w.area();
    if (auto exact = exact_torsional_rigidity(w)) {
        e.rho = *exact;
        e.exact = true;
    } else {
        e.rho = torsional_rigidity(discretize(w, h)).rho;
    }
    e.bound = torsion_lower_bound(e.rho, e.area);
    return e;
}

}  // namespace

WindowSearchResult best_torsion_window(const DomainSpec& spec, const std::vector<TorsionWindow>& candidates,
                                       double h) {
    WindowSearchResult out;
    out.evaluated.push_back(evaluate_window("full", spec, h));

    const Incircle in = incircle(spec);
    out.evaluated.push_back(evaluate_window("inscribed_disc", DomainSpec::disc(in.radius, in.center), h));

    for (const auto& cand : candidates) {
        std::string why;
        if (!window_inside(spec, cand.window, why)) {
            out.rejected.push_back(cand.label + ": " + why);
            continue;
        }
        out.evaluated.push_back(evaluate_window(cand.label, cand.window, h));
    }

    const auto best = std::max_element(out.evaluated.begin(), out.evaluated.end(),
                                       [](const auto& a, const auto& b) { return a.bound < b.bound; });
    out.best_bound = best->bound;
    out.best_window = best->label;
    return out;
}

std::vector<SweepRow> norm_sweep(double eps_min, double eps_max, int steps) {
    if (!(eps_min >= 0.0 && eps_min < eps_max && eps_max < 1.0)) {
        throw InvalidInput("norm_sweep: need 0 <= eps_min < eps_max < 1");
    }
    if (steps < 2) throw InvalidInput("norm_sweep: need at least 2 steps");

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double eps = i == steps - 1 ? eps_max : eps_min + (eps_max - eps_min) * i / (steps - 1);
        const auto f = make_example_map(eps);
        SweepRow row;
        row.eps = eps;
        row.area = area_of_image(f);
        row.perimeter = perimeter_of_image(f);
        row.norm = operator_norm(smirnov_commutator_matrix(f));
        row.putnam = putnam_bound(row.area);
        row.khavinson = khavinson_bound(row.area, row.perimeter, row.perimeter);
        if (row.khavinson > row.norm + kExactTolerance || row.norm > row.putnam + kExactTolerance) {
            std::ostringstream os;
            os.precision(17);
            os << "norm_sweep: sandwich violated at eps = " << eps << " (" << row.khavinson << ", "
               << row.norm << ", " << row.putnam << ")";
            throw InternalConsistencyError(os.str());
        }
        rows.push_back(row);
    }
    return rows;
}

ConstantCheck faber_krahn_check(double lambda, double area) {
    if (!(lambda > 0.0 && area > 0.0)) throw InvalidInput("faber_krahn_check: inputs must be positive");
    ConstantCheck c;
    c.value = lambda * area;
    c.weak_constant = 4.0 * M_PI;
    c.sharp_constant = kBesselJ0FirstZero * kBesselJ0FirstZero * M_PI;
    c.weak_constant_holds = c.value >= c.weak_constant * (1.0 - kIsoperimetricSlack);
    c.sharp_constant_holds = c.value >= c.sharp_constant * (1.0 - kIsoperimetricSlack);
    return c;
}

ConstantCheck saint_venant_check(double rho, double area) {
    if (!(rho > 0.0 && area > 0.0)) throw InvalidInput("saint_venant_check: inputs must be positive");
    ConstantCheck c;
    c.value = rho;
    c.weak_constant = area * area / M_PI;
    c.sharp_constant = area * area / (2.0 * M_PI);
    c.weak_constant_holds = c.value <= c.weak_constant * (1.0 + kIsoperimetricSlack);
    c.sharp_constant_holds = c.value <= c.sharp_constant * (1.0 + kIsoperimetricSlack);
    return c;
}

}  // namespace toeplab
