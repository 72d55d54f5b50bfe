#include "toeplab_cli/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>

#include "toeplab/toeplab.hpp"

namespace toeplab::cli {

namespace {

constexpr double kGridH = 0.01;

double j0_squared() { return kBesselJ0FirstZero * kBesselJ0FirstZero; }

double relative_error(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

// Spectral solves at the acceptance spacing are shared by criteria 6-8.
class SpectralCache {
public:
    const SpectralQuantities& get(const std::string& key) {
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, compute_spectral_quantities(domain(key), kGridH)).first;
        return it->second;
    }

    static DomainSpec domain(const std::string& key) {
        if (key == "map_eps_0.3") return DomainSpec::mapped_disc(make_example_map(0.3));
        if (key == "map_eps_0.5") return DomainSpec::mapped_disc(make_example_map(0.5));
        return DomainSpec::parse(key);
    }

private:
    std::map<std::string, SpectralQuantities> cache_;
};

const char* const kComputedDomains[] = {"disc:1", "ellipse:2,1", "square:1", "map_eps_0.3", "map_eps_0.5"};

struct Outcome {
    bool passed = true;
    std::string summary;
    Json details = Json::object();
};

Outcome matrix_regression() {
    Outcome o;
    double worst = 0.0;
    for (double e : {0.1, 0.3, 0.5}) {
        const double e2 = e * e, e3 = e2 * e, e4 = e2 * e2;
        const double expected[3][3] = {
            {1 + e2 + e4 / 9, e + e3 / 3, e2 / 3},
            {e + e3 / 3, e2 + e4 / 9, e3 / 3},
            {e2 / 3, e3 / 3, e4 / 9},
        };
        const auto m = smirnov_commutator_matrix(make_example_map(e));
        double err = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) err = std::max(err, std::abs(m(i, j) - expected[i][j]));
        o.details["max_abs_error_eps_" + std::to_string(e).substr(0, 3)] = err;
        worst = std::max(worst, err);
    }
    o.passed = worst <= 1e-12;
    char buf[96];
    std::snprintf(buf, sizeof buf, "max entry error %.2e (tol 1e-12)", worst);
    o.summary = buf;
    return o;
}

Outcome norm_expansion() {
    Outcome o;
    double worst_ratio = 0.0;
    Json rows = Json::array();
    for (double e : {0.05, 0.1, 0.2, 0.3}) {
        const double norm = operator_norm(smirnov_commutator_matrix(make_example_map(e)));
        const double series = 1 + 2 * e * e - std::pow(e, 4) / 9 + 2.0 / 3.0 * std::pow(e, 6);
        const double bound = 10 * std::pow(e, 8);
        const double diff = std::abs(norm - series);
        worst_ratio = std::max(worst_ratio, diff / bound);
        rows.push_back(Json{{"eps", e}, {"norm", norm}, {"expansion", series}, {"difference", diff}, {"bound", bound}});
    }
    o.details["rows"] = std::move(rows);
    o.passed = worst_ratio <= 1.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst |norm - expansion| / (10 eps^8) = %.3f", worst_ratio);
    o.summary = buf;
    return o;
}

Outcome geometry_closed_forms() {
    Outcome o;
    double worst = 0.0;
    for (double e : {0.1, 0.5, 0.9}) {
        const auto f = make_example_map(e);
        const double area = M_PI * (1 + 2 * e * e + std::pow(e, 4) / 3);
        const double perimeter = 2 * M_PI * (1 + e * e);
        worst = std::max({worst, relative_error(area_of_image(f), area), relative_error(perimeter_of_image(f), perimeter)});
    }
    o.details["max_relative_error"] = worst;
    o.passed = worst <= 1e-10;
    char buf[96];
    std::snprintf(buf, sizeof buf, "max relative error %.2e (tol 1e-10)", worst);
    o.summary = buf;
    return o;
}

Outcome sandwich_sweep() {
    Outcome o;
    const auto rows = norm_sweep(0.0, 0.9, 50);
    double lower_margin = INFINITY, upper_margin = INFINITY;
    bool ok = rows.size() == 50;
    for (const auto& r : rows) {
        lower_margin = std::min(lower_margin, r.norm - r.khavinson);
        upper_margin = std::min(upper_margin, r.putnam - r.norm);
        ok = ok && r.khavinson <= r.norm + 1e-10 && r.norm <= r.putnam + 1e-10;
    }
    const auto f = make_example_map(0.5);
    const double p = perimeter_of_image(f);
    const double kh = khavinson_bound(area_of_image(f), p, p);
    const double closed = std::pow(1 + (0.25 / 3) * (1 + 1.6), 2);
    const double kh_err = std::abs(kh - closed);
    ok = ok && kh_err <= 1e-12;
    o.passed = ok;
    o.details = Json{{"rows", rows.size()},
                     {"min_norm_minus_khavinson", lower_margin},
                     {"min_putnam_minus_norm", upper_margin},
                     {"khavinson_eps_0.5", kh},
                     {"khavinson_closed_form_error", kh_err}};
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu rows sandwiched (min margins %.2e, %.2e); khavinson(0.5) error %.1e", rows.size(),
                  lower_margin, upper_margin, kh_err);
    o.summary = buf;
    return o;
}

Outcome bergman_disc() {
    Outcome o;
    const ConformalMap w({1.0});
    const double norm = bergman_commutator_norm(w).norm;
    const auto block = bergman_commutator_block(w, 52);
    double worst = 0.0;
    for (std::size_t k = 0; k < 50; ++k)
        for (std::size_t j = 0; j < 50; ++j) {
            const double expected = k == j ? 1.0 / ((k + 1.0) * (k + 2.0)) : 0.0;
            worst = std::max(worst, std::abs(block(k, j) - expected));
        }
    o.passed = std::abs(norm - 0.5) <= 1e-6 && worst <= 1e-12;
    o.details = Json{{"norm", norm}, {"max_entry_error", worst}};
    char buf[128];
    std::snprintf(buf, sizeof buf, "norm %.15f; diagonal entry error %.1e", norm, worst);
    o.summary = buf;
    return o;
}

Outcome spectral_oracles(SpectralCache& cache) {
    Outcome o;
    struct Target {
        const char* label;
        const char* domain;
        bool is_lambda;
        double exact;
    };
    const Target targets[] = {
        {"lambda disc:1", "disc:1", true, j0_squared()},
        {"lambda square:1", "square:1", true, 2 * M_PI * M_PI},
        {"rho disc:1", "disc:1", false, M_PI / 2},
        {"rho ellipse:2,1", "ellipse:2,1", false, 8 * M_PI / 5},
        {"rho square:1", "square:1", false, rectangle_torsional_rigidity(1, 1)},
    };
    double worst = 0.0;
    Json rows = Json::array();
    for (const auto& t : targets) {
        const auto& q = cache.get(t.domain);
        const double value = t.is_lambda ? q.lambda : q.rho;
        const double err = relative_error(value, t.exact);
        worst = std::max(worst, err);
        rows.push_back(Json{{"quantity", t.label}, {"computed", value}, {"exact", t.exact}, {"relative_error", err}});
    }
    o.details = Json{{"h", kGridH}, {"rows", std::move(rows)}};
    o.passed = worst <= 0.02;
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst relative error %.2e at h = 0.01 (tol 2e-2)", worst);
    o.summary = buf;
    return o;
}

Outcome inequality_suite(SpectralCache& cache) {
    Outcome o;
    Json rows = Json::array();
    bool ok = true;
    for (const char* key : kComputedDomains) {
        const auto& q = cache.get(key);
        const double area = SpectralCache::domain(key).area();
        const bool is_disc = std::string(key) == "disc:1";
        const auto fk = faber_krahn_check(q.lambda, area);
        const auto sv = saint_venant_check(q.rho, area);
        const double fk_ratio = fk.value / fk.sharp_constant;
        const double sv_ratio = sv.value / sv.sharp_constant;

        bool row_ok = q.payne_rayner.holds && fk.sharp_constant_holds && sv.sharp_constant_holds &&
                      fk.value > fk.weak_constant && sv.value < sv.weak_constant;
        if (is_disc) row_ok = row_ok && std::abs(fk_ratio - 1) <= kIsoperimetricSlack && std::abs(sv_ratio - 1) <= kIsoperimetricSlack;
        ok = ok && row_ok;
        rows.push_back(Json{{"domain", key},
                            {"payne_rayner_lhs", q.payne_rayner.lhs},
                            {"payne_rayner_rhs", q.payne_rayner.rhs},
                            {"lambda_area_over_j0sq_pi", fk_ratio},
                            {"lambda_area_over_4pi", fk.value / fk.weak_constant},
                            {"rho_over_area_sq_2pi", sv_ratio},
                            {"rho_over_area_sq_pi", sv.value / sv.weak_constant},
                            {"holds", row_ok}});
    }
    o.details = Json{{"h", kGridH}, {"domains", std::move(rows)}};
    o.passed = ok;
    o.summary = ok ? "Payne-Rayner, Faber-Krahn and Saint-Venant hold on 5 domains"
                   : "an isoperimetric check failed; see details";
    return o;
}

Outcome bergman_chain(SpectralCache& cache) {
    Outcome o;
    struct Case {
        const char* label;
        ConformalMap map;
        const char* domain;
    };
    const Case cases[] = {
        {"F = w", ConformalMap({1.0}), "disc:1"},
        {"eps = 0.3", make_example_map(0.3), "map_eps_0.3"},
        {"eps = 0.5", make_example_map(0.5), "map_eps_0.5"},
    };
    bool ok = true;
    Json rows = Json::array();
    for (const auto& c : cases) {
        const double norm = bergman_commutator_norm(c.map).norm;
        const auto chain = bergman_chain_report(c.label, norm, area_of_image(c.map), cache.get(c.domain));
        Json checks = Json::array();
        for (const auto& check : chain.checks) checks.push_back(inequality_json(check));
        bool row_ok = chain.all_hold();
        if (std::string(c.label) == "F = w") {
            const double tol = std::max(1e-6, kGridSlack * *chain.torsion_lower);
            row_ok = row_ok && std::abs(*chain.torsion_lower - 0.5) <= tol && std::abs(norm - 0.5) <= 1e-6;
        }
        ok = ok && row_ok;
        rows.push_back(Json{{"map", c.label},
                            {"lambda_lower", *chain.lambda_lower},
                            {"torsion_lower", *chain.torsion_lower},
                            {"norm", norm},
                            {"putnam", *chain.putnam},
                            {"holds", row_ok},
                            {"checks", std::move(checks)}});
    }
    o.details = Json{{"h", kGridH}, {"maps", std::move(rows)}};
    o.passed = ok;
    o.summary = ok ? "lambda_lower <= torsion_lower <= norm <= putnam for w, eps 0.3, eps 0.5"
                   : "a chain inequality failed; see details";
    return o;
}

Outcome ellipse_window() {
    Outcome o;
    const auto r = best_torsion_window(DomainSpec::ellipse(2, 1), {}, kGridH);
    double disc_bound = NAN;
    for (const auto& w : r.evaluated)
        if (w.label == "inscribed_disc") disc_bound = w.bound;
    o.passed = r.best_window == "full" && std::abs(r.best_bound - 0.8) <= 1e-12 && std::abs(disc_bound - 0.5) <= 1e-12;
    o.details = Json{{"best_window", r.best_window}, {"best_bound", r.best_bound}, {"inscribed_disc_bound", disc_bound}};
    char buf[128];
    std::snprintf(buf, sizeof buf, "best window '%s' with bound %.15g; inscribed disc %.15g", r.best_window.c_str(),
                  r.best_bound, disc_bound);
    o.summary = buf;
    return o;
}

Outcome polydisc_constants() {
    Outcome o;
    std::mt19937_64 rng(20120401);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst_formula = 0.0;
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            PolydiscSymbol s;
            for (int j = 0; j < n; ++j) s.a.emplace_back(u(rng), u(rng));
            double sa = 0.0;
            for (const auto& a : s.a) sa += std::norm(a);
            const auto b = polydisc_bounds(s);
            const double lower = std::pow(3.0, n - 1) / std::pow(2.0, 2 * n - 1) * sa;
            const double upper = n * sa;
            worst_formula = std::max({worst_formula, relative_error(b.lower, lower), relative_error(b.upper, upper)});
        }
    }
    double worst_mc = 0.0;
    Json moments = Json::array();
    for (int n = 1; n <= 3; ++n) {
        const auto v = verify_moment_integrals(n, 1000000, 20120401);
        worst_mc = std::max({worst_mc, v.numerator_relative_error, v.denominator_relative_error});
        moments.push_back(Json{{"n", n},
                               {"numerator_relative_error", v.numerator_relative_error},
                               {"denominator_relative_error", v.denominator_relative_error}});
    }
    o.passed = worst_formula <= 1e-15 && worst_mc <= 0.005;
    o.details = Json{{"max_formula_relative_error", worst_formula}, {"moments", std::move(moments)}};
    char buf[128];
    std::snprintf(buf, sizeof buf, "constants error %.1e; worst Monte Carlo error %.2e%% (tol 0.5%%)", worst_formula,
                  100 * worst_mc);
    o.summary = buf;
    return o;
}

Outcome conjecture_scan() {
    Outcome o;
    std::mt19937_64 rng(20120401);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto polar = [&](double rmax) { return std::polar(rmax * std::sqrt(unit(rng)), 2 * M_PI * unit(rng)); };

    Json maps = Json::array();
    bool putnam_ok = true;
    int conjecture_violations = 0;
    double min_margin = INFINITY;
    int accepted = 0;
    while (accepted < 20) {
        const Complex c1 = std::polar(0.5 + 1.5 * unit(rng), 2 * M_PI * unit(rng));
        const ConformalMap f({c1, c1 * polar(0.45), c1 * polar(0.2)});
        if (univalence_check(f) != UnivalenceStatus::univalent_certified) continue;
        ++accepted;
        const double norm = bergman_commutator_norm(f).norm;
        const double area = area_of_image(f);
        const double putnam = putnam_bound(area);
        const double margin = area / (2 * M_PI) - norm;
        putnam_ok = putnam_ok && norm <= putnam + 1e-6;
        if (margin < 0) ++conjecture_violations;
        min_margin = std::min(min_margin, margin / norm);
        Json coeffs = Json::array();
        for (const auto& c : f.coefficients()) coeffs.push_back(complex_json(c));
        maps.push_back(Json{{"coefficients", std::move(coeffs)},
                            {"norm", norm},
                            {"putnam", putnam},
                            {"conjectured", area / (2 * M_PI)},
                            {"margin_vs_conjecture", margin}});
    }
    o.passed = putnam_ok;
    o.details = Json{{"maps", std::move(maps)},
                     {"conjecture_violations", conjecture_violations},
                     {"min_relative_margin", min_margin}};
    char buf[160];
    std::snprintf(buf, sizeof buf, "20 maps below Putnam; conjecture margin >= %.3g relative, %d violation(s) recorded",
                  min_margin, conjecture_violations);
    o.summary = buf;
    return o;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
    SpectralCache cache;
    struct Entry {
        const char* name;
        double budget;
        std::function<Outcome()> run;
    };
    const Entry entries[] = {
        {"matrix regression", 1, matrix_regression},
        {"norm expansion", 1, norm_expansion},
        {"geometry closed forms", 1, geometry_closed_forms},
        {"norm sandwich sweep", 5, sandwich_sweep},
        {"bergman disc sharpness", 10, bergman_disc},
        {"spectral oracles", 60, [&] { return spectral_oracles(cache); }},
        {"inequality suite", 90, [&] { return inequality_suite(cache); }},
        {"bergman theorem chain", 60, [&] { return bergman_chain(cache); }},
        {"ellipse window", 1, ellipse_window},
        {"polydisc constants", 30, polydisc_constants},
        {"conjecture scan", 300, conjecture_scan},
    };

    std::vector<CriterionResult> results;
    int id = 0;
    for (const auto& e : entries) {
        CriterionResult r;
        r.id = ++id;
        r.name = e.name;
        r.budget_seconds = e.budget;
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = e.run();
            r.passed = o.passed;
            r.summary = std::move(o.summary);
            r.details = std::move(o.details);
        } catch (const std::exception& ex) {
            r.passed = false;
            r.summary = std::string("exception: ") + ex.what();
            r.details = Json{{"error", ex.what()}};
        }
        r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.within_budget = r.elapsed_seconds <= r.budget_seconds;
        r.passed = r.passed && r.within_budget;
        if (on_result) on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

std::string format_line(const CriterionResult& r) {
    char head[160];
    std::snprintf(head, sizeof head, "%s  %2d  %-24s (%.2f s, budget %.0f s)  ", r.passed ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.elapsed_seconds, r.budget_seconds);
    std::string line = head + r.summary;
    if (!r.within_budget) line += "  [over runtime budget]";
    return line;
}

Json acceptance_json(const std::vector<CriterionResult>& results) {
    Json criteria = Json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        criteria.push_back(Json{{"id", r.id},
                                {"name", r.name},
                                {"passed", r.passed},
                                {"budget_seconds", r.budget_seconds},
                                {"summary", r.summary},
                                {"details", r.details}});
    }
    return Json{{"all_passed", all}, {"criteria", std::move(criteria)}};
}

}  // namespace toeplab::cli
