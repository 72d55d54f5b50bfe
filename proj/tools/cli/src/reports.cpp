#include "toeplab_cli/reports.hpp"

#include <cmath>
#include <cstdio>

#include "toeplab/toeplab.hpp"

namespace toeplab::cli {

namespace {

Json map_json(const ConformalMap& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coefficients()) coeffs.push_back(complex_json(c));
    return Json{{"degree", f.degree()}, {"coefficients", std::move(coeffs)}};
}

// Univalence gate shared by the map-based commands.
UnivalenceStatus check_univalence(const ConformalMap& f, const RunConfig& config, Json& warnings) {
    const auto status = univalence_check(f);
    if (status == UnivalenceStatus::rejected) {
        if (config.strict) throw UnivalenceRejected("map is not univalent: F' vanishes in the closed disc");
        warnings.push_back("map rejected by the univalence check; bounds do not apply");
    } else if (status == UnivalenceStatus::derivative_nonvanishing_only) {
        warnings.push_back("univalence not certified: boundary curve self-intersects");
    }
    return status;
}

Json constant_json(const ConstantCheck& c) {
    return Json{{"value", c.value},
                {"weak_constant", c.weak_constant},
                {"sharp_constant", c.sharp_constant},
                {"weak_constant_holds", c.weak_constant_holds},
                {"sharp_constant_holds", c.sharp_constant_holds}};
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json inequality_json(const InequalityCheck& c) {
    return Json{{"name", c.name}, {"lhs", c.lhs},       {"rhs", c.rhs},  {"tolerance", c.tolerance},
                {"margin", c.margin}, {"holds", c.holds}, {"note", c.note}};
}

Json envelope(const std::string& report, const RunConfig& config, Json result) {
    return Json{{"tool", "toeplab"},
                {"version", kVersion},
                {"report", report},
                {"config", to_json(config)},
                {"result", std::move(result)}};
}

Json commutator_report(const RunConfig& config) {
    const ConformalMap f = resolve_map(config);
    Json warnings = Json::array();
    const auto status = check_univalence(f, config, warnings);

    const HermitianMatrix m = smirnov_commutator_matrix(f);
    Json matrix = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(complex_json(m(i, j)));
        matrix.push_back(std::move(row));
    }
    const auto bounds = smirnov_bounds_report(f);
    Json checks = Json::array();
    for (const auto& c : bounds.checks) checks.push_back(inequality_json(c));

    Json r;
    r["map"] = map_json(f);
    r["univalence_status"] = std::string(to_string(status));
    r["matrix"] = std::move(matrix);
    r["norm"] = *bounds.computed_norm;
    r["area"] = *bounds.area;
    r["perimeter"] = *bounds.perimeter;
    r["putnam"] = *bounds.putnam;
    r["khavinson"] = *bounds.khavinson;
    r["sandwich_ok"] = bounds.all_hold();
    r["checks"] = std::move(checks);
    r["warnings"] = std::move(warnings);
    return envelope("commutator", config, std::move(r));
}

Json bergman_report(const RunConfig& config) {
    const ConformalMap f = resolve_map(config);
    Json warnings = Json::array();
    const auto status = check_univalence(f, config, warnings);

    BergmanNormOptions options;
    options.tol = config.tol;
    options.max_dim = config.max_dim;
    const auto result = bergman_commutator_norm(f, options);

    const double area = area_of_image(f);
    const double putnam = putnam_bound(area);
    const double conjectured = area / (2 * M_PI);

    Json r;
    r["map"] = map_json(f);
    r["univalence_status"] = std::string(to_string(status));
    r["norm"] = result.norm;
    r["truncation_dim_used"] = result.truncation_dim;
    r["history"] = result.history;
    r["area"] = area;
    r["putnam"] = putnam;
    r["conjectured_half_putnam"] = conjectured;
    r["margin_vs_conjecture"] = conjectured - result.norm;
    r["conjecture_holds"] = result.norm <= conjectured + config.tol;
    if (status != UnivalenceStatus::rejected && result.norm > putnam + config.tol) {
        throw InternalConsistencyError("Putnam's inequality violated: norm " + std::to_string(result.norm) +
                                       " > " + std::to_string(putnam));
    }
    if (!r["conjecture_holds"].get<bool>()) warnings.push_back("norm exceeds the conjectured bound Area/(2 pi)");

    if (config.with_spectral) {
        const DomainSpec spec = DomainSpec::mapped_disc(f);
        const auto q = compute_spectral_quantities(spec, config.h);
        const auto chain = bergman_chain_report("bergman", result.norm, area, q);
        Json checks = Json::array();
        for (const auto& c : chain.checks) checks.push_back(inequality_json(c));
        r["h"] = config.h;
        r["lambda"] = q.lambda;
        r["rho"] = q.rho;
        r["inradius"] = q.inradius;
        r["lambda_lower"] = *chain.lambda_lower;
        r["torsion_lower"] = *chain.torsion_lower;
        r["inradius_lower"] = *chain.inradius_lower;
        r["chain_ok"] = chain.all_hold();
        r["checks"] = std::move(checks);
    } else {
        r["lambda_lower"] = nullptr;
        r["torsion_lower"] = nullptr;
    }
    r["warnings"] = std::move(warnings);
    return envelope("bergman", config, std::move(r));
}

Json spectral_report(const RunConfig& config) {
    Json warnings = Json::array();
    if (!config.domain) check_univalence(resolve_map(config), config, warnings);
    const DomainSpec spec = resolve_domain(config);
    const auto q = compute_spectral_quantities(spec, config.h);
    const double area = spec.area();

    Json r;
    r["domain"] = spec.describe();
    r["h"] = config.h;
    r["nodes"] = q.nodes;
    r["area"] = area;
    r["grid_area"] = q.grid_area;
    r["lambda"] = q.lambda;
    r["rho"] = q.rho;
    r["variational_rho"] = q.variational_rho;
    r["inradius"] = q.inradius;
    r["lambda_exact"] = optional_number(exact_dirichlet_eigenvalue(spec));
    r["rho_exact"] = optional_number(exact_torsional_rigidity(spec));
    r["payne_rayner"] = Json{{"lhs", q.payne_rayner.lhs}, {"rhs", q.payne_rayner.rhs}, {"holds", q.payne_rayner.holds}};
    r["faber_krahn"] = constant_json(faber_krahn_check(q.lambda, area));
    r["saint_venant"] = constant_json(saint_venant_check(q.rho, area));
    r["lambda_lower"] = lambda_lower_bound(q.lambda, area);
    r["torsion_lower"] = torsion_lower_bound(q.rho, area);
    r["inradius_lower"] = inradius_lower_bound(q.inradius);
    r["warnings"] = std::move(warnings);
    return envelope("spectral", config, std::move(r));
}

Json polydisc_report(const RunConfig& config) {
    const PolydiscSymbol symbol{*config.coeffs};
    const auto b = polydisc_bounds(symbol);
    const auto v = verify_moment_integrals(symbol.n(), config.mc_samples, config.seed);

    Json a = Json::array();
    for (const auto& z : symbol.a) a.push_back(complex_json(z));
    Json r;
    r["n"] = symbol.n();
    r["a"] = std::move(a);
    r["s_a"] = b.s_a;
    r["lower"] = b.lower;
    r["upper"] = b.upper;
    r["putnam"] = b.putnam;
    r["moment_verification"] = Json{
        {"samples", v.samples},
        {"seed", config.seed},
        {"numerator_moment", v.numerator_moment},
        {"numerator_closed_form", v.numerator_closed_form},
        {"denominator_moment", v.denominator_moment},
        {"denominator_closed_form", v.denominator_closed_form},
        {"relative_errors", Json{{"numerator", v.numerator_relative_error}, {"denominator", v.denominator_relative_error}}},
    };
    return envelope("polydisc", config, std::move(r));
}

Json sweep_report(const RunConfig& config, const std::vector<SweepRow>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        out.push_back(Json{{"eps", row.eps},
                           {"khavinson_lower", row.khavinson},
                           {"commutator_norm", row.norm},
                           {"putnam_upper", row.putnam},
                           {"area", row.area},
                           {"perimeter", row.perimeter}});
    }
    return envelope("sweep", config, Json{{"rows", std::move(out)}});
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "eps,khavinson_lower,commutator_norm,putnam_upper,area,perimeter\n";
    char line[256];
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.eps, r.khavinson, r.norm,
                      r.putnam, r.area, r.perimeter);
        out += line;
    }
    return out;
}

std::string sweep_svg(const std::vector<SweepRow>& rows) {
    constexpr double width = 720, height = 480;
    constexpr double left = 70, right = 30, top = 30, bottom = 60;
    const double plot_w = width - left - right, plot_h = height - top - bottom;

    double xmin = rows.front().eps, xmax = rows.back().eps;
    double ymin = rows.front().khavinson, ymax = rows.front().putnam;
    for (const auto& r : rows) {
        ymin = std::min({ymin, r.khavinson, r.norm});
        ymax = std::max({ymax, r.putnam, r.norm});
    }
    if (xmax <= xmin) xmax = xmin + 1;
    const double pad = 0.05 * std::max(ymax - ymin, 1e-12);
    ymin -= pad;
    ymax += pad;

    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double y) { return top + (ymax - y) / (ymax - ymin) * plot_h; };

    std::string s;
    char buf[512];
    auto emit = [&](const char* fmt, auto... args) {
        std::snprintf(buf, sizeof buf, fmt, args...);
        s += buf;
    };

    emit("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
         width, height, width, height);
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<g stroke=\"black\" stroke-width=\"1\">\n";
    emit("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n", left, top + plot_h, left + plot_w, top + plot_h);
    emit("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n", left, top, left, top + plot_h);
    for (int k = 0; k <= 5; ++k) {
        const double x = xmin + (xmax - xmin) * k / 5, y = ymin + (ymax - ymin) * k / 5;
        emit("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n", sx(x), top + plot_h, sx(x), top + plot_h + 5);
        emit("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n", left - 5, sy(y), left, sy(y));
    }
    s += "</g>\n<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (int k = 0; k <= 5; ++k) {
        const double x = xmin + (xmax - xmin) * k / 5, y = ymin + (ymax - ymin) * k / 5;
        emit("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">%.3g</text>\n", sx(x), top + plot_h + 20, x);
        emit("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\">%.4g</text>\n", left - 8, sy(y) + 4, y);
    }
    emit("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">eps</text>\n", left + plot_w / 2, height - 15);
    emit("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" transform=\"rotate(-90 %.2f %.2f)\">norm</text>\n", 18.0,
         top + plot_h / 2, 18.0, top + plot_h / 2);
    s += "</g>\n";

    struct Curve {
        const char* label;
        const char* color;
        const char* dash;
        double SweepRow::*field;
    };
    const Curve curves[] = {
        {"Khavinson lower bound", "#1f77b4", "6 4", &SweepRow::khavinson},
        {"commutator norm", "#000000", "none", &SweepRow::norm},
        {"Putnam upper bound", "#d62728", "2 3", &SweepRow::putnam},
    };
    for (const auto& c : curves) {
        emit("<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"1.5\" stroke-dasharray=\"%s\" points=\"", c.color,
             c.dash);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            emit("%s%.2f,%.2f", i ? " " : "", sx(rows[i].eps), sy(rows[i].*c.field));
        }
        s += "\"/>\n";
    }

    s += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (int k = 0; k < 3; ++k) {
        const double y = top + 15 + 18 * k;
        emit("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" stroke-width=\"1.5\" "
             "stroke-dasharray=\"%s\"/>\n",
             left + 15, y, left + 45, y, curves[k].color, curves[k].dash);
        emit("<text x=\"%.2f\" y=\"%.2f\">%s</text>\n", left + 52, y + 4, curves[k].label);
    }
    s += "</g>\n</svg>\n";
    return s;
}

std::string dump(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace toeplab::cli
