#include "toeplab_cli/config.hpp"

#include <cmath>

#include "toeplab/errors.hpp"

namespace toeplab::cli {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidInput(message);
}

bool has_map(const RunConfig& c) { return c.eps.has_value() || c.coeffs.has_value(); }

nlohmann::ordered_json complex_array(const std::vector<std::complex<double>>& v) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& z : v) out.push_back({z.real(), z.imag()});
    return out;
}

template <class T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

void validate(const RunConfig& c) {
    require(!(c.eps && c.coeffs), "--eps and --coeffs are mutually exclusive");
    if (c.eps) require(std::isfinite(*c.eps) && *c.eps >= 0.0, "--eps must be a nonnegative number");
    require(std::isfinite(c.h) && c.h > 0.0, "--h must be positive");
    require(std::isfinite(c.tol) && c.tol > 0.0, "--tol must be positive");
    require(c.max_dim >= 64, "--max-dim must be at least 64");
    require(c.steps >= 2, "--steps must be at least 2");
    require(std::isfinite(c.eps_min) && std::isfinite(c.eps_max) && c.eps_min >= 0.0 && c.eps_min < c.eps_max &&
                c.eps_max < 1.0,
            "--eps-min/--eps-max must satisfy 0 <= eps-min < eps-max < 1");
    require(c.mc_samples >= 100000, "--mc-samples must be at least 100000");

    const std::string& s = c.subcommand;
    if (s == "commutator" || s == "bergman") {
        require(has_map(c), s + " needs --eps or --coeffs");
        require(!c.domain, "--domain is not used by " + s);
    } else if (s == "spectral") {
        require(has_map(c) != c.domain.has_value(), "spectral needs exactly one of --domain, --eps, --coeffs");
    } else if (s == "polydisc") {
        require(c.coeffs.has_value(), "polydisc needs --coeffs");
        require(!c.eps, "--eps is not used by polydisc");
    } else if (s == "sweep" || s == "verify") {
        require(!has_map(c) && !c.domain, "--eps/--coeffs/--domain are not used by " + s);
    }
    if (c.with_spectral) require(s == "bergman", "--with-spectral applies to bergman only");
}

ConformalMap resolve_map(const RunConfig& c) {
    if (c.eps) return make_example_map(*c.eps);
    if (c.coeffs) return ConformalMap(*c.coeffs);
    throw InvalidInput("no map given (use --eps or --coeffs)");
}

DomainSpec resolve_domain(const RunConfig& c) {
    if (c.domain) return DomainSpec::parse(*c.domain);
    return DomainSpec::mapped_disc(resolve_map(c));
}

nlohmann::ordered_json to_json(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["subcommand"] = c.subcommand;
    j["eps"] = optional_json(c.eps);
    j["coeffs"] = c.coeffs ? complex_array(*c.coeffs) : nlohmann::ordered_json(nullptr);
    j["eps_min"] = c.eps_min;
    j["eps_max"] = c.eps_max;
    j["steps"] = c.steps;
    j["domain"] = optional_json(c.domain);
    j["h"] = c.h;
    j["tol"] = c.tol;
    j["max_dim"] = c.max_dim;
    j["mc_samples"] = c.mc_samples;
    j["seed"] = c.seed;
    j["csv"] = optional_json(c.csv);
    j["svg"] = optional_json(c.svg);
    j["json"] = optional_json(c.json);
    j["with_spectral"] = c.with_spectral;
    j["strict"] = c.strict;
    return j;
}

}  // namespace toeplab::cli
