#include "toeplab_cli/app.hpp"

#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "toeplab/toeplab.hpp"
#include "toeplab_cli/acceptance.hpp"
#include "toeplab_cli/complex_literal.hpp"
#include "toeplab_cli/reports.hpp"

namespace toeplab::cli {

namespace {

class IoError : public Error {
public:
    using Error::Error;
};

struct RawFlags {
    std::string coeffs;
};

void add_flags(CLI::App& cmd, RunConfig& c, RawFlags& raw) {
    cmd.add_option("--eps", c.eps, "example map w + eps w^2 + eps^2 w^3/3");
    cmd.add_option("--coeffs", raw.coeffs, "comma-separated coefficients, e.g. 1,0.3,0.03 or 1+0i,0.5-1i");
    cmd.add_option("--eps-min", c.eps_min, "sweep start")->capture_default_str();
    cmd.add_option("--eps-max", c.eps_max, "sweep end")->capture_default_str();
    cmd.add_option("--steps", c.steps, "sweep grid points")->capture_default_str();
    cmd.add_option("--domain", c.domain, "disc:R | ellipse:A,B | rectangle:W,H | square:S");
    cmd.add_option("--h", c.h, "grid spacing")->capture_default_str();
    cmd.add_option("--tol", c.tol, "Bergman truncation tolerance")->capture_default_str();
    cmd.add_option("--max-dim", c.max_dim, "largest Bergman truncation")->capture_default_str();
    cmd.add_option("--mc-samples", c.mc_samples, "Monte Carlo samples")->capture_default_str();
    cmd.add_option("--seed", c.seed, "Monte Carlo seed")->capture_default_str();
    cmd.add_option("--csv", c.csv, "CSV output path");
    cmd.add_option("--svg", c.svg, "SVG output path");
    cmd.add_option("--json", c.json, "JSON output path (default stdout)");
    cmd.add_flag("--with-spectral", c.with_spectral, "add eigenvalue and torsion bounds");
    cmd.add_flag("--strict", c.strict, "fail when the map is not univalent");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw IoError("failed writing '" + path + "'");
}

void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
    if (path) {
        write_file(*path, text);
    } else {
        out << text;
        if (!out) throw IoError("failed writing to stdout");
    }
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const std::string& s = c.subcommand;
    if (s == "commutator") {
        emit(c.json, dump(commutator_report(c)), out);
    } else if (s == "bergman") {
        emit(c.json, dump(bergman_report(c)), out);
    } else if (s == "spectral") {
        emit(c.json, dump(spectral_report(c)), out);
    } else if (s == "polydisc") {
        emit(c.json, dump(polydisc_report(c)), out);
    } else if (s == "sweep") {
        const auto rows = norm_sweep(c.eps_min, c.eps_max, c.steps);
        if (c.csv || !c.json) emit(c.csv, sweep_csv(rows), out);
        if (c.svg) write_file(*c.svg, sweep_svg(rows));
        if (c.json) write_file(*c.json, dump(sweep_report(c, rows)));
    } else if (s == "verify") {
        const auto results = run_acceptance([&](const CriterionResult& r) { err << format_line(r) << std::endl; });
        const Json body = acceptance_json(results);
        emit(c.json, dump(envelope("verify", c, body)), out);
        return body["all_passed"].get<bool>() ? kExitOk : kExitFailure;
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Self-commutator norms of Toeplitz operators and their geometric bounds", "toeplab"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    RunConfig config;
    RawFlags raw;
    const std::pair<const char*, const char*> commands[] = {
        {"commutator", "Smirnov-space commutator matrix, norm and bounds for one map"},
        {"sweep", "Khavinson / norm / Putnam table over eps (CSV, SVG)"},
        {"bergman", "Bergman-space commutator norm and the half-Putnam conjecture"},
        {"spectral", "Dirichlet eigenvalue, torsional rigidity and inradius of a domain"},
        {"polydisc", "Two-sided bounds for linear symbols on the polydisc"},
        {"verify", "Run the full acceptance suite"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_flags(*cmd, config, raw);
        cmd->callback([&config, n = std::string(name)] { config.subcommand = n; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadFlags;
    }

    try {
        if (!raw.coeffs.empty()) config.coeffs = parse_complex_list(raw.coeffs);
        validate(config);
        return execute(config, out, err);
    } catch (const UnivalenceRejected& e) {
        err << "toeplab: " << e.what() << "\n";
        return kExitUnivalence;
    } catch (const InvalidInput& e) {
        err << "toeplab: " << e.what() << "\n";
        return kExitBadFlags;
    } catch (const IoError& e) {
        err << "toeplab: " << e.what() << "\n";
        return kExitIo;
    } catch (const ConvergenceError& e) {
        Json j{{"error", "convergence"},
               {"message", e.what()},
               {"previous", e.previous()},
               {"last", e.last()},
               {"last_dim", e.last_dim()}};
        err << j.dump() << "\n";
        return kExitConvergence;
    } catch (const SolverError& e) {
        err << Json{{"error", "solver"}, {"message", e.what()}}.dump() << "\n";
        return kExitConvergence;
    } catch (const ResolutionError& e) {
        err << "toeplab: " << e.what() << "\n";
        return kExitResolution;
    } catch (const std::exception& e) {
        err << "toeplab: internal error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace toeplab::cli
