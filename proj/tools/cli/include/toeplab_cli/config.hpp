#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "toeplab/hardy.hpp"
#include "toeplab/spectral.hpp"

namespace toeplab::cli {

/// Resolved command-line configuration; every field carries its default.
struct RunConfig {
    std::string subcommand;

    std::optional<double> eps;
    std::optional<std::vector<std::complex<double>>> coeffs;

    double eps_min = 0.0;
    double eps_max = 0.9;
    int steps = 50;

    std::optional<std::string> domain;
    double h = 0.01;

    double tol = 1e-8;
    std::size_t max_dim = 8192;

    std::uint64_t mc_samples = 1000000;
    std::uint64_t seed = 1;

    std::optional<std::string> csv;
    std::optional<std::string> svg;
    std::optional<std::string> json;

    bool with_spectral = false;
    bool strict = false;
};

/// Checks ranges and mutual exclusions for the chosen subcommand. Throws
/// toeplab::InvalidInput with a message naming the offending flag.
void validate(const RunConfig& config);

/// The conformal map given by --eps or --coeffs.
ConformalMap resolve_map(const RunConfig& config);

/// The domain given by --domain, or the mapped disc of --eps / --coeffs.
DomainSpec resolve_domain(const RunConfig& config);

nlohmann::ordered_json to_json(const RunConfig& config);

}  // namespace toeplab::cli
