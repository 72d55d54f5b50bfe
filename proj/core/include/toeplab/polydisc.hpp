#pragma once

#include <cstdint>
#include <vector>

#include "toeplab/laurent.hpp"

namespace toeplab {

/// Linear symbol phi(z) = sum_j a_j z_j on the polydisc D^n.
struct PolydiscSymbol {
    std::vector<Complex> a;

    int n() const noexcept { return static_cast<int>(a.size()); }
};

struct PolydiscBounds {
    double s_a = 0.0;     // sum |a_j|^2
    double lower = 0.0;   // 3^{n-1} / 2^{2n-1} * s_a
    double upper = 0.0;   // n * s_a
    double putnam = 0.0;  // (sum |a_j|)^2
};

/// Throws InvalidInput for an empty symbol and InternalConsistencyError if
/// lower <= putnam <= upper fails.
PolydiscBounds polydisc_bounds(const PolydiscSymbol& symbol);

struct MomentVerification {
    int n = 0;
    std::uint64_t samples = 0;
    double numerator_moment = 0.0;    // estimate of int prod(1-|z_j|^2) dV
    double denominator_moment = 0.0;  // estimate of int |z_1|^2 prod_{k>1}(1-|z_k|^2)^2 dV
    double numerator_closed_form = 0.0;    // (pi/2)^n
    double denominator_closed_form = 0.0;  // pi^n / (2 * 3^{n-1})
    double numerator_relative_error = 0.0;
    double denominator_relative_error = 0.0;
};

/// Monte Carlo over D^n with per-factor rejection sampling from a seeded
/// mt19937_64. Requires n >= 1 and samples >= 1e5.
MomentVerification verify_moment_integrals(int n, std::uint64_t samples, std::uint64_t seed);

}  // namespace toeplab
