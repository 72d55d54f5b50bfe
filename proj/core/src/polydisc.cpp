#include "toeplab/polydisc.hpp"

#include <cmath>
#include <random>

#include "toeplab/errors.hpp"

namespace toeplab {

PolydiscBounds polydisc_bounds(const PolydiscSymbol& symbol) {
    const int n = symbol.n();
    if (n < 1) throw InvalidInput("polydisc_bounds: symbol needs at least one coefficient");

    PolydiscBounds b;
    double l1 = 0.0;
    for (const auto& a : symbol.a) {
        b.s_a += std::norm(a);
        l1 += std::abs(a);
    }
    b.lower = std::pow(3.0, n - 1) / std::pow(2.0, 2 * n - 1) * b.s_a;
    b.upper = n * b.s_a;
    b.putnam = l1 * l1;

    const double tol = 1e-12 * std::max(1.0, b.upper);
    if (b.lower > b.putnam + tol || b.putnam > b.upper + tol) {
        throw InternalConsistencyError("polydisc_bounds: lower <= putnam <= upper failed");
    }
    return b;
}

MomentVerification verify_moment_integrals(int n, std::uint64_t samples, std::uint64_t seed) {
    if (n < 1) throw InvalidInput("verify_moment_integrals: n must be at least 1");
    if (samples < 100000) throw InvalidInput("verify_moment_integrals: need at least 1e5 samples");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    auto sample_r2 = [&] {
        while (true) {
            const double x = unit(rng), y = unit(rng);
            const double r2 = x * x + y * y;
            if (r2 < 1.0) return r2;
        }
    };

    // Kahan-compensated running sums keep 1e6+ sample means stable.
    double num = 0.0, num_c = 0.0, den = 0.0, den_c = 0.0;
    auto accumulate = [](double& sum, double& comp, double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };

    for (std::uint64_t s = 0; s < samples; ++s) {
        double psi = 1.0, weight = 1.0, z1 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double r2 = sample_r2();
            psi *= 1.0 - r2;
            if (j == 0) {
                z1 = r2;
            } else {
                weight *= (1.0 - r2) * (1.0 - r2);
            }
        }
        accumulate(num, num_c, psi);
        accumulate(den, den_c, z1 * weight);
    }

    const double volume = std::pow(M_PI, n);
    MomentVerification v;
    v.n = n;
    v.samples = samples;
    v.numerator_moment = volume * num / static_cast<double>(samples);
    v.denominator_moment = volume * den / static_cast<double>(samples);
    v.numerator_closed_form = std::pow(M_PI / 2.0, n);
    v.denominator_closed_form = volume / (2.0 * std::pow(3.0, n - 1));
    v.numerator_relative_error = std::abs(v.numerator_moment / v.numerator_closed_form - 1.0);
    v.denominator_relative_error = std::abs(v.denominator_moment / v.denominator_closed_form - 1.0);
    return v;
}

}  // namespace toeplab
