#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "toeplab/hardy.hpp"
#include "toeplab/laurent.hpp"

namespace gen {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20120401);
    return engine;
}

inline std::complex<double> complex_in(double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng()), u(rng())};
}

inline toeplab::LaurentPoly laurent(int min_deg = -4, int max_deg = 4, double scale = 1.0) {
    std::uniform_int_distribution<int> deg(min_deg, max_deg);
    std::uniform_int_distribution<int> count(1, 6);
    std::map<int, std::complex<double>> c;
    const int terms = count(rng());
    for (int i = 0; i < terms; ++i) c[deg(rng())] += complex_in(scale);
    return toeplab::LaurentPoly(std::move(c));
}

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    return u(rng());
}

// c_1 = 1 and sum_{k>=2} k |c_k| < 1, so Re F' > 0 on the disc and F is univalent.
inline toeplab::ConformalMap close_to_identity_map(int max_degree = 5, double budget = 0.8) {
    std::uniform_int_distribution<int> deg(1, max_degree);
    const int m = deg(rng());
    std::vector<std::complex<double>> c(static_cast<std::size_t>(m));
    c[0] = 1.0;
    double remaining = budget;
    for (int k = 2; k <= m; ++k) {
        const double r = uniform(0.0, remaining) / k;
        c[static_cast<std::size_t>(k - 1)] = std::polar(r, uniform(0.0, 2 * M_PI));
        remaining -= k * r;
    }
    const std::complex<double> rotation = std::polar(uniform(0.5, 2.0), uniform(0.0, 2 * M_PI));
    for (auto& v : c) v *= rotation;
    return toeplab::ConformalMap(std::move(c));
}

}  // namespace gen
