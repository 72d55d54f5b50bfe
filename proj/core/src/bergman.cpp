#include "toeplab/bergman.hpp"

#include <algorithm>
#include <cmath>

#include "toeplab/errors.hpp"

namespace toeplab {

TruncatedOperator::TruncatedOperator(std::size_t dim, int bandwidth)
    : n_(dim), bandwidth_(bandwidth), data_(dim * static_cast<std::size_t>(bandwidth)) {}

Complex TruncatedOperator::operator()(std::size_t row, std::size_t col) const {
    if (row >= n_ || col >= n_ || row <= col) return {};
    const std::size_t offset = row - col;
    if (offset > static_cast<std::size_t>(bandwidth_)) return {};
    return data_[col * static_cast<std::size_t>(bandwidth_) + offset - 1];
}

TruncatedOperator bergman_multiplier_matrix(const ConformalMap& f, std::size_t n) {
    const int m = f.degree();
    if (n < static_cast<std::size_t>(m) + 1) {
        throw InvalidInput("bergman_multiplier_matrix: dimension must exceed the map degree");
    }
    TruncatedOperator t(n, m);
    for (std::size_t j = 0; j < n; ++j) {
        for (int d = 1; d <= m; ++d) {
            const std::size_t k = j + static_cast<std::size_t>(d);
            if (k >= n) break;
            t.band(j, d) = f.coefficient(d) * std::sqrt(static_cast<double>(j + 1) / static_cast<double>(k + 1));
        }
    }
    return t;
}

namespace {

// Hermitian band of the exact commutator block: entry (a, b) for |a - b| < m
// lives at data[a * width + (b - a + m - 1)].
struct CommutatorBand {
    std::size_t dim = 0;
    int m = 0;
    std::vector<Complex> data;

    std::size_t width() const { return static_cast<std::size_t>(2 * m - 1); }

    Complex at(std::size_t a, std::size_t b) const {
        const long off = static_cast<long>(b) - static_cast<long>(a);
        if (off <= -m || off >= m) return {};
        return data[a * width() + static_cast<std::size_t>(off + m - 1)];
    }

    void apply(std::span<const Complex> x, std::span<Complex> y) const {
        for (std::size_t a = 0; a < dim; ++a) {
            Complex s{};
            const std::size_t lo = a >= static_cast<std::size_t>(m - 1) ? a - static_cast<std::size_t>(m - 1) : 0;
            const std::size_t hi = std::min(dim - 1, a + static_cast<std::size_t>(m - 1));
            for (std::size_t b = lo; b <= hi; ++b) s += at(a, b) * x[b];
            y[a] = s;
        }
    }
};

CommutatorBand commutator_band(const ConformalMap& f, std::size_t n) {
    const TruncatedOperator t = bergman_multiplier_matrix(f, n);
    const int m = f.degree();
    const std::size_t um = static_cast<std::size_t>(m);

    CommutatorBand band;
    band.dim = n - um;
    band.m = m;
    band.data.assign(band.dim * band.width(), Complex{});

    for (std::size_t a = 0; a < band.dim; ++a) {
        const std::size_t b_hi = std::min(band.dim - 1, a + um - 1);
        for (std::size_t b = a; b <= b_hi; ++b) {
            Complex s{};
            // (T^*T)_{ab}: rows k reachable from both columns.
            for (std::size_t k = b + 1; k <= a + um; ++k) s += std::conj(t(k, a)) * t(k, b);
            // (TT^*)_{ab}: columns j below both rows.
            const std::size_t j_lo = b >= um ? b - um : 0;
            for (std::size_t j = j_lo; j < a; ++j) s -= t(a, j) * std::conj(t(b, j));
            const long off = static_cast<long>(b) - static_cast<long>(a);
            band.data[a * band.width() + static_cast<std::size_t>(off + m - 1)] = s;
            band.data[b * band.width() + static_cast<std::size_t>(-off + m - 1)] = std::conj(s);
        }
    }
    return band;
}

double band_norm(const CommutatorBand& band, std::size_t dense_limit) {
    if (band.dim <= dense_limit) {
        HermitianMatrix h(band.dim);
        for (std::size_t a = 0; a < band.dim; ++a)
            for (std::size_t b = 0; b < band.dim; ++b) h(a, b) = band.at(a, b);
        const auto eig = hermitian_eigen(h);
        return std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
    }
    return psd_largest_eigenvalue(
        band.dim, [&](std::span<const Complex> x, std::span<Complex> y) { band.apply(x, y); }, 1e-14);
}

}  // namespace

HermitianMatrix bergman_commutator_block(const ConformalMap& f, std::size_t n) {
    const CommutatorBand band = commutator_band(f, n);
    HermitianMatrix h(band.dim);
    for (std::size_t a = 0; a < band.dim; ++a)
        for (std::size_t b = 0; b < band.dim; ++b) h(a, b) = band.at(a, b);
    return h;
}

BergmanNormResult bergman_commutator_norm(const ConformalMap& f, const BergmanNormOptions& options) {
    if (!(options.tol > 0.0)) throw InvalidInput("bergman_commutator_norm: tol must be positive");
    if (options.max_dim < 64) throw InvalidInput("bergman_commutator_norm: max_dim must be at least 64");

    BergmanNormResult result;
    std::size_t n = std::max(options.initial_dim, static_cast<std::size_t>(2 * f.degree() + 2));
    double previous = band_norm(commutator_band(f, n), options.dense_limit);
    result.history.push_back(previous);

    while (true) {
        const std::size_t next_n = 2 * n;
        if (next_n > options.max_dim) {
            const double before = result.history.size() > 1 ? result.history[result.history.size() - 2] : previous;
            throw ConvergenceError("bergman_commutator_norm: no convergence up to dimension " +
                                       std::to_string(n),
                                   before, previous, static_cast<int>(n));
        }
        n = next_n;
        const double current = band_norm(commutator_band(f, n), options.dense_limit);
        result.history.push_back(current);
        if (std::abs(current - previous) < options.tol) {
            result.norm = current;
            result.truncation_dim = n;
            return result;
        }
        previous = current;
    }
}

ConjectureReport conjecture_report(const ConformalMap& f, double tol) {
    if (univalence_check(f) != UnivalenceStatus::univalent_certified) {
        throw InvalidInput("conjecture_report: map is not certified univalent");
    }
    BergmanNormOptions options;
    options.tol = tol;
    const auto norm = bergman_commutator_norm(f, options);

    ConjectureReport r;
    r.norm = norm.norm;
    r.truncation_dim = norm.truncation_dim;
    r.area = area_of_image(f);
    r.putnam = r.area / M_PI;
    r.conjectured = r.area / (2.0 * M_PI);
    r.margin = r.conjectured - r.norm;
    r.conjecture_holds = r.margin >= -tol;
    if (r.norm > r.putnam + tol) {
        throw InternalConsistencyError("conjecture_report: Putnam's inequality violated (norm " +
                                       std::to_string(r.norm) + " > " + std::to_string(r.putnam) + ")");
    }
    return r;
}

}  // namespace toeplab
