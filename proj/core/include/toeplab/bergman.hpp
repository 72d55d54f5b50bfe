#pragma once

#include <cstddef>
#include <vector>

#include "toeplab/hardy.hpp"
#include "toeplab/numerics.hpp"

namespace toeplab {

/// N x N truncation of multiplication by F on A^2(D) in the orthonormal basis
/// e_k = sqrt((k+1)/pi) w^k. Entry (k, j) = c_{k-j} sqrt((j+1)/(k+1)) for
/// 1 <= k-j <= m and zero otherwise, so only the band is stored.
class TruncatedOperator {
public:
    TruncatedOperator(std::size_t dim, int bandwidth);

    std::size_t dim() const noexcept { return n_; }
    int bandwidth() const noexcept { return bandwidth_; }

    /// Entry (row, col); zero outside the band or the truncation.
    Complex operator()(std::size_t row, std::size_t col) const;
    /// Entry (col + offset, col) for offset in 1..bandwidth.
    Complex& band(std::size_t col, int offset) {
        return data_[col * static_cast<std::size_t>(bandwidth_) + static_cast<std::size_t>(offset - 1)];
    }

private:
    std::size_t n_;
    int bandwidth_;
    std::vector<Complex> data_;
};

TruncatedOperator bergman_multiplier_matrix(const ConformalMap& f, std::size_t n);

/// Top-left (N-m) x (N-m) block of T^*T - TT^* built from the N x N
/// truncation. Because T is banded this block equals the corresponding block of
/// the infinite commutator.
HermitianMatrix bergman_commutator_block(const ConformalMap& f, std::size_t n);

struct BergmanNormOptions {
    double tol = 1e-8;
    std::size_t initial_dim = 64;
    std::size_t max_dim = 8192;
    // Compressions larger than this use power iteration instead of Jacobi.
    std::size_t dense_limit = 512;
};

struct BergmanNormResult {
    double norm = 0.0;
    std::size_t truncation_dim = 0;  // N of the last truncation
    std::vector<double> history;     // norm at each doubling
};

/// Norm of [T_F^*, T_F] on A^2(D), doubling the truncation from
/// `initial_dim` until successive compression norms differ by less than `tol`.
/// Throws ConvergenceError carrying the last two iterates past `max_dim`.
BergmanNormResult bergman_commutator_norm(const ConformalMap& f,
                                          const BergmanNormOptions& options = {});

struct ConjectureReport {
    double norm = 0.0;
    double area = 0.0;
    double putnam = 0.0;       // area / pi
    double conjectured = 0.0;  // area / (2 pi)
    double margin = 0.0;       // conjectured - norm
    bool conjecture_holds = true;
    std::size_t truncation_dim = 0;
};

/// Evaluates the commutator norm against Putnam's bound (hard check) and the
/// conjectured half-Putnam bound (recorded only). Requires a certified map.
ConjectureReport conjecture_report(const ConformalMap& f, double tol = 1e-8);

}  // namespace toeplab
