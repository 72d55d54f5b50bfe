#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace toeplab::cli {

/// Parses `a`, `bi`, `a+bi`, `a-bi` (also `i`, `-i`, exponents). Throws
/// toeplab::InvalidInput on anything else.
std::complex<double> parse_complex(std::string_view text);

/// Comma-separated list of complex literals.
std::vector<std::complex<double>> parse_complex_list(std::string_view text);

/// Inverse of parse_complex with round-trip precision: `1+0i`, `0.5-2i`.
std::string format_complex(std::complex<double> z);

}  // namespace toeplab::cli
