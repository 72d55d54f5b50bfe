#include "toeplab_cli/complex_literal.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "toeplab/errors.hpp"

namespace toeplab::cli {

namespace {

[[noreturn]] void reject(std::string_view text) {
    throw InvalidInput("malformed complex literal '" + std::string(text) + "'");
}

double parse_real(std::string_view part, std::string_view whole) {
    if (part.empty()) reject(whole);
    if (part.front() == '+') part.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || end != part.data() + part.size() || !std::isfinite(value)) reject(whole);
    return value;
}

// Imaginary coefficient written before `i`; a bare sign means +-1.
double parse_imaginary(std::string_view part, std::string_view whole) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    return parse_real(part, whole);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) reject(text);
    if (s.back() != 'i') return {parse_real(s, text), 0.0};

    const std::string_view body = s.substr(0, s.size() - 1);
    // The split is the last sign that is neither leading nor part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return {0.0, parse_imaginary(body, text)};
    return {parse_real(body.substr(0, split), text), parse_imaginary(body.substr(split), text)};
}

std::vector<std::complex<double>> parse_complex_list(std::string_view text) {
    std::vector<std::complex<double>> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_complex(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_complex(std::complex<double> z) {
    char buf[64];
    const double im = z.imag();
    std::snprintf(buf, sizeof buf, "%.17g%s%.17gi", z.real(), std::signbit(im) ? "-" : "+", std::abs(im));
    return buf;
}

}  // namespace toeplab::cli
