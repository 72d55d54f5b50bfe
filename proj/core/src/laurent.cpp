#include "toeplab/laurent.hpp"

#include <cmath>
#include <sstream>

#include "toeplab/errors.hpp"

namespace toeplab {

namespace {

Complex integer_power(Complex w, int k) {
    Complex base = k < 0 ? 1.0 / w : w;
    unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
    Complex out = 1.0;
    while (e != 0) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

}  // namespace

LaurentPoly::LaurentPoly(std::map<int, Complex> coefficients) : coeffs_(std::move(coefficients)) {
    normalize();
}

LaurentPoly LaurentPoly::monomial(int degree, Complex coefficient) {
    return LaurentPoly({{degree, coefficient}});
}

Complex LaurentPoly::coefficient(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Complex{} : it->second;
}

int LaurentPoly::min_degree() const noexcept {
    return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int LaurentPoly::max_degree() const noexcept {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

void LaurentPoly::normalize() {
    std::erase_if(coeffs_, [](const auto& kv) { return std::abs(kv.second) < kZeroTolerance; });
}

Complex LaurentPoly::evaluate(Complex w) const {
    if (coeffs_.empty()) return {};
    if (w == Complex{} && min_degree() < 0) {
        throw PoleError("Laurent polynomial with negative powers evaluated at w = 0");
    }
    Complex sum{};
    for (const auto& [k, c] : coeffs_) sum += c * integer_power(w, k);
    return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [k, c] : other.coeffs_) coeffs_[k] += c;
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [k, c] : other.coeffs_) coeffs_[k] -= c;
    normalize();
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<int, Complex> out;
    for (const auto& [i, x] : a.coeffs_) {
        for (const auto& [j, y] : b.coeffs_) out[i + j] += x * y;
    }
    return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(Complex scalar) {
    for (auto& kv : coeffs_) kv.second *= scalar;
    normalize();
    return *this;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
        if (k != 0) os << "w^" << k;
    }
    return os.str();
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly analytic_projection(const LaurentPoly& p) {
    std::map<int, Complex> kept(p.coefficients().lower_bound(0), p.coefficients().end());
    return LaurentPoly(std::move(kept));
}

LaurentPoly circle_conjugate(const LaurentPoly& p) {
    std::map<int, Complex> out;
    for (const auto& [k, c] : p.coefficients()) out[-k] = std::conj(c);
    return LaurentPoly(std::move(out));
}

Complex evaluate(const LaurentPoly& p, Complex w) { return p.evaluate(w); }

Complex circle_inner_product(const LaurentPoly& p, const LaurentPoly& q) {
    return 2.0 * M_PI * (p * circle_conjugate(q)).coefficient(0);
}

}  // namespace toeplab
