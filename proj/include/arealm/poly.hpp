/*
   Copyright 2026 The arealm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef AREALM_POLY_HPP
#define AREALM_POLY_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arealm/errors.hpp"

namespace arealm {

using Complex = std::complex<double>;
using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with complex coefficients, stored in
/// ascending degree order. The representation is normalized: a nonzero
/// polynomial always has a nonzero last coefficient, and the zero
/// polynomial is the distinguished empty coefficient vector.
class ComplexPoly {
  public:
    ComplexPoly() = default;

    explicit ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    ComplexPoly(std::initializer_list<Complex> coeffs)
        : ComplexPoly(std::vector<Complex>(coeffs)) {}

    static ComplexPoly zero() { return ComplexPoly(); }

    static ComplexPoly constant(Complex c) { return ComplexPoly(std::vector<Complex>{c}); }

    /// a * z^k
    static ComplexPoly monomial(Complex a, int k) {
        std::vector<Complex> c(static_cast<std::size_t>(k) + 1, Complex(0.0, 0.0));
        c.back() = a;
        return ComplexPoly(std::move(c));
    }

    /// leading * prod_j (z - roots[j]), expanded by repeated convolution.
    static ComplexPoly from_roots(Complex leading, const std::vector<Complex>& roots) {
        std::vector<Complex> c{leading};
        for (const Complex& r : roots) {
            std::vector<Complex> next(c.size() + 1, Complex(0.0, 0.0));
            for (std::size_t k = 0; k < c.size(); ++k) {
                next[k + 1] += c[k];
                next[k] -= r * c[k];
            }
            c = std::move(next);
        }
        return ComplexPoly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the polynomial; the zero polynomial reports -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Coefficient of z^k, zero beyond the stored range.
    Complex coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Complex(0.0, 0.0);
    }

    Complex leading() const {
        return coeffs_.empty() ? Complex(0.0, 0.0) : coeffs_.back();
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    /// Horner evaluation; the zero polynomial evaluates to 0.
    Complex operator()(Complex z) const {
        if (coeffs_.empty()) return Complex(0.0, 0.0);
        Complex acc = coeffs_.back();
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * z + coeffs_[k];
        return acc;
    }

    ComplexPoly operator*(const ComplexPoly& rhs) const {
        if (is_zero() || rhs.is_zero()) return ComplexPoly();
        std::vector<Complex> out(coeffs_.size() + rhs.coeffs_.size() - 1, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
                out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        return ComplexPoly(std::move(out));
    }

    ComplexPoly operator+(const ComplexPoly& rhs) const {
        std::vector<Complex> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Complex(0.0, 0.0));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) + rhs.coeff(k);
        return ComplexPoly(std::move(out));
    }

    ComplexPoly operator-(const ComplexPoly& rhs) const {
        std::vector<Complex> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Complex(0.0, 0.0));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) - rhs.coeff(k);
        return ComplexPoly(std::move(out));
    }

    ComplexPoly scaled(Complex s) const {
        std::vector<Complex> out = coeffs_;
        for (Complex& c : out) c *= s;
        return ComplexPoly(std::move(out));
    }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == Complex(0.0, 0.0)) coeffs_.pop_back();
    }

    std::vector<Complex> coeffs_;
};

inline ComplexPoly multiply(const ComplexPoly& p, const ComplexPoly& q) { return p * q; }

/// Formal derivative, normalized. Constants map to the zero polynomial.
inline ComplexPoly derivative(const ComplexPoly& p) {
    if (p.degree() < 1) return ComplexPoly();
    std::vector<Complex> out(static_cast<std::size_t>(p.degree()));
    for (std::size_t k = 1; k < p.coeffs().size(); ++k)
        out[k - 1] = p.coeffs()[k] * static_cast<double>(k);
    return ComplexPoly(std::move(out));
}

/// Univariate polynomial with exact arbitrary-precision integer
/// coefficients, ascending order, normalized like ComplexPoly.
class IntPoly {
  public:
    IntPoly() = default;

    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    IntPoly(std::initializer_list<long long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long long c : coeffs) coeffs_.emplace_back(c);
        normalize();
    }

    static IntPoly zero() { return IntPoly(); }

    static IntPoly one() { return IntPoly(std::vector<BigInt>{BigInt(1)}); }

    /// z^k
    static IntPoly power(int k) {
        std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, BigInt(0));
        c.back() = 1;
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

    BigInt leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

    BigInt constant_term() const { return coeff(0); }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    IntPoly operator*(const IntPoly& rhs) const {
        if (is_zero() || rhs.is_zero()) return IntPoly();
        std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
                out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        return IntPoly(std::move(out));
    }

    IntPoly operator-(const IntPoly& rhs) const {
        std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) - rhs.coeff(k);
        return IntPoly(std::move(out));
    }

    IntPoly negated() const {
        std::vector<BigInt> out = coeffs_;
        for (BigInt& c : out) c = -c;
        return IntPoly(std::move(out));
    }

    /// Lossless for |a_k| <= 2^50 and degree <= 50; larger coefficients
    /// round to the nearest double.
    ComplexPoly to_complex() const {
        std::vector<Complex> out;
        out.reserve(coeffs_.size());
        for (const BigInt& c : coeffs_) out.emplace_back(c.convert_to<double>(), 0.0);
        return ComplexPoly(std::move(out));
    }

    bool operator==(const IntPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

inline IntPoly derivative(const IntPoly& p) {
    if (p.degree() < 1) return IntPoly();
    std::vector<BigInt> out(static_cast<std::size_t>(p.degree()));
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) out[k - 1] = p.coeffs()[k] * k;
    return IntPoly(std::move(out));
}

// ---------------------------------------------------------------------------
// Text format shared by the CLI: comma-separated coefficients in ascending
// degree order; complex entries written as "re" or "re+imi" (e.g. "-1,0,0,0,4"
// is 4z^4 - 1, "1+2i" is 1+2i). Integer polynomials require bit-exact
// integer tokens.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline double parse_real(const std::string& tok) {
    if (tok.empty()) throw DomainError("empty numeric token");
    const char* begin = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + tok.size()) throw DomainError("bad numeric token '" + tok + "'");
    return v;
}

inline Complex parse_complex_token(const std::string& raw) {
    std::string tok = trim(raw);
    if (tok.empty()) throw DomainError("empty coefficient");
    // Split at the sign separating real and imaginary parts. A leading sign
    // or a sign in an exponent does not split.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < tok.size(); ++i) {
        if ((tok[i] == '+' || tok[i] == '-') && tok[i - 1] != 'e' && tok[i - 1] != 'E')
            split = i;
    }
    auto parse_imag = [](std::string part) {
        if (part.empty() || (part.back() != 'i' && part.back() != 'I'))
            throw DomainError("imaginary part must end in 'i'");
        part.pop_back();
        if (part.empty() || part == "+" || part == "-") part += "1";
        return parse_real(part);
    };
    if (split == std::string::npos) {
        if (tok.back() == 'i' || tok.back() == 'I') return Complex(0.0, parse_imag(tok));
        return Complex(parse_real(tok), 0.0);
    }
    return Complex(parse_real(tok.substr(0, split)), parse_imag(tok.substr(split)));
}

inline std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    if (!text.empty() && text.back() == ',') out.push_back("");
    return out;
}

}  // namespace detail

inline ComplexPoly parse_complex_poly(const std::string& text) {
    if (detail::trim(text).empty()) throw DomainError("empty polynomial");
    std::vector<Complex> coeffs;
    for (const std::string& tok : detail::split_commas(text))
        coeffs.push_back(detail::parse_complex_token(tok));
    return ComplexPoly(std::move(coeffs));
}

inline IntPoly parse_int_poly(const std::string& text) {
    if (detail::trim(text).empty()) throw DomainError("empty polynomial");
    std::vector<BigInt> coeffs;
    for (const std::string& raw : detail::split_commas(text)) {
        std::string tok = detail::trim(raw);
        if (tok.empty()) throw DomainError("empty coefficient");
        std::size_t start = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
        if (start == tok.size()) throw DomainError("bad integer '" + tok + "'");
        for (std::size_t i = start; i < tok.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw DomainError("bad integer '" + tok + "'");
        coeffs.emplace_back(tok);
    }
    return IntPoly(std::move(coeffs));
}

inline std::string to_string(const IntPoly& p) {
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) out += ",";
        out += p.coeffs()[k].str();
    }
    return out;
}

inline std::string coeff_list(const IntPoly& p) {
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) out += " ";
        out += p.coeffs()[k].str();
    }
    return out;
}

}  // namespace arealm

#endif  // AREALM_POLY_HPP
