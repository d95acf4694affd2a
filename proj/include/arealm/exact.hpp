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

#ifndef AREALM_EXACT_HPP
#define AREALM_EXACT_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "arealm/poly.hpp"

namespace arealm {

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    k = std::min(k, n - k);
    BigInt acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;  // exact at every step
    }
    return acc;
}

/// log|x| for arbitrary-precision integers, usable far past double range.
inline double log_abs(const BigInt& x) {
    if (x == 0) throw DomainError("log_abs of zero");
    BigInt a = x < 0 ? BigInt(-x) : x;
    const std::size_t bits = boost::multiprecision::msb(a) + 1;
    if (bits <= 1000) return std::log(a.convert_to<double>());
    const std::size_t shift = bits - 500;
    BigInt top = a >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

/// Fraction-free (Bareiss) determinant over exact integers.
inline BigInt fraction_free_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return BigInt(1);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return BigInt(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Resultant Res(p, q) as the Sylvester determinant, exact over the integers.
inline BigInt resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw DomainError("resultant of zero polynomial");
    const int m = p.degree();
    const int n = q.degree();
    if (m == 0 && n == 0) return BigInt(1);
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<BigInt>> syl(size, std::vector<BigInt>(size, BigInt(0)));
    // n rows of p's coefficients (descending), then m rows of q's.
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j)
            syl[row][row + j] = p.coeffs()[static_cast<std::size_t>(m - j)];
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            syl[n + row][row + j] = q.coeffs()[static_cast<std::size_t>(n - j)];
    return fraction_free_determinant(std::move(syl));
}

/// Exact discriminant a_n^{2n-2} prod_{j<k} (z_j - z_k)^2, computed as
/// (-1)^{n(n-1)/2} Res(p, p') / a_n. Zero iff p has a multiple root.
inline BigInt discriminant(const IntPoly& p) {
    const int n = p.degree();
    if (n < 2) throw DomainError("discriminant requires degree >= 2");
    BigInt res = resultant(p, derivative(p));
    BigInt quotient = res / p.leading();
    // Res(p, p') is always divisible by the leading coefficient.
    if (quotient * p.leading() != res) throw std::logic_error("discriminant: inexact division");
    const bool flip = ((static_cast<long long>(n) * (n - 1)) / 2) % 2 != 0;
    return flip ? BigInt(-quotient) : quotient;
}

/// Remainder arithmetic modulo a monic integer polynomial.
/// step_multiply_z maintains r <- (r * z) mod p in O(deg p) exact operations.
class MonicModulus {
  public:
    explicit MonicModulus(const IntPoly& p) : mod_(p) {
        if (!p.is_monic()) throw DomainError("modulus must be monic");
        if (p.degree() < 1) throw DomainError("modulus must have degree >= 1");
    }

    std::vector<BigInt> one() const {
        std::vector<BigInt> r(static_cast<std::size_t>(mod_.degree()), BigInt(0));
        r[0] = 1;
        return r;
    }

    void step_multiply_z(std::vector<BigInt>& r) const {
        const std::size_t d = r.size();
        BigInt top = r[d - 1];
        for (std::size_t k = d - 1; k > 0; --k) r[k] = r[k - 1];
        r[0] = 0;
        if (top != 0)
            for (std::size_t k = 0; k < d; ++k) r[k] -= top * mod_.coeffs()[k];
    }

    static bool is_one(const std::vector<BigInt>& r) {
        if (r.empty() || r[0] != 1) return false;
        for (std::size_t k = 1; k < r.size(); ++k)
            if (r[k] != 0) return false;
        return true;
    }

  private:
    IntPoly mod_;
};

/// Quotient of an exact division, or nullopt if the division has a remainder.
/// The divisor must be monic so the computation stays in the integers.
inline bool divide_exactly(const IntPoly& dividend, const IntPoly& divisor, IntPoly* quotient) {
    if (!divisor.is_monic()) throw DomainError("divide_exactly: divisor must be monic");
    std::vector<BigInt> rem = dividend.coeffs();
    const int dd = dividend.degree();
    const int dv = divisor.degree();
    if (dd < dv) return false;
    std::vector<BigInt> quot(static_cast<std::size_t>(dd - dv) + 1, BigInt(0));
    for (int k = dd - dv; k >= 0; --k) {
        BigInt c = rem[static_cast<std::size_t>(k + dv)];
        quot[static_cast<std::size_t>(k)] = c;
        if (c != 0)
            for (int j = 0; j <= dv; ++j)
                rem[static_cast<std::size_t>(k + j)] -= c * divisor.coeffs()[static_cast<std::size_t>(j)];
    }
    for (const BigInt& c : rem)
        if (c != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(quot));
    return true;
}

}  // namespace arealm

#endif  // AREALM_EXACT_HPP
