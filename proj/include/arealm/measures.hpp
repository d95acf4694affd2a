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

#ifndef AREALM_MEASURES_HPP
#define AREALM_MEASURES_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "arealm/errors.hpp"
#include "arealm/poly.hpp"
#include "arealm/quadrature.hpp"
#include "arealm/roots.hpp"

namespace arealm {

// ---------------------------------------------------------------------------
// Closed forms. Everything is computed in log scale internally so that
// family scans up to degree ~10^3 cannot overflow, and exponentiated at the
// end.
// ---------------------------------------------------------------------------

/// log M(P) = log|a_n| + sum_{|z_j| > 1} log|z_j|  (Jensen's formula).
inline double log_mahler(const RootSet& r) {
    if (r.leading == Complex(0.0, 0.0)) throw DomainError("measure of zero polynomial");
    double acc = std::log(std::abs(r.leading));
    for (const Complex& z : r.roots) {
        const double a = std::abs(z);
        if (a > 1.0) acc += std::log(a);
    }
    return acc;
}

/// log ||P||_0 = log M(P) + (1/2) sum_{|z_j| < 1} (|z_j|^2 - 1).
/// Root classification is a strict |z_j| < 1 with no tolerance band: the
/// contribution vanishes continuously at the boundary, so misclassifying a
/// root at |z_j| ~ 1 perturbs the value by O(tol) only.
inline double log_areal(const RootSet& r) {
    double acc = log_mahler(r);
    for (const Complex& z : r.roots) {
        const double a = std::abs(z);
        if (a < 1.0) acc += 0.5 * (a * a - 1.0);
    }
    return acc;
}

/// Mahler's measure |a_n| prod_{|z_j|>1} |z_j|.
inline double mahler_measure(const RootSet& r) { return std::exp(log_mahler(r)); }

/// Areal (Bergman A^0) measure from the closed form. Equals mahler_measure
/// exactly when no root lies in the open unit disk; each origin root
/// contributes a factor e^{-1/2}.
inline double areal_measure(const RootSet& r) { return std::exp(log_areal(r)); }

// ---------------------------------------------------------------------------
// Quadrature oracles, independent of any root finding.
// ---------------------------------------------------------------------------

namespace detail {

/// Trapezoid mean of log|p| on the circle of radius rho. The grid starts at
/// angle offset; on hitting an exact zero of p the caller rotates by a half
/// step once and retries.
inline bool circle_log_mean(const ComplexPoly& p, double rho, int n, double offset, double* out) {
    const double two_pi = 2.0 * std::numbers::pi;
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
        const double theta = two_pi * k / n + offset;
        const Complex v = p(rho * Complex(std::cos(theta), std::sin(theta)));
        const double a = std::abs(v);
        if (a == 0.0) return false;
        acc += std::log(a);
    }
    *out = acc / n;
    return true;
}

}  // namespace detail

/// Contour geometric mean exp((1/2pi) int log|p(e^{i theta})| d theta) by
/// the trapezoid rule, which is spectrally accurate for periodic
/// integrands. Hitting an exact root rotates the grid by a half step once;
/// a second hit raises SingularNode.
inline double mahler_oracle(const ComplexPoly& p, const QuadratureConfig& cfg = {}) {
    if (p.is_zero()) throw DomainError("mahler_oracle of zero polynomial");
    cfg.validate();
    const double half_step = std::numbers::pi / cfg.angular_nodes;
    double mean = 0.0;
    if (detail::circle_log_mean(p, 1.0, cfg.angular_nodes, 0.0, &mean)) return std::exp(mean);
    if (detail::circle_log_mean(p, 1.0, cfg.angular_nodes, half_step, &mean)) return std::exp(mean);
    throw SingularNode("mahler_oracle: node hit a root after grid rotation");
}

/// Area geometric mean exp((1/pi) iint_D log|p| dA) by Gauss-Legendre in r
/// (weight 2r) tensored with the angular trapezoid rule.
inline double areal_oracle(const ComplexPoly& p, const QuadratureConfig& cfg = {}) {
    if (p.is_zero()) throw DomainError("areal_oracle of zero polynomial");
    cfg.validate();
    std::vector<double> r, w;
    gauss_legendre_01(cfg.radial_nodes, r, w);
    const double half_step = std::numbers::pi / cfg.angular_nodes;
    for (int attempt = 0; attempt < 2; ++attempt) {
        const double offset = attempt * half_step;
        double acc = 0.0;
        bool ok = true;
        for (std::size_t i = 0; i < r.size() && ok; ++i) {
            double mean = 0.0;
            ok = detail::circle_log_mean(p, r[i], cfg.angular_nodes, offset, &mean);
            acc += 2.0 * r[i] * w[i] * mean;
        }
        if (ok) return std::exp(acc);
    }
    throw SingularNode("areal_oracle: node hit a root after grid rotation");
}

/// Bergman p-norm ((1/pi) iint_D |p|^p dA)^{1/p}, exponent > 0.
inline double bergman_p_norm(const ComplexPoly& p, double exponent,
                             const QuadratureConfig& cfg = {}) {
    if (p.is_zero()) return 0.0;
    if (!(exponent > 0.0)) throw DomainError("bergman_p_norm requires exponent > 0");
    cfg.validate();
    std::vector<double> r, w;
    gauss_legendre_01(cfg.radial_nodes, r, w);
    const double two_pi = 2.0 * std::numbers::pi;
    double acc = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        double mean = 0.0;
        for (int k = 0; k < cfg.angular_nodes; ++k) {
            const double theta = two_pi * k / cfg.angular_nodes;
            const Complex v = p(r[i] * Complex(std::cos(theta), std::sin(theta)));
            mean += std::pow(std::abs(v), exponent);
        }
        acc += 2.0 * r[i] * w[i] * mean / cfg.angular_nodes;
    }
    return std::pow(acc, 1.0 / exponent);
}

/// Hardy p-norm ((1/2pi) int |p(e^{i theta})|^p d theta)^{1/p}, exponent > 0.
inline double hardy_p_norm(const ComplexPoly& p, double exponent,
                           const QuadratureConfig& cfg = {}) {
    if (p.is_zero()) return 0.0;
    if (!(exponent > 0.0)) throw DomainError("hardy_p_norm requires exponent > 0");
    cfg.validate();
    const double two_pi = 2.0 * std::numbers::pi;
    double mean = 0.0;
    for (int k = 0; k < cfg.angular_nodes; ++k) {
        const double theta = two_pi * k / cfg.angular_nodes;
        mean += std::pow(std::abs(p(Complex(std::cos(theta), std::sin(theta)))), exponent);
    }
    return std::pow(mean / cfg.angular_nodes, 1.0 / exponent);
}

/// g(x) = e^{(x^2-1)/2} / x on (0, inf). g(1) = 1 is the strict global
/// minimum; strictly decreasing on (0,1) and increasing on (1,inf). Each
/// root of modulus x inside the disk multiplies ||P||_0 / |a_0| by g(x).
inline double modulus_penalty(double x) {
    if (!(x > 0.0)) throw DomainError("modulus_penalty requires x > 0");
    return std::exp(0.5 * (x * x - 1.0)) / x;
}

/// Both measures of one polynomial, their ratio, and the three bound checks
/// that must hold for any nonzero input:
///   upper_ok:  ||P||_0 <= M(P)
///   a0_ok:     ||P||_0 >= |a_0|
///   lower_ok:  ||P||_0 >= e^{-n/2} M(P)
struct MeasureReport {
    int degree = 0;
    double mahler = 0.0;
    double areal = 0.0;
    double ratio = 0.0;
    struct Bounds {
        bool upper_ok = false;
        bool a0_ok = false;
        bool lower_ok = false;
    } bounds;
};

/// Closed-form measures plus bound checks, all derived from one shared
/// root set so the sandwich e^{-n/2} M <= ||P||_0 <= M is checked exactly
/// as computed.
inline MeasureReport measure_report(const ComplexPoly& p) {
    if (p.is_zero()) throw DomainError("measure_report of zero polynomial");
    RootSet rs;
    if (p.degree() == 0) {
        rs.leading = p.leading();
    } else {
        rs = find_roots(p);
    }
    MeasureReport rep;
    rep.degree = p.degree();
    const double lm = log_mahler(rs);
    const double la = log_areal(rs);
    rep.mahler = std::exp(lm);
    rep.areal = std::exp(la);
    rep.ratio = std::exp(la - lm);
    const double a0 = std::abs(p.coeff(0));
    rep.bounds.upper_ok = rep.mahler - rep.areal >= -1e-9 * std::max(1.0, rep.mahler);
    rep.bounds.a0_ok = rep.areal - a0 >= -1e-9 * std::max(1.0, rep.areal);
    rep.bounds.lower_ok = (la - lm) >= -0.5 * rep.degree - 1e-12;
    return rep;
}

}  // namespace arealm

#endif  // AREALM_MEASURES_HPP
