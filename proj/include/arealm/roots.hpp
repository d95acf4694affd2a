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

#ifndef AREALM_ROOTS_HPP
#define AREALM_ROOTS_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "arealm/errors.hpp"
#include "arealm/poly.hpp"

namespace arealm {

/// Leading coefficient plus the multiset of roots of a polynomial, with the
/// residual |P(z_j)| certifying each computed root. Near-coincident roots
/// are reported raw, never merged: downstream formulas are sums and
/// products over the multiset and do not care about multiplicity grouping.
struct RootSet {
    Complex leading;
    std::vector<Complex> roots;
    std::vector<double> residuals;

    std::size_t size() const { return roots.size(); }
};

namespace detail {

/// Evaluate polynomial and derivative at z, plus the running coefficient
/// magnitude sum used as a backward-error scale.
struct HornerEval {
    Complex value;
    Complex deriv;
    double scale;
};

inline HornerEval horner_full(const std::vector<Complex>& c, Complex z) {
    Complex v = c.back();
    Complex d(0.0, 0.0);
    double s = std::abs(c.back());
    const double az = std::abs(z);
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        d = d * z + v;
        v = v * z + c[k];
        s = s * az + std::abs(c[k]);
    }
    return {v, d, s};
}

/// Initial moduli from the upper convex hull of (k, log|c_k|): each hull
/// edge of horizontal extent L contributes L starting points on the circle
/// whose radius is the edge's slope-derived root-modulus estimate. This is
/// the standard simultaneous-iteration seeding and places guesses at the
/// right scale even when root moduli spread over decades.
inline std::vector<double> initial_moduli(const std::vector<Complex>& c, double radius_cap) {
    const int m = static_cast<int>(c.size()) - 1;
    std::vector<std::pair<int, double>> pts;
    for (int k = 0; k <= m; ++k) {
        double a = std::abs(c[static_cast<std::size_t>(k)]);
        if (a > 0.0) pts.emplace_back(k, std::log(a));
    }
    // Upper convex hull, left to right.
    std::vector<std::pair<int, double>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            const double cross = (static_cast<double>(b.first - a.first)) * (p.second - a.second) -
                                 (static_cast<double>(p.first - a.first)) * (b.second - a.second);
            if (cross >= 0.0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<double> moduli;
    moduli.reserve(static_cast<std::size_t>(m));
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        const int span = hull[e + 1].first - hull[e].first;
        const double slope = (hull[e].second - hull[e + 1].second) / span;
        const double r = std::min(std::exp(slope), radius_cap);
        for (int j = 0; j < span; ++j) moduli.push_back(r);
    }
    while (static_cast<int>(moduli.size()) < m) moduli.push_back(radius_cap);
    return moduli;
}

}  // namespace detail

/// Aberth-Ehrlich simultaneous root iteration. Exact roots at the origin
/// are stripped from the coefficient array before iterating; the remaining
/// roots are refined together (simultaneous iteration handles clustered
/// roots on circles far better than sequential deflation) and finished with
/// one Newton polish step. Residual certificate: every |P(z_j)| must come
/// out below root_tol * max_k |a_k| with root_tol = 1e-12 * (1 + max|a_k|),
/// otherwise NonConvergence is thrown.
inline RootSet find_roots(const ComplexPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("find_roots: degree >= 1 required");
    const double max_abs = p.max_abs_coeff();
    const double root_tol = 1e-12 * (1.0 + max_abs);

    std::vector<Complex> c = p.coeffs();
    std::size_t origin_roots = 0;
    while (origin_roots < c.size() && c[origin_roots] == Complex(0.0, 0.0)) ++origin_roots;
    std::vector<Complex> q(c.begin() + static_cast<std::ptrdiff_t>(origin_roots), c.end());
    const int m = static_cast<int>(q.size()) - 1;

    std::vector<Complex> roots(origin_roots, Complex(0.0, 0.0));
    if (m == 1) {
        roots.push_back(-q[0] / q[1]);
    } else if (m > 1) {
        double cauchy = 0.0;
        for (int k = 0; k < m; ++k)
            cauchy = std::max(cauchy, std::abs(q[static_cast<std::size_t>(k)] / q.back()));
        const double radius_cap = 1.0 + cauchy;

        std::vector<double> moduli = detail::initial_moduli(q, radius_cap);
        std::vector<Complex> z(static_cast<std::size_t>(m));
        const double two_pi = 2.0 * std::numbers::pi;
        for (int j = 0; j < m; ++j) {
            const double theta = two_pi * j / m + std::numbers::pi / (2.0 * m) + 0.25;
            z[static_cast<std::size_t>(j)] =
                moduli[static_cast<std::size_t>(j)] * Complex(std::cos(theta), std::sin(theta));
        }

        const int max_iter = 500;
        const double eps = std::numeric_limits<double>::epsilon();
        bool done = false;
        for (int iter = 0; iter < max_iter && !done; ++iter) {
            double max_step = 0.0;
            for (int i = 0; i < m; ++i) {
                Complex& zi = z[static_cast<std::size_t>(i)];
                const auto ev = detail::horner_full(q, zi);
                if (std::abs(ev.value) <= 4.0 * eps * ev.scale) continue;  // at rounding floor
                Complex ratio;
                if (ev.deriv == Complex(0.0, 0.0)) {
                    // stationary point: nudge off and continue
                    zi += Complex(1e-8, 1e-8) * (1.0 + std::abs(zi));
                    max_step = std::numeric_limits<double>::infinity();
                    continue;
                }
                ratio = ev.value / ev.deriv;
                Complex repulsion(0.0, 0.0);
                for (int j = 0; j < m; ++j)
                    if (j != i) repulsion += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
                const Complex denom = 1.0 - ratio * repulsion;
                const Complex step = (denom == Complex(0.0, 0.0)) ? ratio : ratio / denom;
                zi -= step;
                max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(zi)));
            }
            if (max_step <= 1e-14) done = true;
        }

        // One Newton polish step per root.
        for (Complex& zi : z) {
            const auto ev = detail::horner_full(q, zi);
            if (ev.deriv != Complex(0.0, 0.0) && std::abs(ev.value) > 0.0) {
                const Complex step = ev.value / ev.deriv;
                if (std::abs(step) < 0.1 * (1.0 + std::abs(zi))) zi -= step;
            }
        }
        roots.insert(roots.end(), z.begin(), z.end());
    }

    RootSet rs;
    rs.leading = p.leading();
    rs.roots = std::move(roots);
    rs.residuals.reserve(rs.roots.size());
    for (const Complex& r : rs.roots) rs.residuals.push_back(std::abs(p(r)));
    for (double resid : rs.residuals)
        if (!(resid <= root_tol * max_abs))
            throw NonConvergence("find_roots: residual " + std::to_string(resid) +
                                 " above tolerance " + std::to_string(root_tol * max_abs));
    return rs;
}

}  // namespace arealm

#endif  // AREALM_ROOTS_HPP
