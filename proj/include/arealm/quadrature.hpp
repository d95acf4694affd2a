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

#ifndef AREALM_QUADRATURE_HPP
#define AREALM_QUADRATURE_HPP

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "arealm/errors.hpp"

namespace arealm {

/// Node counts for the oracle quadratures: trapezoid points on each circle
/// and Gauss-Legendre points on the radial interval [0,1].
struct QuadratureConfig {
    int angular_nodes = 512;
    int radial_nodes = 64;
    enum class Mode { exact_form, oracle };
    Mode mode = Mode::oracle;

    void validate() const {
        if (angular_nodes < 64) throw DomainError("angular_nodes must be >= 64");
        if (radial_nodes < 16) throw DomainError("radial_nodes must be >= 16");
    }
};

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
/// Legendre recurrence.
inline void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
}

/// Gauss-Legendre rule mapped to [0, 1].
inline void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    gauss_legendre(n, nodes, weights);
    for (double& x : nodes) x = 0.5 * (x + 1.0);
    for (double& w : weights) w *= 0.5;
}

}  // namespace arealm

#endif  // AREALM_QUADRATURE_HPP
