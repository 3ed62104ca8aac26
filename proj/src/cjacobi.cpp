// Copyright 2026 The gpcs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gpcs/cjacobi.hpp"

#include <cmath>

#include "gpcs/parallel.hpp"
#include "gpcs/specfun.hpp"

namespace gpcs::cjacobi {

std::vector<double> circular_jacobi_coefficients(int n, double gamma) {
    require(n >= 0, "circular_jacobi: requires n >= 0");
    require(gamma >= 0.0, "circular_jacobi: requires gamma >= 0");
    std::vector<double> c(n + 1, 0.0);
    if (gamma == 0.0) {
        c[n] = 1.0;  // g_n = z^n
        return c;
    }
    const double h = 0.5 * gamma;
    // c_j = (h)_{n-j}/(n-j)! (h+1)_j/j!, built up from c_0 = (h)_n/n!
    double cj = 1.0;
    for (int k = 0; k < n; ++k) cj *= (h + k) / (k + 1.0);
    c[0] = cj;
    for (int j = 0; j + 1 <= n; ++j) {
        cj *= (h + 1.0 + j) / (j + 1.0) * (n - j) / (h + n - j - 1.0);
        c[j + 1] = cj;
    }
    return c;
}

complex circular_jacobi(int n, double gamma, CirclePoint p) {
    require(n >= 0, "circular_jacobi: requires n >= 0");
    require(gamma >= 0.0, "circular_jacobi: requires gamma >= 0");
    const complex z = std::polar(1.0, p.theta);
    if (gamma == 0.0) return std::pow(z, n);
    if (n == 0) return complex(1.0, 0.0);

    const double h = 0.5 * gamma;
    double cj = 1.0;
    for (int k = 0; k < n; ++k) cj *= (h + k) / (k + 1.0);
    KahanSum<complex> acc;
    complex zp(1.0, 0.0);
    acc.add(complex(cj, 0.0));
    for (int j = 0; j + 1 <= n; ++j) {
        cj *= (h + 1.0 + j) / (j + 1.0) * (n - j) / (h + n - j - 1.0);
        zp *= z;
        acc.add(cj * zp);
    }
    return acc.value();
}

double weight_density(double gamma, CirclePoint p) {
    require(gamma >= 0.0, "weight_density: requires gamma >= 0");
    if (gamma == 0.0) return 1.0 / (2.0 * M_PI);
    const double s = std::sin(0.5 * p.theta);
    if (s <= 0.0) return 0.0;
    const double logc = gamma * M_LN2 + 2.0 * specfun::log_gamma(0.5 * gamma + 1.0) - specfun::log_gamma(gamma + 1.0);
    return std::exp(logc + gamma * std::log(s)) / (2.0 * M_PI);
}

double gram_diagonal_reference(int n, double gamma) {
    return std::exp(specfun::log_gamma(n + gamma + 1.0) - specfun::log_gamma(n + 1.0) - specfun::log_gamma(gamma + 1.0));
}

GramResult gram_matrix(int n_max, double gamma, const quadrature::QuadratureRule& rule) {
    require(n_max >= 0, "gram_matrix: requires n_max >= 0");
    require(gamma >= 0.0, "gram_matrix: requires gamma >= 0");
    require(rule.domain == quadrature::Domain::circle, "gram_matrix: requires a circle rule");

    const std::size_t n_nodes = rule.nodes.size();
    const int dim = n_max + 1;

    // evaluate all polynomials and the weight once per node
    std::vector<complex> g(n_nodes * dim);
    std::vector<double> wdens(n_nodes);
    detail::parallel_for(n_nodes, [&](std::size_t i) {
        CirclePoint p(rule.nodes[i]);
        wdens[i] = weight_density(gamma, p) * rule.weights[i];
        for (int n = 0; n <= n_max; ++n) {
            g[i * dim + n] = circular_jacobi(n, gamma, p);
        }
    });

    GramResult out;
    out.matrix = CMatrix(dim, dim);
    detail::parallel_for(static_cast<std::size_t>(dim), [&](std::size_t ni) {
        const int n = static_cast<int>(ni);
        for (int m = 0; m <= n_max; ++m) {
            KahanSum<complex> acc;
            for (std::size_t i = 0; i < n_nodes; ++i) {
                acc.add(wdens[i] * std::conj(g[i * dim + n]) * g[i * dim + m]);
            }
            out.matrix.at(n, m) = acc.value();
        }
    });

    if (gamma > 0.0 && gamma < 1.0) {
        out.warnings.push_back("weight derivative is singular at theta = 0 for gamma < 1; use an endpoint-clustered rule");
    }
    return out;
}

}  // namespace gpcs::cjacobi
