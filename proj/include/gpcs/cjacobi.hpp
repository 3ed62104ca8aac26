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

#ifndef GPCS_CJACOBI_HPP
#define GPCS_CJACOBI_HPP

#include "gpcs/common.hpp"
#include "gpcs/quadrature.hpp"

namespace gpcs::cjacobi {

/// Point e^{i theta} on the unit circle; theta stored reduced to [0, 2pi).
struct CirclePoint {
    double theta;

    explicit CirclePoint(double t) {
        theta = std::fmod(t, 2.0 * M_PI);
        if (theta < 0.0) theta += 2.0 * M_PI;
    }
};

/// Circle polynomial g_n(e^{i theta}) = (gamma+1)_n/n! 2F1(-n, gamma/2+1, gamma+1; 1-e^{i theta}).
///
/// Evaluated through the equivalent monomial expansion
///   g_n(z) = sum_j (gamma/2)_{n-j}/(n-j)! (gamma/2+1)_j/j! z^j
/// (same terminating sum, rearranged in powers of z; generating-function
/// identity (1-t)^{-gamma/2}(1-zt)^{-gamma/2-1} = sum g_n t^n). All
/// coefficients are nonnegative for gamma >= 0, so the value on |z| = 1 is
/// free of the catastrophic cancellation the (1 - z)-power form develops for
/// n beyond ~35 near theta = pi.
complex circular_jacobi(int n, double gamma, CirclePoint p);

/// The expansion coefficients of g_n in powers of z, length n+1.
std::vector<double> circular_jacobi_coefficients(int n, double gamma);

/// Circle weight density  2^gamma Gamma^2(gamma/2+1)/Gamma(gamma+1)
/// (sin theta/2)^gamma / (2 pi), against d theta.
double weight_density(double gamma, CirclePoint p);

/// Gamma(n+gamma+1)/(n! Gamma(gamma+1)): the expected Gram diagonal.
double gram_diagonal_reference(int n, double gamma);

struct GramResult {
    CMatrix matrix;  // entry (n, m) = integral of conj(g_n) g_m against the weight density
    std::vector<std::string> warnings;
};

/// Weighted Gram matrix of g_0..g_{n_max} under the supplied circle rule.
/// The rule must resolve degree-2 n_max trigonometric polynomials times the
/// weight; use circle_rule_clustered for fractional gamma.
GramResult gram_matrix(int n_max, double gamma, const quadrature::QuadratureRule& rule);

}  // namespace gpcs::cjacobi

#endif  // GPCS_CJACOBI_HPP
