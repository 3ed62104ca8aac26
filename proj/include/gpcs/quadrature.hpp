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

#ifndef GPCS_QUADRATURE_HPP
#define GPCS_QUADRATURE_HPP

#include <functional>
#include <span>

#include "gpcs/common.hpp"

namespace gpcs::quadrature {

enum class Domain { circle, half_line };

struct QuadratureRule {
    Domain domain = Domain::circle;
    std::vector<double> nodes;
    std::vector<double> weights;
    int order_hint = 0;  // circle rules integrate e^{ik theta} exactly for |k| <= order_hint
};

/// Periodic trapezoid on [0, 2pi): equispaced nodes, weight 2pi/n. Spectrally
/// accurate for smooth periodic integrands; exact for e^{ik theta}, |k| < n.
QuadratureRule circle_rule(int n_nodes);

/// Double-exponential rule on [0, 2pi] with nodes clustered at the endpoints.
/// Handles weights with algebraic endpoint behavior such as (sin theta/2)^g,
/// which defeat the equispaced rule for fractional g.
QuadratureRule circle_rule_clustered(int n_nodes);

/// Double-exponential (exp-sinh) rule on [0, inf), x = scale * exp(pi/2 sinh t).
/// Suited to integrands with x^p endpoint behavior and Gaussian decay of
/// width ~ scale; nodes span [~1e-19 * scale, 40 * scale].
QuadratureRule half_line_rule(int n_nodes, double scale);

/// sum w_i f(x_i) with compensated summation. Throws ConvergenceError naming
/// the node if f evaluates to NaN there.
complex integrate(const QuadratureRule& rule, const std::function<complex(double)>& f);

/// Same for sampled values (values[i] at rule.nodes[i]).
complex integrate_samples(const QuadratureRule& rule, std::span<const complex> values);

double integrate_real(const QuadratureRule& rule, const std::function<double(double)>& f);

}  // namespace gpcs::quadrature

#endif  // GPCS_QUADRATURE_HPP
