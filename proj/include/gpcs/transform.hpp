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

#ifndef GPCS_TRANSFORM_HPP
#define GPCS_TRANSFORM_HPP

#include <json.hpp>

#include "gpcs/states.hpp"

namespace gpcs::transform {

using states::GridFunction;

/// kappa = (1 - e^{i theta}) tau / ((1-tau)(1 - tau e^{i theta})), 0 < tau < 1.
complex kappa(double tau, double theta);

/// Residual of the algebraic reduction kappa (1-tau)^2 / (tau (1 - kappa(1-tau)))
/// = 1 - e^{i theta}.
double kappa_reduction_residual(double tau, double theta);

/// Residual of (1-tau)^{gamma/2+1} / ((1-tau e^{i theta})(1 - kappa(1-tau)))^{1+gamma/2} = 1.
double kappa_power_residual(double tau, double theta, double gamma);

/// Circle-transform coefficient of the n-th eigenstate at damping epsilon,
///   Q = e^{-n eps/2} ((gamma+1)_n/n!)^{1/2} 2F1(-n, 1+gamma/2, 1+gamma; 1-e^{i theta})
///     = e^{-n eps/2} (n!/(gamma+1)_n)^{1/2} g_n(e^{i theta}).
/// epsilon = 0 gives the limit value directly.
complex q_epsilon_analytic(int n, double gamma, double epsilon, double theta);

/// The same coefficient as the explicit half-line integral (no limit taken),
/// evaluated on the supplied rule. Validates the Laplace-transform route
/// end to end. Requires epsilon >= 0.05.
complex q_epsilon_quadrature(int n, double gamma, double epsilon, double theta, const quadrature::QuadratureRule& rule);

enum class Route { analytic, quadrature_extrapolation };

struct TransformResult {
    int n = -1;  // -1 for a general function
    double gamma = 0.0;
    std::vector<double> theta_grid;
    std::vector<complex> values;
    Route route = Route::analytic;
    std::vector<std::string> warnings;
};

nlohmann::json to_json(const TransformResult& r);

/// Image of the n-th eigenstate: sqrt(n!/(gamma+1)_n) g_n(e^{i theta}).
TransformResult transform_eigenstate(int n, double gamma, const std::vector<double>& theta_grid);

/// Image of a sampled function: the transform integral is evaluated at each
/// epsilon of the (decreasing, geometric) schedule and Richardson-extrapolated
/// to epsilon = 0. Falls back to projection on the first 64 eigenstates when
/// the extrapolation disagrees with itself, flagged in warnings.
TransformResult transform_function(const GridFunction& phi, double gamma, const std::vector<double>& theta_grid, const std::vector<double>& eps_schedule);

}  // namespace gpcs::transform

#endif  // GPCS_TRANSFORM_HPP
