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

#ifndef GPCS_IDENTITY_HPP
#define GPCS_IDENTITY_HPP

#include "gpcs/report.hpp"
#include "gpcs/states.hpp"

namespace gpcs::identity {

using states::GridFunction;

enum class Route { kernel_quadrature, basis_expansion };

struct OperatorApplication {
    double epsilon = 0.0;
    double alpha = 0.0;
    GridFunction input;
    GridFunction output;  // shares the input nodes
    Route route = Route::kernel_quadrature;
    std::vector<std::string> warnings;
};

/// Integral kernel of the damped projector family,
///   G(u, v) = 2 (uv)^{alpha-1/2} e^{-(u^2+v^2)/2} K(e^{-eps}; u^2, v^2),
/// assembled in log space. Symmetric in (u, v); vanishes as u -> 0.
double kernel_G(double epsilon, double alpha, double u, double v);

/// Kernel application O[phi](u) = int_0^inf G(u, v) phi(v) dv on phi's rule.
/// Requires epsilon >= 0.05: the kernel bandwidth shrinks like sqrt(eps/2)
/// and falls under the grid resolution below that.
OperatorApplication apply_O_kernel(double epsilon, double alpha, const GridFunction& phi);

/// Basis route: project phi on the first n_max+1 eigenfunctions, damp the
/// m-th coefficient by e^{-m eps}, resynthesize. Serves as the independent
/// oracle for the kernel route.
OperatorApplication apply_O_basis(double epsilon, double alpha, const GridFunction& phi, int n_max);

/// Grid-L2 errors ||O_eps[phi] - phi|| along a decreasing epsilon schedule,
/// one report per epsilon plus a summary entry with monotonicity and the
/// fitted decay exponent of error vs epsilon.
std::vector<VerificationReport> convergence_report(double alpha, const GridFunction& phi, const std::vector<double>& eps_schedule);

/// Grid L2 norm sqrt(int |f|^2) under f's own rule.
double grid_norm(const GridFunction& f);

}  // namespace gpcs::identity

#endif  // GPCS_IDENTITY_HPP
