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

#ifndef GPCS_STATES_HPP
#define GPCS_STATES_HPP

#include "gpcs/cjacobi.hpp"
#include "gpcs/common.hpp"
#include "gpcs/pho.hpp"
#include "gpcs/quadrature.hpp"
#include "gpcs/specfun.hpp"

namespace gpcs::states {

using pho::ModelParams;
using specfun::SeriesResult;

/// Truncated expansion coefficients c_n of a circle-labeled state in the
/// oscillator eigenbasis:
///   c_n = N^{-1/2} g_n(e^{i theta}) / sqrt(sigma(n)).
/// truncation_tail bounds 1 - sum |c_n|^2.
struct CoefficientVector {
    ModelParams params;
    double theta = 0.0;
    std::vector<complex> coeffs;
    double truncation_tail = 0.0;
};

/// Samples of a function on a 1-D quadrature grid.
struct GridFunction {
    quadrature::Domain domain = quadrature::Domain::half_line;
    std::vector<double> nodes;
    std::vector<complex> values;
    quadrature::QuadratureRule rule;
};

/// Build a GridFunction by sampling f on the rule's nodes.
GridFunction sample(const quadrature::QuadratureRule& rule, const std::function<complex(double)>& f);

/// Damping sequence sigma(n) = (gamma+1)_n / n! * e^{n epsilon}.
double sigma(int n, double gamma, double epsilon);
double log_sigma(int n, double gamma, double epsilon);

/// Normalization factor as the defining series
///   N = sum_n n! e^{-n epsilon} / (gamma+1)_n |g_n(e^{i theta})|^2,
/// summed to the requested relative tolerance with an a-priori geometric
/// tail bound. Cost is O(n_terms^2); converges for any epsilon > 0 but the
/// term budget bounds the practical range to epsilon >~ 1e-4.
SeriesResult normalization_series(double gamma, double epsilon, double theta, double tol);

/// Normalization factor in closed form,
///   N = (1-e^{-eps}) / |1-e^{-eps+i theta}|^{2+gamma}
///       * 2F1(gamma/2+1, gamma/2+1; gamma+1; rho),
///   rho = e^{-eps} |1-e^{i theta}|^2 / |1-e^{-eps+i theta}|^2 in [0, 1).
/// Supported for epsilon >= 1e-3 (rho approaches 1 like 1 - O(eps^2)).
double normalization_closed(double gamma, double epsilon, double theta);

/// Expansion coefficients up to n_max. Throws (with a suggested n_max) if the
/// a-priori coefficient tail exceeds tail_target.
CoefficientVector coefficients(int n_max, const ModelParams& params, double theta, double tail_target = 1e-12);

/// Coefficients with n_max chosen adaptively so the tail is below tail_target.
CoefficientVector coefficients_auto(const ModelParams& params, double theta, double tail_target = 1e-12);

/// The smallest n_max whose a-priori coefficient tail is below tail_target.
int suggest_n_max(double gamma, double epsilon, double tail_target);

/// Wavefunction <x|state> as the truncated eigenbasis sum (any alpha).
SeriesResult wavefunction_series(const ModelParams& params, double theta, double x, double tol = 1e-12);

/// Closed wavefunction form for coupled parameters (alpha = gamma+1), with
/// tau = e^{-eps/2}:
///   N^{-1/2} sqrt(2) x^{gamma+1/2} (1-tau)^{-gamma/2} / sqrt(Gamma(gamma+1))
///   * (1-tau e^{i theta})^{-1-gamma/2} exp(-x^2 (1+tau)/(2(1-tau)))
///   * 1F1(1+gamma/2; 1+gamma; (1-e^{i theta}) tau x^2 /((1-tau)(1-tau e^{i theta}))).
/// Complex powers take the principal branch; 1 - tau e^{i theta} has positive
/// real part for tau < 1, so the branch cut is never crossed.
complex wavefunction_closed(const ModelParams& params, double theta, double x);

/// Density of the circle measure against d theta: weight_density * N.
double measure_density(double gamma, double epsilon, double theta);

// --- the two series/closed-form engines, exposed for direct verification ---

/// LHS of the bilinear circle-polynomial sum at xi = 1-e^{i theta},
/// zeta = conj(xi):  sum_n (gamma+1)_n r^n / n! * |2F1(-n, g/2+1, g+1; xi)|^2.
SeriesResult bilinear_sum_series(double gamma, double r, double theta, double tol);

/// Its closed form (1-r)/|1-r e^{i theta}|^{2+gamma} * 2F1(...; rho) scaled by
/// ... exactly the normalization factor with r = e^{-eps}.
double bilinear_sum_closed(double gamma, double r, double theta);

/// LHS of the Laguerre bilateral generating sum
///   sum_n t^n 2F1(-n, c, 1+nu; y) L_n^{(nu)}(u).
SeriesResult laguerre_generating_series(double t, double c, complex y, double nu, double u, double tol);

/// Its closed form (1-t)^{-1+c-nu} (1-t+yt)^{-c} exp(-ut/(1-t))
///   * 1F1(c, 1+nu, yut/((1-t)(1-t+yt))).
complex laguerre_generating_closed(double t, double c, complex y, double nu, double u);

}  // namespace gpcs::states

#endif  // GPCS_STATES_HPP
