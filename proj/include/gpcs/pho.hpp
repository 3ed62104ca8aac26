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

#ifndef GPCS_PHO_HPP
#define GPCS_PHO_HPP

#include <optional>

#include "gpcs/common.hpp"

namespace gpcs::pho {

/// Parameter bundle for the singular-oscillator model
///   H = -d^2/dx^2 + x^2 + a/x^2  on (0, inf),
/// spectrum 2(2n + alpha) with alpha = 1 + sqrt(1+4a)/2. `coupled` marks the
/// regime alpha = gamma + 1 in which the closed wavefunction form and the
/// circle transform exist.
///
/// Built from a > 0 the range alpha > 3/2 is automatic. Building coupled
/// parameters directly from gamma admits gamma >= 0, i.e. alpha = gamma+1
/// down to 1, where the basis functions are still square integrable; the
/// potential coupling a = gamma^2 - 1/4 is then only formal for gamma < 1/2.
struct ModelParams {
    std::optional<double> gamma;
    double a = 0.0;
    double alpha = 0.0;
    double epsilon = 0.0;
    bool coupled = false;

    void validate() const;
    double gamma_value() const;  // throws if gamma is unset
};

struct MolecularParams {
    double rho;     // force parameter
    double kappa0;  // equilibrium bond length
};

/// alpha = 1 + sqrt(1+4a)/2; gamma left unset until couple_gamma.
ModelParams params_from_a(double a, double epsilon);

/// Uncoupled parameters from alpha > 3/2 directly.
ModelParams params_from_alpha(double alpha, double epsilon);

/// Coupled parameters from gamma >= 0: alpha = gamma + 1.
ModelParams params_from_gamma(double gamma, double epsilon);

/// Lock gamma to alpha - 1. Idempotent.
ModelParams couple_gamma(ModelParams p);

double molecular_to_a(const MolecularParams& m);

/// lambda_n = 2(2n + alpha).
double eigenvalue(int n, double alpha);

/// Spectrum in molecular form,
///   4 kappa0^{-1} sqrt(rho) (n + 1/2 + (sqrt(1+4 rho kappa0^2) - 2 kappa0 sqrt(rho))/4).
/// Note this counts the potential's -2 rho offset, so at kappa0^{-1} sqrt(rho) = 1
/// it equals eigenvalue(n, alpha(a)) - 2 rho.
double eigenvalue_molecular(int n, const MolecularParams& m);

/// Normalized eigenfunction
///   <x|n;alpha> = sqrt(2 n!/Gamma(alpha+n)) x^{alpha-1/2} e^{-x^2/2} L_n^{(alpha-1)}(x^2),
/// prefactor in log space. Returns 0 at x = 0 and when the value underflows;
/// throws OverflowError instead of producing non-finite values.
double eigenfunction(int n, double alpha, double x);

/// All of <x|0;alpha> .. <x|n_max;alpha> in one recurrence pass, with
/// on-the-fly rescaling so intermediate Laguerre values may leave double
/// range even though the eigenfunctions themselves never do.
std::vector<double> eigenfunction_sequence(int n_max, double alpha, double x);

}  // namespace gpcs::pho

#endif  // GPCS_PHO_HPP
