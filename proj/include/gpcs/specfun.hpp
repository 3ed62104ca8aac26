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

#ifndef GPCS_SPECFUN_HPP
#define GPCS_SPECFUN_HPP

#include "gpcs/common.hpp"

namespace gpcs::specfun {

/// Value of a truncated infinite sum together with truncation bookkeeping.
/// On success tail_bound is an estimate (with safety factor) of the absolute
/// truncation error.
struct SeriesResult {
    complex value{0.0, 0.0};
    int terms_used = 0;
    double tail_bound = 0.0;
};

/// Series result in mantissa/exponent form for sums whose magnitude leaves
/// double range (confluent series at large argument). tail_bound is relative.
struct ScaledSeriesResult {
    ScaledComplex value;
    int terms_used = 0;
    double tail_bound = 0.0;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Digamma psi(x) for x > 0. Recurrence up to x >= 10, then the asymptotic
/// Bernoulli series.
double digamma(double x);

/// Pochhammer (nu)_n. Plain product for small n, Gamma-ratio for large n with
/// nu > 0. Throws OverflowError when the value leaves double range.
double pochhammer(double nu, int n);

/// ln (nu)_n for nu > 0.
double log_pochhammer(double nu, int n);

/// 2F1(-n, b; c; z): exact terminating sum, compensated in extended precision.
/// c must not be a nonpositive integer in (-n, 0].
complex hyp2f1_terminating(int n, double b, double c, complex z);

/// Gauss 2F1(a, b; c; x) for a, b, c > 0 and x in [0, 1). Direct series for
/// x <= 1/2; for larger x requires c - a - b == -1 (the only case generated
/// here) and uses the degenerate connection formula in powers of 1 - x.
/// Diverges like (1-x)^{-1} as x -> 1.
double hyp2f1(double a, double b, double c, double x);

/// Same, with 1 - x supplied exactly by the caller. Needed when x is close to
/// 1 and the complement is known in a cancellation-free form.
double hyp2f1(double a, double b, double c, double x, double one_minus_x);

/// Confluent 1F1(a; c; z), c > 0, direct Taylor with Kummer's transformation
/// for Re z < 0. Errors out beyond |z| = 40 (500-term budget); large
/// arguments go through hyp1f1_scaled.
SeriesResult hyp1f1(double a, double c, complex z);

/// 1F1(a; c; z) for arbitrarily large |z|, summed with dynamic rescaling.
/// tail_bound is relative and includes a roundoff estimate from the
/// cancellation the series suffered.
ScaledSeriesResult hyp1f1_scaled(double a, double c, complex z);

/// Generalized Laguerre L_n^{(nu)}(x) by the three-term recurrence in n.
double laguerre(int n, double nu, double x);

/// Modified Bessel I_nu(x), nu >= 0, x >= 0. Power series for x <= 30, the
/// large-x asymptotic expansion beyond. Throws OverflowError when the
/// unscaled value exceeds double range.
double bessel_i(double nu, double x);

/// ln I_nu(x) for nu >= 0, x > 0; never overflows for moderate nu.
double log_bessel_i(double nu, double x);

/// Bilinear Laguerre kernel
///   K(tau; xi, zeta) = sum_m tau^m m!/Gamma(m+alpha)
///                      L_m^{(alpha-1)}(xi) L_m^{(alpha-1)}(zeta)
/// in its Bessel closed form, evaluated in log space. 0 < tau < 1,
/// alpha > 3/2.
double hille_hardy_kernel(double tau, double xi, double zeta, double alpha);

/// ln K(tau; xi, zeta); requires xi, zeta > 0.
double log_hille_hardy_kernel(double tau, double xi, double zeta, double alpha);

}  // namespace gpcs::specfun

#endif  // GPCS_SPECFUN_HPP
