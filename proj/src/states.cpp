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

#include "gpcs/states.hpp"

#include <algorithm>
#include <cmath>

namespace gpcs::states {

namespace {

constexpr double kMinClosedEpsilon = 1e-3;
constexpr int kMaxSeriesTerms = 60000;

// a-priori bound b_n = (gamma+1)_n/n! e^{-n eps} >= n! e^{-n eps}/(gamma+1)_n |g_n|^2
// (|g_n| peaks at theta = 0 where it equals (gamma+1)_n/n!).
struct BoundSeq {
    double gamma, q;
    double value = 1.0;
    int n = 0;
    void step() {
        value *= (gamma + 1.0 + n) / (n + 1.0) * q;
        ++n;
    }
    // geometric bound on sum_{m > n} b_m, valid once the ratio is below 1
    double tail() const {
        double ratio = (gamma + 1.0 + n) / (n + 1.0) * q;
        if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
        return value * ratio / (1.0 - ratio);
    }
};

}  // namespace

GridFunction sample(const quadrature::QuadratureRule& rule, const std::function<complex(double)>& f) {
    GridFunction g;
    g.domain = rule.domain;
    g.rule = rule;
    g.nodes = rule.nodes;
    g.values.resize(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) g.values[i] = f(rule.nodes[i]);
    return g;
}

double sigma(int n, double gamma, double epsilon) {
    require(n >= 0, "sigma: requires n >= 0");
    require(gamma >= 0.0, "sigma: requires gamma >= 0");
    require(epsilon > 0.0, "sigma: requires epsilon > 0");
    double ls = log_sigma(n, gamma, epsilon);
    if (ls > 709.0) throw OverflowError("sigma: overflow, use log_sigma");
    return std::exp(ls);
}

double log_sigma(int n, double gamma, double epsilon) {
    require(n >= 0, "log_sigma: requires n >= 0");
    require(gamma >= 0.0, "log_sigma: requires gamma >= 0");
    require(epsilon > 0.0, "log_sigma: requires epsilon > 0");
    if (n == 0) return 0.0;
    return specfun::log_pochhammer(gamma + 1.0, n) - specfun::log_gamma(n + 1.0) + n * epsilon;
}

SeriesResult normalization_series(double gamma, double epsilon, double theta, double tol) {
    require(gamma >= 0.0, "normalization_series: requires gamma >= 0");
    require(epsilon > 0.0, "normalization_series: requires epsilon > 0");
    require(tol > 0.0, "normalization_series: requires tol > 0");
    SeriesResult r = bilinear_sum_series(gamma, std::exp(-epsilon), theta, tol);
    return r;
}

SeriesResult bilinear_sum_series(double gamma, double r, double theta, double tol) {
    require(r > 0.0 && r < 1.0, "bilinear_sum_series: requires 0 < r < 1");
    cjacobi::CirclePoint p(theta);
    KahanSum<double> acc;
    BoundSeq bound{gamma, r};
    double f = 1.0;  // n! r^n / (gamma+1)_n
    SeriesResult out;
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
        complex g = cjacobi::circular_jacobi(n, gamma, p);
        acc.add(f * std::norm(g));
        double tail = bound.tail();  // b_{n} consumed; tail over m > n
        if (tail < tol * acc.value()) {
            out.value = acc.value();
            out.terms_used = n + 1;
            out.tail_bound = tail;
            return out;
        }
        f *= (n + 1.0) / (gamma + 1.0 + n) * r;
        bound.step();
    }
    throw ConvergenceError("normalization_series: tolerance unreachable within term budget (epsilon too small)");
}

double bilinear_sum_closed(double gamma, double r, double theta) {
    require(gamma >= 0.0, "bilinear_sum_closed: requires gamma >= 0");
    require(r > 0.0 && r < 1.0, "bilinear_sum_closed: requires 0 < r < 1");
    const double c = std::cos(theta);
    const double d2 = 1.0 - 2.0 * r * c + r * r;          // |1 - r e^{i theta}|^2
    const double one_minus_rho = (1.0 - r) * (1.0 - r) / d2;
    double rho = 1.0 - one_minus_rho;
    if (rho < 0.0) rho = 0.0;
    const double F = specfun::hyp2f1(0.5 * gamma + 1.0, 0.5 * gamma + 1.0, gamma + 1.0, rho, one_minus_rho);
    return (1.0 - r) * std::exp(-(1.0 + 0.5 * gamma) * std::log(d2)) * F;
}

double normalization_closed(double gamma, double epsilon, double theta) {
    require(gamma >= 0.0, "normalization_closed: requires gamma >= 0");
    require(epsilon > 0.0, "normalization_closed: requires epsilon > 0");
    if (epsilon < kMinClosedEpsilon) {
        throw DomainError("normalization_closed: epsilon below the supported floor 1e-3; use normalization_series");
    }
    return bilinear_sum_closed(gamma, std::exp(-epsilon), theta);
}

int suggest_n_max(double gamma, double epsilon, double tail_target) {
    // N >= 1, so a bound on sum b_n suffices for the |c_n|^2 tail
    BoundSeq bound{gamma, std::exp(-epsilon)};
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
        if (bound.tail() < tail_target) return n;
        bound.step();
    }
    throw ConvergenceError("suggest_n_max: tail target unreachable within term budget");
}

CoefficientVector coefficients(int n_max, const ModelParams& params, double theta, double tail_target) {
    require(n_max >= 0, "coefficients: requires n_max >= 0");
    params.validate();
    const double gamma = params.gamma_value();
    const double eps = params.epsilon;

    // a-priori tail check before any work
    BoundSeq bound{gamma, std::exp(-eps)};
    double norm_lb = 1.0;  // N >= b_0 = 1; refine below with the true N
    for (int n = 0; n < n_max; ++n) bound.step();

    double N = eps >= kMinClosedEpsilon ? normalization_closed(gamma, eps, theta)
                                        : normalization_series(gamma, eps, theta, 1e-13).value.real();
    norm_lb = std::max(norm_lb, N);
    double apriori_tail = bound.tail() / norm_lb;
    if (apriori_tail > tail_target) {
        int suggestion = suggest_n_max(gamma, eps, tail_target * norm_lb);
        throw DomainError("coefficients: n_max too small for tail target; need n_max >= " + std::to_string(suggestion));
    }

    CoefficientVector cv;
    cv.params = params;
    cv.theta = theta;
    cv.coeffs.resize(n_max + 1);
    cjacobi::CirclePoint p(theta);
    const double logN = std::log(N);
    for (int n = 0; n <= n_max; ++n) {
        complex g = cjacobi::circular_jacobi(n, gamma, p);
        double scale = std::exp(-0.5 * (log_sigma(n, gamma, eps) + logN));
        cv.coeffs[n] = g * scale;
    }
    cv.truncation_tail = apriori_tail;
    return cv;
}

CoefficientVector coefficients_auto(const ModelParams& params, double theta, double tail_target) {
    params.validate();
    int n_max = suggest_n_max(params.gamma_value(), params.epsilon, tail_target);
    return coefficients(n_max, params, theta, tail_target);
}

SeriesResult wavefunction_series(const ModelParams& params, double theta, double x, double tol) {
    params.validate();
    require(x >= 0.0, "wavefunction_series: requires x >= 0");
    const double gamma = params.gamma_value();
    const double eps = params.epsilon;
    if (x == 0.0) return SeriesResult{complex(0.0, 0.0), 0, 0.0};

    const double N = eps >= kMinClosedEpsilon ? normalization_closed(gamma, eps, theta)
                                              : normalization_series(gamma, eps, theta, 1e-13).value.real();
    const double inv_sqrtN = 1.0 / std::sqrt(N);
    cjacobi::CirclePoint p(theta);

    KahanSum<complex> acc;
    // |c_n psi_n| <= sqrt(b_n / N) * |psi_n|; the eigenfunctions are uniformly
    // bounded on the half line, so a geometric bound on sqrt(b_n) controls the tail
    const double qh = std::exp(-0.5 * eps);
    double sqrt_b = 1.0;  // sqrt(b_n)
    double psi_sup = 0.0;
    const int n_cap = 4000;
    SeriesResult out;
    for (int n = 0; n < n_cap; ++n) {
        double psi = pho::eigenfunction(n, params.alpha, x);
        psi_sup = std::max(psi_sup, std::abs(psi));
        complex g = cjacobi::circular_jacobi(n, gamma, p);
        double scale = std::exp(-0.5 * log_sigma(n, gamma, eps));
        acc.add(g * scale * psi * inv_sqrtN);

        double ratio = std::sqrt((gamma + 1.0 + n) / (n + 1.0)) * qh;
        if (ratio < 1.0) {
            // the eigenfunctions are uniformly below ~1.1 in magnitude; keep a
            // floor on the envelope in case the local maximum lies ahead
            double envelope = std::max(psi_sup, 1.3);
            double tail = inv_sqrtN * envelope * sqrt_b * ratio / (1.0 - ratio);
            if (n > 8 && tail < tol * std::max(std::abs(acc.value()), 1e-3)) {
                out.value = acc.value();
                out.terms_used = n + 1;
                out.tail_bound = tail;
                return out;
            }
        }
        sqrt_b *= ratio;
    }
    throw ConvergenceError("wavefunction_series: term budget exhausted (epsilon too small for the series route)");
}

complex wavefunction_closed(const ModelParams& params, double theta, double x) {
    params.validate();
    require(params.coupled, "wavefunction_closed: requires coupled parameters (alpha = gamma + 1)");
    require(x >= 0.0, "wavefunction_closed: requires x >= 0");
    const double gamma = params.gamma_value();
    const double eps = params.epsilon;
    if (eps < kMinClosedEpsilon) {
        throw DomainError("wavefunction_closed: epsilon below the supported floor 1e-3");
    }
    if (x == 0.0) return complex(0.0, 0.0);

    const double tau = std::exp(-0.5 * eps);
    const double omt = 1.0 - tau;
    const complex z = std::polar(1.0, theta);
    const complex om_tz = 1.0 - tau * z;
    const double N = normalization_closed(gamma, eps, theta);

    const complex arg = (1.0 - z) * (tau * x * x) / (omt * om_tz);
    auto f = specfun::hyp1f1_scaled(1.0 + 0.5 * gamma, 1.0 + gamma, arg);

    // log of the real prefactor, plus principal-branch complex power
    double log_real = 0.5 * M_LN2 - 0.5 * specfun::log_gamma(gamma + 1.0) + (gamma + 0.5) * std::log(x) - 0.5 * gamma * std::log(omt) - 0.5 * std::log(N) - x * x * (1.0 + tau) / (2.0 * omt);
    complex log_power = -(1.0 + 0.5 * gamma) * std::log(om_tz);
    complex exponent = log_power + (log_real + f.value.log_scale);
    return f.value.mantissa * std::exp(exponent);
}

double measure_density(double gamma, double epsilon, double theta) {
    return cjacobi::weight_density(gamma, cjacobi::CirclePoint(theta)) * normalization_closed(gamma, epsilon, theta);
}

SeriesResult laguerre_generating_series(double t, double c, complex y, double nu, double u, double tol) {
    require(t > 0.0 && t < 1.0, "laguerre_generating_series: requires 0 < t < 1");
    require(nu > -1.0, "laguerre_generating_series: requires nu > -1");
    require(u >= 0.0, "laguerre_generating_series: requires u >= 0");
    require(tol > 0.0, "laguerre_generating_series: requires tol > 0");

    // |2F1(-n, c, 1+nu; y)| and |L_n^{(nu)}(u)| both grow at most polynomially;
    // bound them by (max(1,|y|)+1)^n ... no: use the observed terms with the
    // geometric factor t^n and a safety margin instead.
    KahanSum<complex> acc;
    double p0 = 1.0, p1 = 1.0 + nu - u;  // Laguerre recurrence carried inline
    double tn = 1.0;
    const double lag_env = std::exp(0.5 * u);  // |L_n^{(nu)}(u)| <= (nu+1)_n/n! e^{u/2}
    double poch_ratio = 1.0;                   // (nu+1)_n / n!
    // the 2F1 factor is bounded by (c')_n-type growth; reuse the circle bound
    // |2F1(-n, c, 1+nu, y)| <= (1+|y|)^n only as a stopping heuristic backstop.
    const int max_terms = 20000;
    SeriesResult out;
    for (int n = 0; n < max_terms; ++n) {
        double lag = (n == 0) ? 1.0 : p1;
        complex f = specfun::hyp2f1_terminating(n, c, 1.0 + nu, y);
        acc.add(tn * f * lag);

        // a-priori envelope for the remaining terms, geometric once t (1+g/n) < 1
        double env_ratio = t * (nu + 1.0 + n) / (n + 1.0);
        if (env_ratio < 1.0 && n > 4) {
            double fmag_bound = std::abs(f) + 1.0;
            double tail = tn * env_ratio / (1.0 - env_ratio) * fmag_bound * lag_env * poch_ratio * 2.0;
            if (tail < tol * std::max(1e-30, std::abs(acc.value()))) {
                out.value = acc.value();
                out.terms_used = n + 1;
                out.tail_bound = tail;
                return out;
            }
        }
        tn *= t;
        poch_ratio *= (nu + 1.0 + n) / (n + 1.0);
        if (n >= 1) {
            double p2 = ((2.0 * n + 1.0 + nu - u) * p1 - (n + nu) * p0) / (n + 1.0);
            p0 = p1;
            p1 = p2;
        }
    }
    throw ConvergenceError("laguerre_generating_series: tolerance unreachable within term budget");
}

complex laguerre_generating_closed(double t, double c, complex y, double nu, double u) {
    require(t > 0.0 && t < 1.0, "laguerre_generating_closed: requires 0 < t < 1");
    require(nu > -1.0, "laguerre_generating_closed: requires nu > -1");
    require(u >= 0.0, "laguerre_generating_closed: requires u >= 0");
    const complex w = 1.0 - t + y * t;
    const complex arg = y * (u * t) / ((1.0 - t) * w);
    auto f = specfun::hyp1f1_scaled(c, 1.0 + nu, arg);
    complex exponent = (-1.0 + c - nu) * std::log(complex(1.0 - t, 0.0)) - c * std::log(w) - u * t / (1.0 - t) + f.value.log_scale;
    return f.value.mantissa * std::exp(exponent);
}

}  // namespace gpcs::states
