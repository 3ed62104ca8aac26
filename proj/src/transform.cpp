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

#include "gpcs/transform.hpp"

#include <algorithm>
#include <cmath>

#include "gpcs/parallel.hpp"

namespace gpcs::transform {

namespace {

constexpr double kMinQuadEpsilon = 0.05;

// e^{-n eps/2} sqrt(n!/(gamma+1)_n) g_n(e^{i theta}), with g_n through its
// stable monomial form.
complex q_analytic_impl(int n, double gamma, double epsilon, double theta) {
    complex g = cjacobi::circular_jacobi(n, gamma, cjacobi::CirclePoint(theta));
    double log_norm = 0.5 * (specfun::log_gamma(n + 1.0) - specfun::log_pochhammer(gamma + 1.0, n));
    return std::exp(-0.5 * n * epsilon + log_norm) * g;
}

}  // namespace

complex kappa(double tau, double theta) {
    require(tau > 0.0 && tau < 1.0, "kappa: requires 0 < tau < 1");
    const complex z = std::polar(1.0, theta);
    return (1.0 - z) * tau / ((1.0 - tau) * (1.0 - tau * z));
}

double kappa_reduction_residual(double tau, double theta) {
    const complex z = std::polar(1.0, theta);
    const complex k = kappa(tau, theta);
    const double omt = 1.0 - tau;
    complex lhs = k * omt * omt / (tau * (1.0 - k * omt));
    return std::abs(lhs - (1.0 - z));
}

double kappa_power_residual(double tau, double theta, double gamma) {
    require(gamma >= 0.0, "kappa_power_residual: requires gamma >= 0");
    const complex z = std::polar(1.0, theta);
    const complex k = kappa(tau, theta);
    const double omt = 1.0 - tau;
    complex base = (1.0 - tau * z) * (1.0 - k * omt);
    complex lhs = std::exp((0.5 * gamma + 1.0) * std::log(complex(omt, 0.0)) - (1.0 + 0.5 * gamma) * std::log(base));
    return std::abs(lhs - 1.0);
}

complex q_epsilon_analytic(int n, double gamma, double epsilon, double theta) {
    require(n >= 0, "q_epsilon_analytic: requires n >= 0");
    require(gamma >= 0.0, "q_epsilon_analytic: requires gamma >= 0");
    require(epsilon >= 0.0, "q_epsilon_analytic: requires epsilon >= 0");
    return q_analytic_impl(n, gamma, epsilon, theta);
}

complex q_epsilon_quadrature(int n, double gamma, double epsilon, double theta, const quadrature::QuadratureRule& rule) {
    require(n >= 0, "q_epsilon_quadrature: requires n >= 0");
    require(gamma >= 0.0, "q_epsilon_quadrature: requires gamma >= 0");
    require(epsilon >= kMinQuadEpsilon, "q_epsilon_quadrature: requires epsilon >= 0.05");
    require(rule.domain == quadrature::Domain::half_line, "q_epsilon_quadrature: requires a half-line rule");

    const double tau = std::exp(-0.5 * epsilon);
    const double omt = 1.0 - tau;
    const complex z = std::polar(1.0, theta);
    const complex om_tz = 1.0 - tau * z;
    const complex kap = kappa(tau, theta);

    // integrand x^{2 gamma+1} exp(-x^2/(1-tau)) L_n^{(gamma)}(x^2)
    //           1F1(1+gamma/2, 1+gamma; kappa x^2), composed in log space;
    // envelope decay rate (1 - tau cos theta)/|1 - tau e^{i theta}|^2 prunes
    // nodes that cannot contribute
    const double decay = (1.0 - tau * std::cos(theta)) / std::norm(om_tz);
    KahanSum<complex> acc;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double x = rule.nodes[j];
        const double y = x * x;
        if (y * decay - (2.0 * gamma + 1.0 + 2.0 * n) * std::log1p(x) > 55.0) continue;
        auto f = specfun::hyp1f1_scaled(1.0 + 0.5 * gamma, 1.0 + gamma, kap * y);
        double lag = specfun::laguerre(n, gamma, y);
        double log_mag = (2.0 * gamma + 1.0) * std::log(x) - y / omt + f.value.log_scale;
        acc.add(rule.weights[j] * lag * f.value.mantissa * std::exp(log_mag));
    }

    double log_pref = 0.5 * M_LN2 - 0.5 * specfun::log_gamma(gamma + 1.0) - 0.5 * gamma * std::log(omt) + 0.5 * (M_LN2 + specfun::log_gamma(n + 1.0) - specfun::log_gamma(gamma + 1.0 + n));
    complex pref = std::exp(complex(log_pref, 0.0) - (1.0 + 0.5 * gamma) * std::log(om_tz));
    return pref * acc.value();
}

nlohmann::json to_json(const TransformResult& r) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : r.values) values.push_back({v.real(), v.imag()});
    return nlohmann::json{
        {"n", r.n},
        {"gamma", r.gamma},
        {"theta_grid", r.theta_grid},
        {"values", values},
        {"route", r.route == Route::analytic ? "analytic" : "quadrature+extrapolation"},
        {"warnings", r.warnings},
    };
}

TransformResult transform_eigenstate(int n, double gamma, const std::vector<double>& theta_grid) {
    require(n >= 0, "transform_eigenstate: requires n >= 0");
    require(gamma >= 0.0, "transform_eigenstate: requires gamma >= 0");
    TransformResult out;
    out.n = n;
    out.gamma = gamma;
    out.theta_grid = theta_grid;
    out.values.resize(theta_grid.size());
    out.route = Route::analytic;
    detail::parallel_for(theta_grid.size(), [&](std::size_t i) {
        out.values[i] = q_analytic_impl(n, gamma, 0.0, theta_grid[i]);
    });
    return out;
}

namespace {

// transform kernel at one (x, theta): the closed-state form stripped of its
// normalization, sqrt(2)/sqrt(Gamma(g+1)) x^{g+1/2}(1-tau)^{-g/2}
// (1-tau z)^{-1-g/2} exp(-x^2(1+tau)/(2(1-tau))) 1F1(1+g/2,1+g,kappa x^2)
complex transform_kernel(double gamma, double tau, double theta, double x) {
    if (x <= 0.0) return complex(0.0, 0.0);
    const double omt = 1.0 - tau;
    const complex z = std::polar(1.0, theta);
    const complex om_tz = 1.0 - tau * z;
    const double y = x * x;
    // envelope: exp(-x^2 (1+tau)(1-tau)/(2 |1-tau z|^2)) after 1F1 growth
    const double env = y * (1.0 + tau) * omt / (2.0 * std::norm(om_tz));
    if (env - (gamma + 0.5) * std::log(x + 1.0) > 80.0) return complex(0.0, 0.0);
    auto f = specfun::hyp1f1_scaled(1.0 + 0.5 * gamma, 1.0 + gamma, kappa(tau, theta) * y);
    double log_real = 0.5 * M_LN2 - 0.5 * specfun::log_gamma(gamma + 1.0) + (gamma + 0.5) * std::log(x) - 0.5 * gamma * std::log(omt) - y * (1.0 + tau) / (2.0 * omt) + f.value.log_scale;
    return f.value.mantissa * std::exp(complex(log_real, 0.0) - (1.0 + 0.5 * gamma) * std::log(om_tz));
}

}  // namespace

TransformResult transform_function(const GridFunction& phi, double gamma, const std::vector<double>& theta_grid, const std::vector<double>& eps_schedule) {
    require(gamma >= 0.0, "transform_function: requires gamma >= 0");
    require(phi.domain == quadrature::Domain::half_line, "transform_function: requires a half-line grid");
    require(eps_schedule.size() >= 2, "transform_function: schedule needs at least two epsilons");
    for (std::size_t i = 0; i + 1 < eps_schedule.size(); ++i) {
        require(eps_schedule[i] > eps_schedule[i + 1], "transform_function: schedule must decrease");
        require(std::abs(eps_schedule[i + 1] / eps_schedule[i] - 0.5) < 1e-9, "transform_function: schedule must halve epsilon");
    }
    require(eps_schedule.back() >= kMinQuadEpsilon, "transform_function: epsilon below supported range");

    TransformResult out;
    out.n = -1;
    out.gamma = gamma;
    out.theta_grid = theta_grid;
    out.values.resize(theta_grid.size());
    out.route = Route::quadrature_extrapolation;

    const std::size_t K = eps_schedule.size();
    std::vector<double> step_last(theta_grid.size(), 0.0), step_prev(theta_grid.size(), 0.0);
    detail::parallel_for(theta_grid.size(), [&](std::size_t i) {
        const double theta = theta_grid[i];
        std::vector<complex> R(K);
        for (std::size_t k = 0; k < K; ++k) {
            const double tau = std::exp(-0.5 * eps_schedule[k]);
            const double omt = 1.0 - tau;
            const double env_rate = (1.0 + tau) * omt / (2.0 * std::norm(complex(1.0, 0.0) - tau * std::polar(1.0, theta)));
            KahanSum<complex> acc;
            for (std::size_t j = 0; j < phi.nodes.size(); ++j) {
                const double av = std::abs(phi.values[j]);
                if (av == 0.0) continue;
                const double x = phi.nodes[j];
                // contribution bound: kernel envelope times |phi|
                if (std::log(av) - env_rate * x * x + (gamma + 0.5) * std::log1p(x) < -46.0) continue;
                acc.add(phi.rule.weights[j] * transform_kernel(gamma, tau, theta, x) * std::conj(phi.values[j]));
            }
            R[k] = acc.value();
        }
        // Richardson on the geometric schedule: error expansion analytic in eps
        std::vector<complex> prev = R, cur(K);
        complex last_diag = R[0];
        for (std::size_t j = 1; j < K; ++j) {
            double w = std::exp2(static_cast<double>(j));
            for (std::size_t k = j; k < K; ++k) {
                cur[k] = (w * prev[k] - prev[k - 1]) / (w - 1.0);
            }
            step_prev[i] = step_last[i];
            step_last[i] = std::abs(cur[K - 1] - last_diag);
            last_diag = cur[K - 1];
            std::swap(prev, cur);
        }
        out.values[i] = last_diag;
    });

    // the diagonal steps should shrink as orders are eliminated; a growing
    // final step signals breakdown of the expansion
    bool unstable = false;
    for (std::size_t i = 0; i < theta_grid.size(); ++i) {
        if (step_last[i] > 4.0 * step_prev[i] && step_last[i] > 1e-6) unstable = true;
    }
    if (unstable) {
        out.warnings.push_back("extrapolation unstable; fell back to eigenbasis projection");
        // projection fallback: phi = sum a_n psi_n -> sum a_n * image_n
        const int n_max = 64;
        const double alpha = gamma + 1.0;
        std::vector<complex> a(n_max + 1);
        for (int m = 0; m <= n_max; ++m) {
            KahanSum<complex> acc;
            for (std::size_t j = 0; j < phi.nodes.size(); ++j) {
                acc.add(phi.rule.weights[j] * pho::eigenfunction(m, alpha, phi.nodes[j]) * std::conj(phi.values[j]));
            }
            a[m] = acc.value();
        }
        detail::parallel_for(theta_grid.size(), [&](std::size_t i) {
            KahanSum<complex> acc;
            for (int m = 0; m <= n_max; ++m) {
                acc.add(a[m] * q_analytic_impl(m, gamma, 0.0, theta_grid[i]));
            }
            out.values[i] = acc.value();
        });
    }
    return out;
}

}  // namespace gpcs::transform
