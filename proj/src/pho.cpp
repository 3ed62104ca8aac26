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

#include "gpcs/pho.hpp"

#include <cmath>

#include "gpcs/specfun.hpp"

namespace gpcs::pho {

void ModelParams::validate() const {
    require(epsilon > 0.0, "ModelParams: requires epsilon > 0");
    require(alpha > 0.0, "ModelParams: requires alpha > 0");
    if (gamma) {
        require(*gamma >= 0.0, "ModelParams: requires gamma >= 0");
        if (coupled) {
            require(std::abs(alpha - (*gamma + 1.0)) < 1e-12, "ModelParams: coupled requires alpha = gamma + 1");
        }
    }
    // alpha and a must stay algebraically consistent: alpha = 1 + sqrt(1+4a)/2
    require(std::abs(a - ((alpha - 1.0) * (alpha - 1.0) - 0.25)) < 1e-10 * (1.0 + std::abs(a)), "ModelParams: a and alpha inconsistent");
}

double ModelParams::gamma_value() const {
    if (!gamma) throw DomainError("ModelParams: gamma is unset; call couple_gamma or set it");
    return *gamma;
}

ModelParams params_from_a(double a, double epsilon) {
    require(a > 0.0, "params_from_a: requires a > 0");
    require(epsilon > 0.0, "params_from_a: requires epsilon > 0");
    ModelParams p;
    p.a = a;
    p.alpha = 1.0 + 0.5 * std::sqrt(1.0 + 4.0 * a);
    p.epsilon = epsilon;
    p.coupled = false;
    require(p.alpha > 1.5, "params_from_a: alpha must exceed 3/2 strictly");
    return p;
}

ModelParams params_from_alpha(double alpha, double epsilon) {
    require(alpha > 1.5, "params_from_alpha: requires alpha > 3/2");
    require(epsilon > 0.0, "params_from_alpha: requires epsilon > 0");
    ModelParams p;
    p.alpha = alpha;
    p.a = (alpha - 1.0) * (alpha - 1.0) - 0.25;
    p.epsilon = epsilon;
    p.coupled = false;
    return p;
}

ModelParams params_from_gamma(double gamma, double epsilon) {
    require(gamma >= 0.0, "params_from_gamma: requires gamma >= 0");
    require(epsilon > 0.0, "params_from_gamma: requires epsilon > 0");
    ModelParams p;
    p.gamma = gamma;
    p.alpha = gamma + 1.0;
    p.a = gamma * gamma - 0.25;
    p.epsilon = epsilon;
    p.coupled = true;
    return p;
}

ModelParams couple_gamma(ModelParams p) {
    p.gamma = p.alpha - 1.0;
    p.coupled = true;
    return p;
}

double molecular_to_a(const MolecularParams& m) {
    require(m.rho > 0.0 && m.kappa0 > 0.0, "molecular_to_a: requires rho, kappa0 > 0");
    return m.rho * m.kappa0 * m.kappa0;
}

double eigenvalue(int n, double alpha) {
    require(n >= 0, "eigenvalue: requires n >= 0");
    require(alpha > 0.0, "eigenvalue: requires alpha > 0");
    return 2.0 * (2.0 * n + alpha);
}

double eigenvalue_molecular(int n, const MolecularParams& m) {
    require(n >= 0, "eigenvalue_molecular: requires n >= 0");
    require(m.rho > 0.0 && m.kappa0 > 0.0, "eigenvalue_molecular: requires rho, kappa0 > 0");
    const double sr = std::sqrt(m.rho);
    const double a = molecular_to_a(m);
    return 4.0 * sr / m.kappa0 * (n + 0.5 + 0.25 * (std::sqrt(1.0 + 4.0 * a) - 2.0 * m.kappa0 * sr));
}

double eigenfunction(int n, double alpha, double x) {
    require(n >= 0, "eigenfunction: requires n >= 0");
    require(alpha > 0.0, "eigenfunction: requires alpha > 0");
    require(x >= 0.0, "eigenfunction: requires x >= 0");
    if (x == 0.0) return 0.0;  // Dirichlet boundary

    const double y = x * x;
    if (n == 0 || y <= 4.0 * n + 2.0 * alpha + 4.0) {
        // safely inside double range; plain recurrence
        const double log_pref = 0.5 * (M_LN2 + specfun::log_gamma(n + 1.0) - specfun::log_gamma(alpha + n));
        double lag = specfun::laguerre(n, alpha - 1.0, y);
        if (!std::isfinite(lag)) throw OverflowError("eigenfunction: Laguerre recurrence overflow");
        double mag = log_pref + (alpha - 0.5) * std::log(x) - 0.5 * y;
        if (mag > 700.0) throw OverflowError("eigenfunction: overflow");
        return std::exp(mag) * lag;
    }
    return eigenfunction_sequence(n, alpha, x).back();
}

std::vector<double> eigenfunction_sequence(int n_max, double alpha, double x) {
    require(n_max >= 0, "eigenfunction_sequence: requires n_max >= 0");
    require(alpha > 0.0, "eigenfunction_sequence: requires alpha > 0");
    require(x >= 0.0, "eigenfunction_sequence: requires x >= 0");
    std::vector<double> out(n_max + 1, 0.0);
    if (x == 0.0) return out;

    const double y = x * x;
    const double nu = alpha - 1.0;
    const double log_env = (alpha - 0.5) * std::log(x) - 0.5 * y;
    // Laguerre recurrence in rescaled form: p holds L_n * exp(-shift)
    double shift = 0.0;
    double p0 = 1.0;
    double p1 = 1.0 + nu - y;
    double log_pref = 0.5 * (M_LN2 - specfun::log_gamma(alpha));
    auto emit = [&](int n, double p) {
        double mag = log_pref + log_env + shift;
        if (mag > 700.0) throw OverflowError("eigenfunction_sequence: overflow");
        out[n] = std::exp(mag) * p;
    };
    emit(0, p0);
    if (n_max == 0) return out;
    log_pref -= 0.5 * std::log(alpha);
    emit(1, p1);
    for (int k = 1; k < n_max; ++k) {
        double p2 = ((2.0 * k + 1.0 + nu - y) * p1 - (k + nu) * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
        double m = std::max(std::abs(p0), std::abs(p1));
        if (m > 1e250) {
            p0 *= 1e-250;
            p1 *= 1e-250;
            shift += 250.0 * M_LN10;
        } else if (m > 0.0 && m < 1e-250) {
            p0 *= 1e250;
            p1 *= 1e250;
            shift -= 250.0 * M_LN10;
        }
        log_pref += 0.5 * (std::log(k + 1.0) - std::log(alpha + k));
        emit(k + 1, p1);
    }
    return out;
}

}  // namespace gpcs::pho
