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

#include "gpcs/quadrature.hpp"

#include <cmath>
#include <string>

namespace gpcs::quadrature {

QuadratureRule circle_rule(int n_nodes) {
    require(n_nodes >= 4, "circle_rule: requires n_nodes >= 4");
    QuadratureRule rule;
    rule.domain = Domain::circle;
    rule.nodes.resize(n_nodes);
    rule.weights.assign(n_nodes, 2.0 * M_PI / n_nodes);
    for (int j = 0; j < n_nodes; ++j) {
        rule.nodes[j] = 2.0 * M_PI * j / n_nodes;
    }
    rule.order_hint = n_nodes - 1;
    return rule;
}

QuadratureRule circle_rule_clustered(int n_nodes) {
    require(n_nodes >= 8, "circle_rule_clustered: requires n_nodes >= 8");
    QuadratureRule rule;
    rule.domain = Domain::circle;
    // tanh-sinh map of (-1,1) onto (0, 2pi): theta = pi (1 + tanh(pi/2 sinh t))
    const double T = 3.19;  // endpoint complements reach ~1e-38 relative
    const double h = 2.0 * T / (n_nodes - 1);
    rule.nodes.reserve(n_nodes);
    rule.weights.reserve(n_nodes);
    for (int j = 0; j < n_nodes; ++j) {
        double t = -T + j * h;
        double s = 0.5 * M_PI * std::sinh(t);
        double ch = std::cosh(s);
        double theta = M_PI * (1.0 + std::tanh(s));
        double w = M_PI * 0.5 * M_PI * std::cosh(t) / (ch * ch) * h;
        if (theta <= 0.0 || theta >= 2.0 * M_PI || w <= 0.0) continue;
        rule.nodes.push_back(theta);
        rule.weights.push_back(w);
    }
    rule.order_hint = static_cast<int>(rule.nodes.size()) / 4;
    return rule;
}

QuadratureRule half_line_rule(int n_nodes, double scale) {
    require(n_nodes >= 8, "half_line_rule: requires n_nodes >= 8");
    require(scale > 0.0, "half_line_rule: requires scale > 0");
    QuadratureRule rule;
    rule.domain = Domain::half_line;
    // x = scale exp(pi/2 sinh t); lower range reaches ~2e-19 scale, the upper
    // stops at 40 scale so Gaussian- or exponential-decay integrands are
    // resolved without driving polynomial factors out of double range.
    const double t_lo = -3.6;
    const double t_hi = std::asinh(std::log(40.0) / (0.5 * M_PI));
    const double h = (t_hi - t_lo) / (n_nodes - 1);
    rule.nodes.resize(n_nodes);
    rule.weights.resize(n_nodes);
    for (int j = 0; j < n_nodes; ++j) {
        double t = t_lo + j * h;
        double e = 0.5 * M_PI * std::sinh(t);
        double x = scale * std::exp(e);
        rule.nodes[j] = x;
        rule.weights[j] = x * 0.5 * M_PI * std::cosh(t) * h;
    }
    rule.order_hint = n_nodes;
    return rule;
}

complex integrate(const QuadratureRule& rule, const std::function<complex(double)>& f) {
    KahanSum<complex> acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        complex v = f(rule.nodes[i]);
        if (std::isnan(v.real()) || std::isnan(v.imag())) {
            throw ConvergenceError("integrate: NaN at node x = " + std::to_string(rule.nodes[i]));
        }
        acc.add(rule.weights[i] * v);
    }
    return acc.value();
}

complex integrate_samples(const QuadratureRule& rule, std::span<const complex> values) {
    require(values.size() == rule.nodes.size(), "integrate_samples: size mismatch with rule");
    KahanSum<complex> acc;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (std::isnan(values[i].real()) || std::isnan(values[i].imag())) {
            throw ConvergenceError("integrate_samples: NaN at node x = " + std::to_string(rule.nodes[i]));
        }
        acc.add(rule.weights[i] * values[i]);
    }
    return acc.value();
}

double integrate_real(const QuadratureRule& rule, const std::function<double(double)>& f) {
    KahanSum<double> acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double v = f(rule.nodes[i]);
        if (std::isnan(v)) {
            throw ConvergenceError("integrate_real: NaN at node x = " + std::to_string(rule.nodes[i]));
        }
        acc.add(rule.weights[i] * v);
    }
    return acc.value();
}

}  // namespace gpcs::quadrature
