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

#include "gpcs/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gpcs::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLogMax = 709.0;  // just under ln(DBL_MAX)

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::abs(x - std::round(x)) < 1e-12;
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: requires x > 0, got " + std::to_string(x));
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma: requires x > 0, got " + std::to_string(x));
    double result = 0.0;
    // shift into the asymptotic range
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // psi(x) ~ ln x - 1/(2x) - sum B_{2k}/(2k x^{2k})
    const double r = 1.0 / (x * x);
    double series = r * (1.0 / 12.0 - r * (1.0 / 120.0 - r * (1.0 / 252.0 - r * (1.0 / 240.0 - r * (1.0 / 132.0 - r * (691.0 / 32760.0 - r / 12.0))))));
    return result + std::log(x) - 0.5 / x - series;
}

double pochhammer(double nu, int n) {
    if (n < 0) throw DomainError("pochhammer: requires n >= 0");
    if (n == 0) return 1.0;
    if (n <= 40 || nu <= 0.0) {
        double p = 1.0;
        for (int k = 0; k < n; ++k) {
            p *= nu + k;
            if (!std::isfinite(p)) throw OverflowError("pochhammer: overflow, use log_pochhammer");
        }
        return p;
    }
    double lp = log_pochhammer(nu, n);
    if (lp > kLogMax) throw OverflowError("pochhammer: overflow, use log_pochhammer");
    return std::exp(lp);
}

double log_pochhammer(double nu, int n) {
    if (n < 0) throw DomainError("log_pochhammer: requires n >= 0");
    if (!(nu > 0.0)) throw DomainError("log_pochhammer: requires nu > 0");
    if (n == 0) return 0.0;
    return log_gamma(nu + n) - log_gamma(nu);
}

complex hyp2f1_terminating(int n, double b, double c, complex z) {
    if (n < 0) throw DomainError("hyp2f1_terminating: requires n >= 0");
    if (is_nonpositive_integer(c) && c > -static_cast<double>(n)) {
        throw DomainError("hyp2f1_terminating: c is a nonpositive integer inside the sum range");
    }
    // finite sum, accumulated in extended precision
    using lcomplex = std::complex<long double>;
    lcomplex zl(static_cast<long double>(z.real()), static_cast<long double>(z.imag()));
    lcomplex term(1.0L, 0.0L);
    KahanSum<lcomplex> acc;
    acc.add(term);
    for (int k = 0; k < n; ++k) {
        long double ratio_num = static_cast<long double>(k - n) * (b + k);
        long double ratio_den = (c + k) * (k + 1.0L);
        term *= zl * (ratio_num / ratio_den);
        acc.add(term);
    }
    lcomplex s = acc.value();
    return complex(static_cast<double>(s.real()), static_cast<double>(s.imag()));
}

namespace {

// Direct Gauss series; all terms positive for a,b,c > 0, x >= 0.
double hyp2f1_direct(double a, double b, double c, double x) {
    KahanSum<double> acc;
    double term = 1.0;
    acc.add(term);
    const int max_terms = 4000;
    for (int k = 0; k < max_terms; ++k) {
        double ratio = (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        term *= ratio;
        acc.add(term);
        if (ratio < 0.95 && term <= 0.25 * kEps * acc.value() * (1.0 - ratio)) {
            return acc.value();
        }
    }
    throw ConvergenceError("hyp2f1: direct series did not converge (x too close to 1?)");
}

// 2F1(A, B; A+B+1; x) for A, B > -1 via the degenerate (c-a-b = 1) connection
// formula, as a series in w = 1-x with a logarithmic part.
double hyp2f1_abp1(double A, double B, double x, double w) {
    const double first = std::tgamma(A + B + 1.0) / (std::tgamma(A + 1.0) * std::tgamma(B + 1.0));
    // the log series carries coefficient 1/(Gamma(A)Gamma(B)); it vanishes
    // when A or B is a nonpositive integer (the gamma=0 collapse)
    if (is_nonpositive_integer(A) || is_nonpositive_integer(B)) return first;
    const double coef = std::tgamma(A + B + 1.0) / (std::tgamma(A) * std::tgamma(B));

    const double logw = std::log(w);
    double psi_k1 = -0.5772156649015328606065121;  // psi(1)
    double psi_k2 = 1.0 + psi_k1;                  // psi(2)
    double psi_A = digamma(A + 1.0);
    double psi_B = digamma(B + 1.0);

    KahanSum<double> acc;
    double cterm = 1.0;  // (A+1)_k (B+1)_k / (k! (k+1)!) * w^k
    const int max_terms = 600;
    for (int k = 0; k < max_terms; ++k) {
        double bracket = logw - psi_k1 - psi_k2 + psi_A + psi_B;
        double term = cterm * bracket;
        acc.add(term);
        if (k > 2 && std::abs(term) <= 0.25 * kEps * std::abs(first + coef * w * acc.value())) {
            break;
        }
        cterm *= (A + 1.0 + k) * (B + 1.0 + k) / ((k + 1.0) * (k + 2.0)) * w;
        psi_k1 += 1.0 / (k + 1.0);
        psi_k2 += 1.0 / (k + 2.0);
        psi_A += 1.0 / (A + 1.0 + k);
        psi_B += 1.0 / (B + 1.0 + k);
        if (k == max_terms - 1) throw ConvergenceError("hyp2f1: connection series did not converge");
    }
    return first + coef * w * acc.value();
}

}  // namespace

double hyp2f1(double a, double b, double c, double x) { return hyp2f1(a, b, c, x, 1.0 - x); }

double hyp2f1(double a, double b, double c, double x, double one_minus_x) {
    if (!(a > 0.0 && b > 0.0 && c > 0.0)) throw DomainError("hyp2f1: requires a, b, c > 0");
    if (x < 0.0 || x >= 1.0 || one_minus_x <= 0.0) {
        throw DomainError("hyp2f1: requires 0 <= x < 1");
    }
    if (x == 0.0) return 1.0;
    if (x <= 0.5) return hyp2f1_direct(a, b, c, x);

    if (std::abs(c - a - b + 1.0) < 1e-12) {
        // Euler transformation first: F(a,b;c;x) = (1-x)^{-1} F(b-1, a-1; c; x),
        // then the connection formula for the transformed (c-a-b = +1) case.
        return hyp2f1_abp1(b - 1.0, a - 1.0, x, one_minus_x) / one_minus_x;
    }
    if (x <= 0.75) return hyp2f1_direct(a, b, c, x);
    throw DomainError("hyp2f1: x > 0.75 supported only for c - a - b == -1");
}

SeriesResult hyp1f1(double a, double c, complex z) {
    if (!(c > 0.0)) throw DomainError("hyp1f1: requires c > 0");
    if (std::abs(z) > 40.0) {
        throw ConvergenceError("hyp1f1: |z| > 40; use hyp1f1_scaled");
    }
    if (z.real() < 0.0) {
        // Kummer: 1F1(a,c,z) = e^z 1F1(c-a, c, -z)
        SeriesResult r = hyp1f1(c - a, c, -z);
        complex ez = std::exp(z);
        r.value *= ez;
        r.tail_bound *= std::abs(ez);
        return r;
    }
    KahanSum<complex> acc;
    complex term(1.0, 0.0);
    acc.add(term);
    const int max_terms = 500;
    for (int k = 0; k < max_terms; ++k) {
        complex ratio = z * ((a + k) / ((c + k) * (k + 1.0)));
        term *= ratio;
        acc.add(term);
        double rr = std::abs(ratio);
        if (rr < 0.5 && std::abs(term) <= 0.5 * kEps * std::abs(acc.value())) {
            SeriesResult out;
            out.value = acc.value();
            out.terms_used = k + 2;
            out.tail_bound = 2.0 * std::abs(term) * rr;
            return out;
        }
    }
    throw ConvergenceError("hyp1f1: series did not converge in 500 terms");
}

ScaledSeriesResult hyp1f1_scaled(double a, double c, complex z) {
    if (!(c > 0.0)) throw DomainError("hyp1f1_scaled: requires c > 0");
    if (z.real() < 0.0) {
        ScaledSeriesResult r = hyp1f1_scaled(c - a, c, -z);
        r.value.log_scale += z.real();
        r.value.mantissa *= std::exp(complex(0.0, z.imag()));
        return r;
    }
    const double rescale_at = 1e150;
    const double rescale_log = 512.0 * M_LN2;
    const double rescale_factor = std::exp2(-512.0);

    KahanSum<complex> acc;
    complex term(1.0, 0.0);
    acc.add(term);
    double log_scale = 0.0;
    double sum_abs = 1.0;  // running sum of |term| at the current scale
    const double az = std::abs(z);
    const int max_terms = static_cast<int>(3.0 * az) + 4000;
    for (int k = 0; k < max_terms; ++k) {
        complex ratio = z * ((a + k) / ((c + k) * (k + 1.0)));
        term *= ratio;
        acc.add(term);
        sum_abs += std::abs(term);
        if (std::abs(term) > rescale_at || sum_abs > rescale_at) {
            term *= rescale_factor;
            acc.sum *= rescale_factor;
            acc.comp *= rescale_factor;
            sum_abs *= rescale_factor;
            log_scale += rescale_log;
        }
        double rr = std::abs(ratio);
        if (rr < 0.5 && std::abs(term) <= 0.25 * kEps * std::abs(acc.value())) {
            ScaledSeriesResult out;
            out.value.mantissa = acc.value();
            out.value.log_scale = log_scale;
            out.terms_used = k + 2;
            // relative truncation plus compensated-summation roundoff from
            // whatever cancellation the series went through
            double mag = std::abs(acc.value());
            out.tail_bound = 2.0 * std::abs(term) * rr / mag + 4.0 * kEps * sum_abs / mag;
            return out;
        }
    }
    throw ConvergenceError("hyp1f1_scaled: series did not converge");
}

double laguerre(int n, double nu, double x) {
    if (n < 0) throw DomainError("laguerre: requires n >= 0");
    if (!(nu > -1.0)) throw DomainError("laguerre: requires nu > -1");
    if (x < 0.0) throw DomainError("laguerre: requires x >= 0");
    if (n == 0) return 1.0;
    double p0 = 1.0;
    double p1 = 1.0 + nu - x;
    for (int k = 1; k < n; ++k) {
        double p2 = ((2.0 * k + 1.0 + nu - x) * p1 - (k + nu) * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

namespace {

// ln of the normalized power series sum_{k} (x^2/4)^k / (k! (nu+1)_k)
double log_bessel_series_sum(double nu, double x) {
    const double q = 0.25 * x * x;
    KahanSum<double> acc;
    double term = 1.0;
    acc.add(term);
    for (int k = 0; k < 500; ++k) {
        term *= q / ((k + 1.0) * (nu + k + 1.0));
        acc.add(term);
        if (term <= 0.5 * kEps * acc.value()) break;
    }
    return std::log(acc.value());
}

// ln of the asymptotic factor: I_nu(x) ~ e^x/sqrt(2 pi x) * S,
// S = sum_k (-1)^k a_k(nu) / x^k; truncated at the smallest term.
double log_bessel_asymptotic_sum(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double s = 1.0;
    double prev = std::abs(term);
    for (int k = 1; k <= 24; ++k) {
        double f = (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
        term *= -f;
        if (std::abs(term) > prev) break;  // asymptotic tail started growing
        s += term;
        prev = std::abs(term);
        if (prev < kEps) break;
    }
    return std::log(s);
}

}  // namespace

double log_bessel_i(double nu, double x) {
    if (!(nu >= 0.0)) throw DomainError("bessel_i: requires nu >= 0");
    if (!(x > 0.0)) throw DomainError("log_bessel_i: requires x > 0");
    if (x <= 30.0) {
        return nu * std::log(0.5 * x) - log_gamma(nu + 1.0) + log_bessel_series_sum(nu, x);
    }
    return x - 0.5 * std::log(2.0 * M_PI * x) + log_bessel_asymptotic_sum(nu, x);
}

double bessel_i(double nu, double x) {
    if (!(nu >= 0.0)) throw DomainError("bessel_i: requires nu >= 0");
    if (x < 0.0) throw DomainError("bessel_i: requires x >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    double lv = log_bessel_i(nu, x);
    if (lv > kLogMax) throw OverflowError("bessel_i: overflow, use log_bessel_i");
    return std::exp(lv);
}

double log_hille_hardy_kernel(double tau, double xi, double zeta, double alpha) {
    if (!(tau > 0.0 && tau < 1.0)) throw DomainError("hille_hardy_kernel: requires 0 < tau < 1");
    if (!(alpha > 1.5)) throw DomainError("hille_hardy_kernel: requires alpha > 3/2");
    if (!(xi > 0.0 && zeta > 0.0)) throw DomainError("log_hille_hardy_kernel: requires xi, zeta > 0");
    const double omt = 1.0 - tau;
    const double barg = 2.0 * std::sqrt(xi * zeta * tau) / omt;
    return -std::log(omt) - 0.5 * (alpha - 1.0) * (std::log(xi) + std::log(zeta) + std::log(tau)) - tau * (xi + zeta) / omt + log_bessel_i(alpha - 1.0, barg);
}

double hille_hardy_kernel(double tau, double xi, double zeta, double alpha) {
    if (!(tau > 0.0 && tau < 1.0)) throw DomainError("hille_hardy_kernel: requires 0 < tau < 1");
    if (!(alpha > 1.5)) throw DomainError("hille_hardy_kernel: requires alpha > 3/2");
    if (xi < 0.0 || zeta < 0.0) throw DomainError("hille_hardy_kernel: requires xi, zeta >= 0");
    if (xi == 0.0 || zeta == 0.0) {
        // m-series limit: K = (1-tau)^{-alpha} exp(-tau(xi+zeta)/(1-tau)) / Gamma(alpha)
        const double omt = 1.0 - tau;
        return std::exp(-alpha * std::log(omt) - tau * (xi + zeta) / omt - log_gamma(alpha));
    }
    double lv = log_hille_hardy_kernel(tau, xi, zeta, alpha);
    if (lv > kLogMax) throw OverflowError("hille_hardy_kernel: overflow, use log variant");
    return std::exp(lv);
}

}  // namespace gpcs::specfun
