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

#ifndef GPCS_COMMON_HPP
#define GPCS_COMMON_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpcs {

using complex = std::complex<double>;

/// Argument outside the supported domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A series or iteration failed to reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Result exceeds the representable range; use a log-scaled variant.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Kahan compensated accumulator; works for double and complex.
template <typename T>
struct KahanSum {
    T sum{};
    T comp{};

    void add(T x) {
        T y = x - comp;
        T t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    T value() const { return sum; }
};

/// A complex value stored as mantissa * exp(log_scale), so magnitudes far
/// outside double range stay representable through intermediate algebra.
struct ScaledComplex {
    complex mantissa{0.0, 0.0};
    double log_scale = 0.0;

    complex value() const { return mantissa * std::exp(log_scale); }
    double log_abs() const { return std::log(std::abs(mantissa)) + log_scale; }
};

/// Dense row-major complex matrix, just enough for Gram-matrix work.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    complex& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const complex& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<complex> data_;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}

}  // namespace gpcs

#endif  // GPCS_COMMON_HPP
