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

#ifndef GPCS_VERIFY_HPP
#define GPCS_VERIFY_HPP

#include <optional>

#include "gpcs/report.hpp"

namespace gpcs::verify {

struct SuiteOptions {
    std::optional<double> epsilon;  // override the default epsilon grid
    std::optional<double> gamma;    // override the default gamma grid
};

std::vector<VerificationReport> suite_specfun(const SuiteOptions& opt = {});
std::vector<VerificationReport> suite_quadrature(const SuiteOptions& opt = {});
std::vector<VerificationReport> suite_pho(const SuiteOptions& opt = {});
std::vector<VerificationReport> suite_cjacobi(const SuiteOptions& opt = {});
std::vector<VerificationReport> suite_gpcs(const SuiteOptions& opt = {});
std::vector<VerificationReport> suite_identity(const SuiteOptions& opt = {});
std::vector<VerificationReport> suite_transform(const SuiteOptions& opt = {});

/// Run a named suite: one of specfun, quadrature, pho, cjacobi, gpcs,
/// identity, transform, all. Throws DomainError for unknown names.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace gpcs::verify

#endif  // GPCS_VERIFY_HPP
