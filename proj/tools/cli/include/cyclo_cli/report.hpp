/*
   Copyright 2026 The cyclo Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLO_CLI_REPORT_HPP
#define CYCLO_CLI_REPORT_HPP

#include <string>

#include "cyclo/verify.hpp"
#include "cyclo_cli/spec_file.hpp"

namespace cyclo::cli {

enum class BasisKind { omega, h1, derham };

/// Input echo plus genus, ramification data, place classes and mu-table.
Json curve_section(const CurveSpec& spec, RangePolicy policy);

Json omega_json(const std::vector<OmegaElement>& omega);
Json h1_json(const std::vector<H1Element>& h1);
Json derham_json(const std::vector<DeRhamTriple>& derham);

Json policy_json(const VerifyOptions& options);
Json checks_json(const std::vector<CheckResult>& checks);

/// curve, bases, pairing_matrix, checks, policy, all_pass in that order.
Json report_document(const CurveSpec& spec, const Report& report, const VerifyOptions& options);

std::string render_info(const Json& curve);
std::string render_basis(const Json& bases);
/// Aligned check table followed by the verdict.
std::string render_checks(const std::vector<CheckResult>& checks, bool all_pass);

/// Serialization used for every JSON document the tool writes.
std::string dump(const Json& doc);

}  // namespace cyclo::cli

#endif  // CYCLO_CLI_REPORT_HPP
