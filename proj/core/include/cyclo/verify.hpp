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

#ifndef CYCLO_VERIFY_HPP
#define CYCLO_VERIFY_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclo/cohomology.hpp"

namespace cyclo {

using Json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, inconclusive };

std::string to_string(CheckStatus status);

/**
 * @brief Outcome of one check. `inconclusive` is reserved for
 * valuation-bound checks whose negative bound is not known to be exact.
 */
struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string details;
    Json payload = Json::object();

    bool passed() const noexcept { return status == CheckStatus::pass; }
};

/// Integer for prime fields, coordinate list for extensions.
Json encode(const gf::FieldElement& a);

using Matrix = std::vector<std::vector<gf::FieldElement>>;

struct DualityResult {
    Matrix matrix;
    /// h-basis reordered so that column k is dual to omega-basis row k.
    std::vector<H1Element> columns;
    CheckResult check;
};

/// Pairings of the omega basis (rows) against the h basis (columns, in
/// partner order). Passes iff the matrix is the identity.
DualityResult duality_matrix(const CurvePtr& curve, RangePolicy policy);
DualityResult duality_matrix(const std::vector<OmegaElement>& omega, const std::vector<H1Element>& h);

CheckResult cocycle_check(const DeRhamTriple& t);
CheckResult locus_check(const DeRhamTriple& t);

/// Valuations of x, y, dx and the auxiliary functions at every place class,
/// compared with the closed-form divisors; norms give the independent side.
CheckResult divisor_checks(const CurvePtr& curve);

/// Polynomial identities among g_mu, phi_mu, psi and the defining equation.
CheckResult identity_checks(const CurvePtr& curve);

CheckResult dimension_check(const CurvePtr& curve, RangePolicy policy);

/// Holomorphy of the omega basis and pole confinement of the h basis.
CheckResult basis_regularity_check(const std::vector<OmegaElement>& omega, const std::vector<H1Element>& h);

/// Requires a passing duality matrix; fails without evaluating otherwise.
CheckResult exactness_check(const std::vector<OmegaElement>& omega, const std::vector<DeRhamTriple>& derham,
                            const CheckResult& duality);

/// For every a-triple: the default convention gives a cocycle and the
/// `paper` convention leaves residual exactly 2 w_inf.
CheckResult sign_adjudication(const CurvePtr& curve, RangePolicy policy);

struct VerifyOptions {
    RangePolicy policy = RangePolicy::extended;
    SignConvention sign = SignConvention::negated_infty;
};

struct Report {
    std::vector<OmegaElement> omega;
    std::vector<H1Element> h1;
    std::vector<DeRhamTriple> derham;
    Matrix pairing_matrix;
    std::vector<CheckResult> checks;
    bool all_pass = false;
};

/// validate, divisors, identities, dimension, duality, basis regularity,
/// cocycle and locus per triple, exactness. Invalid curves yield only the
/// validation result.
Report full_report(const CurvePtr& curve, const VerifyOptions& options = {});

}  // namespace cyclo

#endif  // CYCLO_VERIFY_HPP
