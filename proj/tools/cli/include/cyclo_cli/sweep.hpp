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

#ifndef CYCLO_CLI_SWEEP_HPP
#define CYCLO_CLI_SWEEP_HPP

#include <cstdint>
#include <vector>

#include "cyclo/verify.hpp"

namespace cyclo::cli {

enum class Family { kummer, artin_schreier };

/**
 * @brief Corpus bounds.
 *
 * Kummer: primes p <= p_max, 2 <= n <= n_max with p not dividing n, over
 * the smallest of F_p, F_{p^2} containing the n-th roots of unity; every
 * multiplicity pattern with n | l <= l_max and gcd(n, l_1, ..., l_r) = 1.
 * Artin-Schreier: primes 3 <= p <= p_max, up to r_max branch points,
 * multiplicities l_i <= li_max prime to p.
 * One seeded choice of branch points (and numerator f) per pattern.
 */
struct SweepParams {
    Family family = Family::kummer;
    int p_max = 13;
    int n_max = 6;
    int l_max = 12;
    int r_max = 3;
    int li_max = 4;
    /// 0 keeps every pattern; otherwise an evenly spaced subset of this size.
    int count_cap = 0;
    std::uint64_t seed = 1;
    int jobs = 1;
    VerifyOptions options;
};

/// Curve documents in enumeration order.
std::vector<Json> enumerate_specs(const SweepParams& params);

struct SweepResult {
    Json summary;
    bool all_pass = false;
};

/// Verifies every enumerated curve (full report plus sign adjudication) and
/// lists the non-passing specs verbatim.
SweepResult run_sweep(const SweepParams& params);

}  // namespace cyclo::cli

#endif  // CYCLO_CLI_SWEEP_HPP
