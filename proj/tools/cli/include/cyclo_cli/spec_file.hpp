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

#ifndef CYCLO_CLI_SPEC_FILE_HPP
#define CYCLO_CLI_SPEC_FILE_HPP

#include <stdexcept>
#include <string>

#include "cyclo/curve.hpp"
#include "cyclo/verify.hpp"

namespace cyclo::cli {

/// Malformed or invalid curve file; maps to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CurveSpec {
    /// Canonical echo of the input (type, p, ext_modulus, n, branch, f).
    Json echo;
    CurvePtr curve;
};

/// Decodes a curve document. Errors name the JSON pointer of
/// the offending value. Hypothesis violations are reported as InputError too.
CurveSpec parse_curve_spec(const std::string& text);
CurveSpec read_curve_spec(const std::string& path);

/// Decodes an already parsed document (used by the sweep round trip).
CurveSpec decode_curve_spec(const Json& doc);

}  // namespace cyclo::cli

#endif  // CYCLO_CLI_SPEC_FILE_HPP
