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

#ifndef CYCLO_CLI_APP_HPP
#define CYCLO_CLI_APP_HPP

#include <ostream>

namespace cyclo::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitInputError = 2;

/// Entry point of the `cyclo` tool: subcommands info, basis, verify, sweep.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclo::cli

#endif  // CYCLO_CLI_APP_HPP
