/*
 * Copyright 2026 The horadam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HORADAM_TOOLS_APP_HPP
#define HORADAM_TOOLS_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace horadam::cli
{

/// Process exit codes; stable for scripting.
enum ExitCode : int
{
    kSuccess = 0,
    kCheckFailed = 1,
    kUsageError = 2,
    kDomainError = 3,
};

/// Environment variable holding the default --precision.
inline constexpr const char* kPrecisionEnv = "HORADAM_PRECISION";

/// Runs the command line `args` (args[0] is the program name) and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horadam::cli

#endif  // HORADAM_TOOLS_APP_HPP
