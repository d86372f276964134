// Copyright 2026 The prngforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRNGFORGE_CLI_HPP_
#define PRNGFORGE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace prngforge::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // I/O failure, budget violation
inline constexpr int kExitUsage = 2;    // invalid flags or combinations
inline constexpr int kExitTestFailed = 3;

/// Runs `prngforge <args...>` (args excludes the program name). Data goes to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace prngforge::cli

#endif  // PRNGFORGE_CLI_HPP_
