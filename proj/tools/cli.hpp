// Copyright 2026 The pathguard Authors
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

#ifndef PATHGUARD_TOOLS_CLI_HPP_
#define PATHGUARD_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace pathguard::cli {

enum ExitStatus : int {
  kAllowed = 0,
  kDenied = 1,
  kUsageError = 2,
};

// Runs `pathguard <args...>` (program name excluded). Results go to `out`,
// diagnostics to `err`; nothing is written until the command has finished.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pathguard::cli

#endif  // PATHGUARD_TOOLS_CLI_HPP_
