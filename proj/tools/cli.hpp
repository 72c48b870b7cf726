// Copyright 2026 The parikh Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARIKH_TOOLS_CLI_HPP_
#define PARIKH_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace parikh::cli {

  // Exit codes shared by every subcommand.
  inline constexpr int exit_affirmative  = 0;
  inline constexpr int exit_negative     = 1;
  inline constexpr int exit_usage        = 2;
  inline constexpr int exit_inconclusive = 3;

  /// Runs the command line `args` (without the program name), writing
  /// results to `out` and diagnostics to `err`. Returns the exit code.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace parikh::cli

#endif  // PARIKH_TOOLS_CLI_HPP_
