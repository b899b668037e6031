// Copyright 2026 The qroute Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qroute::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInfeasible = 2,
  kResource = 3,
};

/// Runs the command line `args` (without the program name).
///
///   solve INSTANCE [--algo auto|exact|fpt|disjoint] [--budget N] [-o OUT]
///                  [--expand] [--no-timing]
///   verify INSTANCE SOLUTION
///   gen ola --edges "1-2,..." --k K [--vertices "1,2,..."] [--seed S]
///           [-o OUT] [--witness OUT] [--expand]
///   gen vc --edges "1-2,..." [--vertices ...] [--seed S] [-o OUT]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qroute::cli
