// Copyright 2026 The mpcc Authors
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

#ifndef MPCC_CLI_HPP
#define MPCC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mpcc {

struct CliEnv {
  bool color = false;  // text reports may use ANSI color; MPCC_NO_COLOR still wins
};

/// Runs one invocation. `args` excludes the program name. Returns the exit
/// code: 0 success (scan: no findings), 1 scan findings, 2 usage or IO error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
            const CliEnv &env = {});

}  // namespace mpcc

#endif  // MPCC_CLI_HPP
