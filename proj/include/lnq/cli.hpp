// Copyright 2026 The LNQ Authors
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

#ifndef LNQ_CLI_HPP_
#define LNQ_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace lnq {

// The qec command line: subcommands codes, build, verify, table, simulate,
// params. Reports go to `out` (JSON with --json), diagnostics to `err`.
// Exit status: 0 success, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lnq

#endif  // LNQ_CLI_HPP_
