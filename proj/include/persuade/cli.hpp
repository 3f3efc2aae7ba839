// Copyright 2026 The persuade-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERSUADE_CLI_HPP_
#define PERSUADE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace persuade::cli {

// Dispatches one CLI invocation (without the program name). Returns the
// process exit code: 0 on success, 1 on parse/validation failure, 2 when a
// golden check reports a mismatch. Output is deterministic for a fixed
// scenario, seed and flags.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

// Fixed-precision float rendering shared by all report writers.
std::string fmt_g(double v);

// RFC 4180 field quoting.
std::string csv_escape(const std::string& field);

}  // namespace persuade::cli

#endif  // PERSUADE_CLI_HPP_
