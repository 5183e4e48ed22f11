// Copyright 2026 The tmcf Authors
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

// Command-line front end. Everything goes through run_cli so tests can drive
// it without spawning processes.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tmcf::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Inclusive range "a..b" or a single value; throws std::invalid_argument.
struct Range {
  long first = 0;
  long last = 0;
  std::vector<long> values() const;
};
Range parse_range(const std::string& text, long min_value);

}  // namespace tmcf::cli
