// Copyright 2026 The wfemu Authors.
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

namespace wfemu::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kCapacity = 3 };

/// Environment variables consulted for defaults.
inline constexpr const char *kEnvFormat = "WFEMU_FORMAT";
inline constexpr const char *kEnvOutDir = "WFEMU_OUT_DIR";

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Parses "3..17", "5" or "3,5,8" into an ascending list.
std::vector<int> parse_range(const std::string &text);

} // namespace wfemu::cli
