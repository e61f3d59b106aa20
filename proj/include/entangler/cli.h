// Copyright 2026 The Entangler Authors
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

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace entangler::cli {

inline constexpr std::string_view kVersion = "0.1.0";

/// Process exit statuses.
enum ExitStatus : int {
    kOk = 0,
    kError = 1,
    /// `evolve` finished its generation budget without reaching --target.
    kTargetMissed = 2,
    kUsage = 64,
    /// Circuit text failed to parse.
    kDataError = 65,
};

/// Reads a flat `key = value` config file. Blank lines and lines starting
/// with `#` are ignored. Throws std::runtime_error on unreadable files or
/// lines without '='.
std::map<std::string, std::string> read_flat_config(const std::string &path);

/// Runs one command line (args[0] is the program name). Normal output goes
/// to `out`, diagnostics to `err`; the return value is an ExitStatus.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace entangler::cli
