// Copyright 2026 The nmrlogic Authors
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
#include <string>
#include <vector>

namespace nmrlogic::cli {

enum ExitCode : int {
  kOk = 0,
  kSelfCheckFailed = 1,
  kUsageError = 2,
};

/// Runs one command line. `args` excludes the program name. Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "x0,x1,..." or "start:stop:n" (n inclusive samples). Throws
/// std::invalid_argument on malformed or empty input.
std::vector<double> parse_grid(const std::string& spec);

/// 12 significant digits, '.' separator, negative zero printed as 0.
std::string format_real(double v);

}  // namespace nmrlogic::cli
