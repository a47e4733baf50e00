// Copyright 2026 The statdisc Authors
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

// Command-line front end, kept in a library so tests can drive it in-process.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace statdisc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kInternalError = 2,
  kUsage = 64,
  kCapacity = 65,
};

/// Reproduction rows whose |computed - reference| exceeds this fail the run.
inline constexpr double kReproductionTolerance = 1e-10;

/// "p/q" with q <= 64 when `value` is within 1e-12 of it.
std::optional<std::string> nearest_fraction(double value);

/// `value` rounded to 15 significant digits.
double round_significant(double value);

/// Parses `args` (without the program name), runs the command, and writes the
/// report to `out` or to --out. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace statdisc::cli
