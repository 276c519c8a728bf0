// Copyright 2026 The nlqubit Authors
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
#include <string_view>
#include <vector>

#include "nlqubit/scenarios.hpp"

namespace nlqubit::cli {

enum ExitCode : int { kSuccess = 0, kNumericalFailure = 1, kUsageError = 2 };

/// lo:hi:n from --sweep-*.
struct SweepRange {
  double lo = 0.0;
  double hi = 0.0;
  int n = 0;
};

/// Throws std::invalid_argument unless text is lo:hi:n with finite lo < hi
/// and integer n >= 2.
SweepRange parse_sweep_range(std::string_view text);

/// Comma-separated scheme list. Throws std::invalid_argument on an empty
/// list or an unknown entry.
std::vector<SchemeSpec> parse_scheme_list(std::string_view text);

/// %.12g with negative zero printed as 0.
std::string format_value(double v);

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlqubit::cli
