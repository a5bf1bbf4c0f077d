// Copyright 2026 The gaussep Authors
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

#ifndef GAUSSEP_CLI_HPP
#define GAUSSEP_CLI_HPP

#include <ostream>

namespace gaussep::cli {

/// Process exit codes. `check` maps the verdict onto 0-2.
enum ExitCode : int {
    kSeparable = 0,
    kEntangled = 1,
    kBoundary = 2,
    kUsage = 3,
    kFileNotFound = 4,
    kParseError = 5,
    kInvalidState = 6,
    kWriteError = 7,
    kNumericalFailure = 8,
};

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace gaussep::cli

#endif
