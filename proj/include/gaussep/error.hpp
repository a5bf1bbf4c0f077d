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

#ifndef GAUSSEP_ERROR_HPP
#define GAUSSEP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gaussep {

enum class ErrorCode {
    NotFinite,
    NotSymmetric,
    NotPhysical,
    InvalidLlubo,
    ZeroCoefficient,
    NoPositiveRoot,
    DegenerateMode,
    RootNotBracketed,
    DegenerateForm,
    NotInSeparableRegime,
    InconsistentWitness,
    InvalidArgument,
};

const char *to_string(ErrorCode code);

/// Single exception type for the library; `code()` carries the failure kind.
class GaussianError : public std::runtime_error {
   public:
    GaussianError(ErrorCode code, const std::string &message);
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace gaussep

#endif
