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

#include "gaussep/error.hpp"

namespace gaussep {

const char *to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotFinite:
            return "NotFinite";
        case ErrorCode::NotSymmetric:
            return "NotSymmetric";
        case ErrorCode::NotPhysical:
            return "NotPhysical";
        case ErrorCode::InvalidLlubo:
            return "InvalidLlubo";
        case ErrorCode::ZeroCoefficient:
            return "ZeroCoefficient";
        case ErrorCode::NoPositiveRoot:
            return "NoPositiveRoot";
        case ErrorCode::DegenerateMode:
            return "DegenerateMode";
        case ErrorCode::RootNotBracketed:
            return "RootNotBracketed";
        case ErrorCode::DegenerateForm:
            return "DegenerateForm";
        case ErrorCode::NotInSeparableRegime:
            return "NotInSeparableRegime";
        case ErrorCode::InconsistentWitness:
            return "InconsistentWitness";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

GaussianError::GaussianError(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {
}

}  // namespace gaussep
