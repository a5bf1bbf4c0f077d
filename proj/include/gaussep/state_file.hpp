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

#ifndef GAUSSEP_STATE_FILE_HPP
#define GAUSSEP_STATE_FILE_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include "gaussep/gaussian_core.hpp"
#include "gaussep/separability.hpp"
#include "gaussep/standard_form.hpp"
#include <nlohmann/json.hpp>

namespace gaussep {

inline constexpr const char *kOrderingTag = "x1p1x2p2";
inline constexpr const char *kScalingTag = "vacuum-identity";

class StateFileError : public std::runtime_error {
   public:
    enum class Kind { NotFound, Parse, Write };
    StateFileError(Kind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {
    }
    Kind kind() const noexcept {
        return kind_;
    }

   private:
    Kind kind_;
};

/// Reads the `matrix`, `ordering` and `scaling` keys; other keys are ignored.
/// Does not check physicality.
Mat4 parse_state_json(const nlohmann::json &doc);
Mat4 parse_state_text(const std::string &text);
/// Parses and validates.
CorrelationMatrix load_state_file(const std::filesystem::path &path);

nlohmann::json state_to_json(const Mat4 &m);
nlohmann::json matrix_to_json(const Mat4 &m);
nlohmann::json llubo_to_json(const Llubo &op);
nlohmann::json form_to_json(const StandardFormI &form);
nlohmann::json form_to_json(const StandardFormII &form);
/// A state document (readable back as a state file) with a `verdict` member.
nlohmann::json verdict_to_json(const CorrelationMatrix &state, const SeparabilityVerdict &verdict);

}  // namespace gaussep

#endif
