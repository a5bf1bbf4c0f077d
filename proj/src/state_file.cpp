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

#include "gaussep/state_file.hpp"

#include <fstream>
#include <sstream>

namespace gaussep {

using nlohmann::json;

Mat4 parse_state_json(const json &doc) {
    if (!doc.is_object()) {
        throw StateFileError(StateFileError::Kind::Parse, "state file must be a JSON object");
    }
    for (const char *key : {"matrix", "ordering", "scaling"}) {
        if (!doc.contains(key)) {
            throw StateFileError(StateFileError::Kind::Parse, std::string("missing key '") + key + "'");
        }
    }
    if (!doc["ordering"].is_string() || doc["ordering"].get<std::string>() != kOrderingTag) {
        throw StateFileError(StateFileError::Kind::Parse,
                             std::string("ordering must be the literal \"") + kOrderingTag + "\"");
    }
    if (!doc["scaling"].is_string() || doc["scaling"].get<std::string>() != kScalingTag) {
        throw StateFileError(StateFileError::Kind::Parse,
                             std::string("scaling must be the literal \"") + kScalingTag + "\"");
    }
    const json &rows = doc["matrix"];
    if (!rows.is_array() || rows.size() != 4) {
        throw StateFileError(StateFileError::Kind::Parse, "matrix must be a 4x4 array");
    }
    Mat4 m;
    for (int i = 0; i < 4; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 4) {
            throw StateFileError(StateFileError::Kind::Parse, "matrix must be a 4x4 array");
        }
        for (int j = 0; j < 4; ++j) {
            if (!rows[i][j].is_number()) {
                throw StateFileError(StateFileError::Kind::Parse, "matrix entries must be numbers");
            }
            m(i, j) = rows[i][j].get<double>();
        }
    }
    return m;
}

Mat4 parse_state_text(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw StateFileError(StateFileError::Kind::Parse, e.what());
    }
    return parse_state_json(doc);
}

CorrelationMatrix load_state_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw StateFileError(StateFileError::Kind::NotFound, "cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return validate(parse_state_text(buffer.str()));
}

json matrix_to_json(const Mat4 &m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        rows.push_back({m(i, 0), m(i, 1), m(i, 2), m(i, 3)});
    }
    return rows;
}

json state_to_json(const Mat4 &m) {
    return json{{"matrix", matrix_to_json(m)}, {"ordering", kOrderingTag}, {"scaling", kScalingTag}};
}

json llubo_to_json(const Llubo &op) {
    auto block = [](const Mat2 &h) { return json::array({{h(0, 0), h(0, 1)}, {h(1, 0), h(1, 1)}}); };
    return json{{"h1", block(op.h1())}, {"h2", block(op.h2())}};
}

json form_to_json(const StandardFormI &form) {
    return json{{"n", form.n}, {"m", form.m}, {"c", form.c}, {"c_prime", form.c_prime},
                {"transform", llubo_to_json(form.transform)}};
}

json form_to_json(const StandardFormII &form) {
    return json{{"n1", form.n1},
                {"n2", form.n2},
                {"m1", form.m1},
                {"m2", form.m2},
                {"c1", form.c1},
                {"c2", form.c2},
                {"r1", form.r1},
                {"r2", form.r2},
                {"swapped_modes", form.swapped_modes},
                {"degenerate", form.degenerate},
                {"residual_ratio_condition", form.ratio_condition_residual()},
                {"residual_balance_condition", form.balance_condition_residual()},
                {"residual_squeeze_ratio", form.residual_ratio},
                {"residual_squeeze_balance", form.residual_balance},
                {"transform", llubo_to_json(form.transform)}};
}

json verdict_to_json(const CorrelationMatrix &state, const SeparabilityVerdict &verdict) {
    json doc = state_to_json(state.matrix());
    json v{{"decision", to_string(verdict.decision)},
           {"total_variance", verdict.total_variance},
           {"bound", verdict.bound},
           {"margin", verdict.margin},
           {"min_eigenvalue", verdict.min_eigenvalue},
           {"witness",
            {{"a", verdict.witness.a},
             {"sign_u", verdict.witness.sign_u},
             {"sign_v", verdict.witness.sign_v},
             {"optimal", verdict.witness_is_optimal}}},
           {"invariants",
            {{"det_g1", verdict.invariants.det_g1},
             {"det_g2", verdict.invariants.det_g2},
             {"det_c", verdict.invariants.det_c},
             {"det_m", verdict.invariants.det_m}}},
           {"standard_form_II", form_to_json(verdict.form)}};
    if (verdict.certificate) {
        v["certificate"] = json{{"covariance", matrix_to_json(verdict.certificate->covariance)},
                                {"transform_back", llubo_to_json(verdict.certificate->transform_back)}};
    } else {
        v["certificate"] = nullptr;
    }
    doc["verdict"] = std::move(v);
    return doc;
}

}  // namespace gaussep
