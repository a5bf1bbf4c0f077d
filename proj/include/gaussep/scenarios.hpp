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

#ifndef GAUSSEP_SCENARIOS_HPP
#define GAUSSEP_SCENARIOS_HPP

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "gaussep/gaussian_core.hpp"
#include "gaussep/separability.hpp"

namespace gaussep {

/// Two-mode squeezed vacuum with squeezing r, both modes damped at rate eta
/// into independent thermal baths of occupation nbar, after time t.
/// Only the product eta * t enters.
struct ThermalScenario {
    double r = 0;
    double eta = 1;
    double nbar = 0;
    double t = 0;
};

/// n = m = cosh 2r, c = -c' = sinh 2r.
CorrelationMatrix tmsv_matrix(double r);

/// n = m = cosh(2r) e^{-2 eta t} + (2 nbar + 1)(1 - e^{-2 eta t}),
/// c = -c' = sinh(2r) e^{-2 eta t}.
CorrelationMatrix evolve_thermal(const ThermalScenario &s);

/// Entanglement never disappears.
struct InfiniteTime {};
using ThresholdTime = std::variant<double, InfiniteTime>;

/// t* = ln(1 + (1 - e^{-2r}) / (2 nbar)) / (2 eta); InfiniteTime for nbar = 0.
ThresholdTime threshold_time(double r, double eta, double nbar);

/// (1 - e^{-2r}) / (4 eta nbar), the nbar >> 1 limit of `threshold_time`.
double large_nbar_threshold(double r, double eta, double nbar);

struct ScanPoint {
    double t;
    double margin;
    Decision decision;
};

/// Runs `decide_separability` on `resolution` evenly spaced times in [0, t_max].
std::vector<ScanPoint> scan_boundary(double r, double eta, double nbar, double t_max, int resolution,
                                     const DecisionOptions &options = {});

/// First consecutive pair of scan points whose margins change sign.
std::optional<std::pair<double, double>> sign_change_bracket(const std::vector<ScanPoint> &scan);

/// Bisects the zero of the pipeline margin in t. Requires nbar > 0.
double bisect_boundary_time(double r, double eta, double nbar, double t_tol = 1e-12);

}  // namespace gaussep

#endif
