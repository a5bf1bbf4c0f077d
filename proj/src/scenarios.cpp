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

#include "gaussep/scenarios.hpp"

#include <cmath>

#include "gaussep/error.hpp"

namespace gaussep {

namespace {

void check_scenario(double r, double eta, double nbar) {
    if (!(r >= 0) || !std::isfinite(r)) {
        throw GaussianError(ErrorCode::InvalidArgument, "squeezing r must be finite and >= 0");
    }
    if (!(eta > 0) || !std::isfinite(eta)) {
        throw GaussianError(ErrorCode::InvalidArgument, "damping eta must be finite and > 0");
    }
    if (!(nbar >= 0) || !std::isfinite(nbar)) {
        throw GaussianError(ErrorCode::InvalidArgument, "thermal occupation nbar must be finite and >= 0");
    }
}

Mat4 symmetric_layout(double n, double c) {
    Mat4 m = Mat4::Zero();
    m.diagonal().setConstant(n);
    m(0, 2) = m(2, 0) = c;
    m(1, 3) = m(3, 1) = -c;
    return m;
}

}  // namespace

CorrelationMatrix tmsv_matrix(double r) {
    if (!(r >= 0) || !std::isfinite(r)) {
        throw GaussianError(ErrorCode::InvalidArgument, "squeezing r must be finite and >= 0");
    }
    return validate(symmetric_layout(std::cosh(2 * r), std::sinh(2 * r)));
}

CorrelationMatrix evolve_thermal(const ThermalScenario &s) {
    check_scenario(s.r, s.eta, s.nbar);
    if (!(s.t >= 0) || !std::isfinite(s.t)) {
        throw GaussianError(ErrorCode::InvalidArgument, "time t must be finite and >= 0");
    }
    double decay = std::exp(-2 * s.eta * s.t);
    double n = std::cosh(2 * s.r) * decay + (2 * s.nbar + 1) * -std::expm1(-2 * s.eta * s.t);
    double c = std::sinh(2 * s.r) * decay;
    return validate(symmetric_layout(n, c));
}

ThresholdTime threshold_time(double r, double eta, double nbar) {
    check_scenario(r, eta, nbar);
    if (!(r > 0)) {
        throw GaussianError(ErrorCode::InvalidArgument, "threshold needs r > 0");
    }
    if (nbar == 0) {
        return InfiniteTime{};
    }
    return std::log1p(-std::expm1(-2 * r) / (2 * nbar)) / (2 * eta);
}

double large_nbar_threshold(double r, double eta, double nbar) {
    check_scenario(r, eta, nbar);
    if (!(nbar > 0)) {
        throw GaussianError(ErrorCode::InvalidArgument, "asymptote needs nbar > 0");
    }
    return -std::expm1(-2 * r) / (4 * eta * nbar);
}

std::vector<ScanPoint> scan_boundary(double r, double eta, double nbar, double t_max, int resolution,
                                     const DecisionOptions &options) {
    check_scenario(r, eta, nbar);
    if (resolution < 2) {
        throw GaussianError(ErrorCode::InvalidArgument, "scan resolution must be at least 2");
    }
    if (!(t_max > 0) || !std::isfinite(t_max)) {
        throw GaussianError(ErrorCode::InvalidArgument, "t_max must be finite and > 0");
    }
    std::vector<ScanPoint> out;
    out.reserve(resolution);
    for (int i = 0; i < resolution; ++i) {
        double t = t_max * i / (resolution - 1);
        SeparabilityVerdict v = decide_separability(evolve_thermal({r, eta, nbar, t}), options);
        out.push_back({t, v.margin, v.decision});
    }
    return out;
}

std::optional<std::pair<double, double>> sign_change_bracket(const std::vector<ScanPoint> &scan) {
    for (size_t i = 1; i < scan.size(); ++i) {
        if ((scan[i - 1].margin > 0) != (scan[i].margin > 0)) {
            return std::make_pair(scan[i - 1].t, scan[i].t);
        }
    }
    return std::nullopt;
}

double bisect_boundary_time(double r, double eta, double nbar, double t_tol) {
    check_scenario(r, eta, nbar);
    if (!(nbar > 0) || !(r > 0)) {
        throw GaussianError(ErrorCode::InvalidArgument, "a finite boundary needs r > 0 and nbar > 0");
    }
    auto margin = [&](double t) { return decide_separability(evolve_thermal({r, eta, nbar, t})).margin; };
    double lo = 0;
    double hi = 1 / eta;
    int doublings = 0;
    while (margin(hi) > 0) {
        if (++doublings > 200) {
            throw GaussianError(ErrorCode::RootNotBracketed, "margin never turns negative");
        }
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > t_tol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (margin(mid) > 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace gaussep
