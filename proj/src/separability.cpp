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

#include "gaussep/separability.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace gaussep {

const char *to_string(Decision decision) {
    switch (decision) {
        case Decision::Entangled:
            return "entangled";
        case Decision::Separable:
            return "separable";
        case Decision::Boundary:
            return "boundary";
    }
    return "unknown";
}

Theorem1Result theorem1_check(const CorrelationMatrix &state, const EprPair &pair, double eps_decide) {
    double total = variance_pair(state, pair);
    double bound = pair.separable_bound();
    return Theorem1Result{total < bound - eps_decide, total, bound};
}

EprPair construct_epr_pair(const StandardFormII &form) {
    if (form.degenerate || form.n1 - 1 <= kEpsForm || form.m1 - 1 <= kEpsForm) {
        throw GaussianError(ErrorCode::DegenerateForm, "witness coefficient undefined for a mode at vacuum purity");
    }
    if (std::abs(form.c1) < kEpsForm) {
        throw GaussianError(ErrorCode::DegenerateForm, "witness sign undefined for vanishing c1");
    }
    // Both ratios define a0^4; compare them cross-multiplied.
    double lhs = (form.m1 - 1) * (form.n2 - 1);
    double rhs = (form.m2 - 1) * (form.n1 - 1);
    if (std::abs(lhs - rhs) > kEpsForm * std::max({1.0, std::abs(lhs), std::abs(rhs)})) {
        std::ostringstream msg;
        msg << "witness coefficient ratios disagree: " << lhs << " vs " << rhs;
        throw GaussianError(ErrorCode::InconsistentWitness, msg.str());
    }
    double a0 = std::pow((form.m1 - 1) / (form.n1 - 1), 0.25);
    // sgn(0) is taken as +1 for c2; the sign multiplies a zero entry then.
    return EprPair{a0, form.c1 > 0 ? -1 : +1, form.c2 >= 0 ? -1 : +1};
}

Mat4 PRepresentation::reconstruct() const {
    return congruence(2 * covariance + Mat4::Identity(), transform_back);
}

PRepresentation p_representation(const StandardFormII &form) {
    Mat4 excess = form.matrix() - Mat4::Identity();
    double tol = kEpsPsd * std::max(1.0, form.matrix().diagonal().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Mat4> solver(excess);
    Eigen::Vector4d values = solver.eigenvalues();
    if (values.minCoeff() < -tol) {
        std::ostringstream msg;
        msg << "M_II - I has eigenvalue " << values.minCoeff() << "; no positive P-distribution";
        throw GaussianError(ErrorCode::NotInSeparableRegime, msg.str());
    }
    for (int i = 0; i < 4; ++i) {
        if (values(i) < tol) {
            values(i) = 0;
        }
    }
    PRepresentation rep;
    Mat4 cov = 0.5 * solver.eigenvectors() * values.asDiagonal() * solver.eigenvectors().transpose();
    rep.covariance = 0.5 * (cov + cov.transpose());
    rep.transform_back = form.transform.inverse();
    return rep;
}

SeparabilityVerdict decide_separability(const CorrelationMatrix &state, const DecisionOptions &options) {
    SeparabilityVerdict verdict;
    verdict.form = to_standard_form_II(state);
    verdict.invariants = llubo_invariants(state);
    const StandardFormII &form = verdict.form;
    Mat4 reduced = form.matrix();

    Eigen::SelfAdjointEigenSolver<Mat4> solver(reduced - Mat4::Identity(), Eigen::EigenvaluesOnly);
    verdict.min_eigenvalue = solver.eigenvalues().minCoeff();

    bool optimal = !form.degenerate && form.n1 - 1 > kEpsForm && form.m1 - 1 > kEpsForm &&
                   std::abs(form.c1) >= kEpsForm;
    if (optimal) {
        verdict.witness = construct_epr_pair(form);
    } else {
        verdict.witness = EprPair{1.0, form.c1 > 0 ? -1 : +1, form.c2 >= 0 ? -1 : +1};
    }
    verdict.witness_is_optimal = optimal;
    verdict.total_variance = variance_pair(reduced, verdict.witness);
    verdict.bound = verdict.witness.separable_bound();
    verdict.margin = verdict.bound - verdict.total_variance;

    double eps = options.eps_decide;
    double lowest = verdict.min_eigenvalue;
    if (lowest > eps) {
        verdict.decision = Decision::Separable;
    } else if (lowest < -eps) {
        verdict.decision = Decision::Entangled;
    } else {
        double psd_tol = kEpsPsd * std::max(1.0, reduced.diagonal().maxCoeff());
        bool uncorrelated = std::max(std::abs(form.c1), std::abs(form.c2)) < kEpsForm;
        verdict.decision = uncorrelated && lowest >= -psd_tol ? Decision::Separable : Decision::Boundary;
    }

    if (optimal && std::abs(lowest) > eps && std::abs(verdict.margin) > eps &&
        (verdict.margin > 0) != (lowest < 0)) {
        std::ostringstream msg;
        msg << "witness margin " << verdict.margin << " disagrees with min eigenvalue " << lowest;
        throw GaussianError(ErrorCode::InconsistentWitness, msg.str());
    }

    if (verdict.decision == Decision::Separable) {
        verdict.certificate = p_representation(form);
    }
    return verdict;
}

}  // namespace gaussep
