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

#include "gaussep/oracle.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace gaussep;
using gaussep::testing::max_abs_diff;
using gaussep::testing::symmetric_layout;

namespace {

const double kCosh1 = 1.5430806348152437;
const double kSinh1 = 1.1752011936438014;

SingleModeGaussian coherent(double x, double p) {
    SingleModeGaussian g;
    g.mean_x = x;
    g.mean_p = p;
    return g;
}

}  // namespace

TEST(ppt, examples) {
    CorrelationMatrix vac = validate(Mat4::Identity());
    EXPECT_NEAR(ppt_min_eigenvalue(vac), 0, 1e-15);
    EXPECT_EQ(ppt_decision(vac), Decision::Separable);

    CorrelationMatrix tmsv = validate(symmetric_layout(kCosh1, kCosh1, kSinh1, -kSinh1));
    EXPECT_NEAR(ppt_min_eigenvalue(tmsv), -0.6321205588285581, 1e-14);
    EXPECT_EQ(ppt_decision(tmsv), Decision::Entangled);

    CorrelationMatrix thermal = validate(3 * Mat4::Identity());
    EXPECT_NEAR(ppt_min_eigenvalue(thermal), 2, 1e-14);
    EXPECT_EQ(ppt_decision(thermal), Decision::Separable);
}

TEST(sampler, deterministic_and_valid) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Mat4 a = sample_random_physical(seed).matrix();
        Mat4 b = sample_random_physical(seed).matrix();
        ASSERT_EQ(a, b);
        ASSERT_GE(min_uncertainty_eigenvalue(a), -1e-9 * a.diagonal().maxCoeff());

        SeparableEnsemble e1 = sample_separable_ensemble(seed, 10);
        SeparableEnsemble e2 = sample_separable_ensemble(seed, 10);
        ASSERT_EQ(e1.components.size(), e2.components.size());
        ASSERT_EQ(ensemble_covariance(e1).matrix(), ensemble_covariance(e2).matrix());
        ASSERT_LE(e1.components.size(), 10u);
        ASSERT_NO_THROW(check_ensemble(e1));
    }
    EXPECT_NE(sample_random_physical(1).matrix(), sample_random_physical(2).matrix());
}

TEST(sampler, covers_both_classes) {
    int entangled = 0;
    int separable = 0;
    const int total = 10000;
    for (std::uint64_t seed = 0; seed < total; ++seed) {
        Decision d = ppt_decision(sample_random_physical(seed));
        entangled += d == Decision::Entangled;
        separable += d == Decision::Separable;
    }
    EXPECT_GE(entangled, total / 10);
    EXPECT_GE(separable, total / 10);
}

TEST(ensemble, two_component_classical_correlation) {
    const double d = 0.5;
    SeparableEnsemble e;
    e.components.push_back({0.5, coherent(d, 0), coherent(-d, 0)});
    e.components.push_back({0.5, coherent(-d, 0), coherent(d, 0)});
    CorrelationMatrix s = ensemble_covariance(e);
    Mat4 expected = Mat4::Identity();
    expected(0, 0) = 1.5;
    expected(2, 2) = 1.5;
    expected(0, 2) = expected(2, 0) = -0.5;
    EXPECT_LT(max_abs_diff(s.matrix(), expected), 1e-15);
    // M - I is singular, so the state sits on the boundary. The reduction
    // root is tangential there and only resolved to about sqrt(machine eps).
    SeparabilityVerdict v = decide_separability(s);
    EXPECT_EQ(v.decision, Decision::Boundary);
    EXPECT_LT(std::abs(v.min_eigenvalue), 1e-7);
    EXPECT_NE(ppt_decision(s), Decision::Entangled);
}

TEST(ensemble, rejects_bad_weights) {
    SeparableEnsemble e;
    EXPECT_THROW(check_ensemble(e), GaussianError);
    e.components.push_back({0.4, coherent(0, 0), coherent(0, 0)});
    EXPECT_THROW(check_ensemble(e), GaussianError);
    e.components.push_back({0.6, coherent(0, 0), coherent(0, 0)});
    EXPECT_NO_THROW(check_ensemble(e));
    e.components.back().mode1.covariance = 0.5 * Mat2::Identity();
    EXPECT_THROW(check_ensemble(e), GaussianError);
}

TEST(ensemble, property_never_entangled) {
    for (std::uint64_t seed = 0; seed < 5000; ++seed) {
        CorrelationMatrix s = ensemble_covariance(sample_separable_ensemble(seed, 10));
        ASSERT_NE(decide_separability(s).decision, Decision::Entangled) << "seed " << seed;
        ASSERT_NE(ppt_decision(s), Decision::Entangled) << "seed " << seed;
    }
}

TEST(p_samples, point_mass_is_exact) {
    PRepresentation cert;
    CorrelationMatrix s = reconstruct_from_p_samples(cert, 1000, 7);
    EXPECT_EQ(s.matrix(), Mat4::Identity());
    EXPECT_THROW(reconstruct_from_p_samples(cert, 999, 7), GaussianError);
}

TEST(p_samples, separable_form_within_tolerance) {
    CorrelationMatrix s = validate(symmetric_layout(2.5, 2, 0.8, -0.6));
    SeparabilityVerdict v = decide_separability(s);
    ASSERT_EQ(v.decision, Decision::Separable);
    ASSERT_TRUE(v.certificate.has_value());
    CorrelationMatrix sampled = reconstruct_from_p_samples(*v.certificate, 1000000, 11);
    EXPECT_LT(max_abs_diff(sampled.matrix(), s.matrix()), 5e-2);
}

TEST(ppt, property_agrees_with_decision) {
    int compared = 0;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        CorrelationMatrix s = sample_random_physical(seed);
        Decision a = decide_separability(s).decision;
        Decision b = ppt_decision(s);
        if (a == Decision::Boundary || b == Decision::Boundary) {
            continue;
        }
        ++compared;
        ASSERT_EQ(a, b) << "seed " << seed;
    }
    EXPECT_GT(compared, 9900);
}
