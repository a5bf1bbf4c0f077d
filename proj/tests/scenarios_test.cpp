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

#include "gtest/gtest.h"

using namespace gaussep;

TEST(tmsv_matrix, layout) {
    Mat4 m = tmsv_matrix(0.5).matrix();
    EXPECT_DOUBLE_EQ(m(0, 0), 1.5430806348152437);
    EXPECT_DOUBLE_EQ(m(3, 3), 1.5430806348152437);
    EXPECT_DOUBLE_EQ(m(0, 2), 1.1752011936438014);
    EXPECT_DOUBLE_EQ(m(1, 3), -1.1752011936438014);
    EXPECT_EQ(m(0, 1), 0);
    EXPECT_EQ(tmsv_matrix(0).matrix(), Mat4::Identity());
    EXPECT_THROW(tmsv_matrix(-1), GaussianError);
}

TEST(evolve_thermal, examples) {
    EXPECT_EQ(evolve_thermal({1, 1, 1, 0}).matrix(), tmsv_matrix(1).matrix());
    Mat4 m = evolve_thermal({1, 1, 1, 0.1796526}).matrix();
    EXPECT_NEAR(m(0, 0), 3.5321354888263614, 1e-13);
    EXPECT_NEAR(m(0, 2), 2.532133359729114, 1e-13);
    EXPECT_NEAR(m(1, 3), -2.532133359729114, 1e-13);
    EXPECT_NEAR(m(0, 0) - m(0, 2), 1, 1e-5);
    EXPECT_THROW(evolve_thermal({1, 0, 1, 0.1}), GaussianError);
    EXPECT_THROW(evolve_thermal({1, 1, -1, 0.1}), GaussianError);
    EXPECT_THROW(evolve_thermal({1, 1, 1, -0.1}), GaussianError);
}

TEST(threshold_time, examples) {
    EXPECT_NEAR(std::get<double>(threshold_time(1, 1, 1)), 0.17965206772540482, 1e-15);
    EXPECT_NEAR(std::get<double>(threshold_time(1, 1, 100)), 0.002157002434651478, 1e-17);
    EXPECT_NEAR(large_nbar_threshold(1, 1, 100), 0.002161661791908468, 1e-17);
    EXPECT_TRUE(std::holds_alternative<InfiniteTime>(threshold_time(1, 1, 0)));
    EXPECT_THROW(threshold_time(0, 1, 1), GaussianError);
}

TEST(threshold_time, large_nbar_asymptote) {
    for (double nbar : {1e3, 1e4, 1e6}) {
        double exact = std::get<double>(threshold_time(0.7, 2, nbar));
        double approx = large_nbar_threshold(0.7, 2, nbar);
        EXPECT_LT(std::abs(exact - approx) / exact, 1.0 / nbar);
    }
}

TEST(scan_boundary, bracket_contains_threshold) {
    std::vector<ScanPoint> scan = scan_boundary(1, 1, 1, 0.5, 41);
    ASSERT_EQ(scan.size(), 41u);
    EXPECT_EQ(scan.front().t, 0);
    EXPECT_EQ(scan.back().t, 0.5);
    EXPECT_EQ(scan.front().decision, Decision::Entangled);
    EXPECT_EQ(scan.back().decision, Decision::Separable);
    auto bracket = sign_change_bracket(scan);
    ASSERT_TRUE(bracket.has_value());
    EXPECT_LE(bracket->first, 0.1796526);
    EXPECT_GE(bracket->second, 0.1796526);
    EXPECT_NEAR(bracket->second - bracket->first, 0.0125, 1e-15);
}

TEST(scan_boundary, zero_temperature_stays_entangled) {
    std::vector<ScanPoint> scan = scan_boundary(1, 1, 0, 5, 41);
    for (const auto &p : scan) {
        EXPECT_EQ(p.decision, Decision::Entangled) << "t " << p.t;
    }
    EXPECT_FALSE(sign_change_bracket(scan).has_value());
}

TEST(scan_boundary, beyond_threshold_all_separable) {
    std::vector<ScanPoint> scan = scan_boundary(1, 1, 1, 3, 30);
    for (const auto &p : scan) {
        if (p.t > 0.2) {
            EXPECT_EQ(p.decision, Decision::Separable) << "t " << p.t;
        }
    }
}

TEST(scan_boundary, rejects_bad_arguments) {
    EXPECT_THROW(scan_boundary(1, 1, 1, 0.5, 1), GaussianError);
    EXPECT_THROW(scan_boundary(1, 1, 1, 0, 10), GaussianError);
}

TEST(scan_boundary, margin_is_monotone) {
    for (double nbar : {0.0, 0.1, 1.0, 10.0}) {
        std::vector<ScanPoint> scan = scan_boundary(0.8, 0.5, nbar, 4, 200);
        for (size_t i = 1; i < scan.size(); ++i) {
            ASSERT_LT(scan[i].margin, scan[i - 1].margin) << "nbar " << nbar << " i " << i;
        }
    }
}

TEST(bisect_boundary_time, matches_closed_form) {
    for (double r : {0.25, 0.5, 1.0, 2.0}) {
        for (double eta : {0.5, 1.0}) {
            for (double nbar : {0.5, 1.0, 2.0}) {
                double closed = std::get<double>(threshold_time(r, eta, nbar));
                EXPECT_NEAR(bisect_boundary_time(r, eta, nbar), closed, 1e-6) << r << " " << eta << " " << nbar;
            }
        }
    }
}

TEST(symmetric_family, trivial_form_and_unit_witness) {
    for (double t : {0.0, 0.05, 0.1, 0.15}) {
        SeparabilityVerdict v = decide_separability(evolve_thermal({1, 1, 1, t}));
        EXPECT_DOUBLE_EQ(v.form.r1, 1);
        EXPECT_DOUBLE_EQ(v.form.r2, 1);
        EXPECT_DOUBLE_EQ(v.witness.a, 1);
        EXPECT_EQ(v.decision, Decision::Entangled);
    }
}
