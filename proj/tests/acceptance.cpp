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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "gaussep/oracle.hpp"
#include "gaussep/scenarios.hpp"
#include "gaussep/separability.hpp"
#include "gaussep/standard_form.hpp"

using namespace gaussep;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double max_abs_diff(const Mat4 &a, const Mat4 &b) { return (a - b).cwiseAbs().maxCoeff(); }

int failures = 0;

void report(int id, const char *title, bool pass, const std::string &detail) {
    std::printf("criterion %d [%s] %s: %s\n", id, pass ? "PASS" : "FAIL", title, detail.c_str());
    std::fflush(stdout);
    failures += !pass;
}

std::string fmt(const char *format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

constexpr int kSeeds = 10000;

// Shared by criteria 1 and 7: the separable verdicts of the physical sweep.
std::vector<std::uint64_t> separable_seeds;

void criterion_1() {
    auto start = Clock::now();
    int compared = 0;
    int boundary = 0;
    int mismatches = 0;
    std::string first_bad = "none";
    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
        CorrelationMatrix s = sample_random_physical(seed);
        Decision a = decide_separability(s).decision;
        Decision b = ppt_decision(s);
        if (a == Decision::Separable) {
            separable_seeds.push_back(seed);
        }
        if (a == Decision::Boundary || b == Decision::Boundary) {
            ++boundary;
            continue;
        }
        ++compared;
        if (a != b) {
            ++mismatches;
            if (first_bad == "none") {
                first_bad = std::to_string(seed);
            }
        }
    }
    double elapsed = seconds_since(start);
    bool pass = mismatches == 0 && elapsed < 30;
    report(1, "decision agrees with partial-transpose oracle", pass,
           fmt("%d/%d agree, %d boundary excluded, first mismatch seed %s, %.2f s (limit 30 s)",
               compared - mismatches, compared, boundary, first_bad.c_str(), elapsed));
}

void criterion_2() {
    int violations = 0;
    int checks = 0;
    double worst = -INFINITY;
    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
        CorrelationMatrix s = ensemble_covariance(sample_separable_ensemble(seed, 10));
        for (int k = -8; k <= 8; ++k) {
            double a = std::pow(8.0, k / 8.0);
            for (int sign : {-1, 1}) {
                Theorem1Result r = theorem1_check(s, EprPair{a, sign, -sign}, kEpsDecide);
                ++checks;
                violations += r.violated;
                worst = std::max(worst, r.bound - r.total_variance);
            }
        }
    }
    report(2, "separable ensembles satisfy the total-variance bound", violations == 0,
           fmt("%d violations in %d checks, largest bound - variance %.3e (band %.0e)", violations, checks, worst,
               kEpsDecide));
}

void criterion_3() {
    double worst = 0;
    int points = 0;
    for (double r : {0.25, 0.5, 1.0, 2.0}) {
        for (double eta : {0.5, 1.0}) {
            for (double nbar : {0.5, 1.0, 2.0}) {
                double closed = std::get<double>(threshold_time(r, eta, nbar));
                worst = std::max(worst, std::abs(bisect_boundary_time(r, eta, nbar) - closed));
                ++points;
            }
        }
    }
    report(3, "bisected boundary time matches closed form", points == 24 && worst < 1e-6,
           fmt("%d grid points, max deviation %.3e (limit 1e-6)", points, worst));
}

void criterion_4() {
    const int steps = 2001;
    int total = 0;
    int entangled = 0;
    std::string tally;
    for (double r : {0.25, 1.0, 2.0}) {
        int boundary = 0;
        int separable = 0;
        double first_boundary = NAN;
        double first_separable = NAN;
        for (int i = 0; i < steps; ++i) {
            double t = 20.0 * i / (steps - 1);
            Decision d = decide_separability(evolve_thermal({r, 1.0, 0.0, t})).decision;
            ++total;
            if (d == Decision::Entangled) {
                ++entangled;
            } else if (d == Decision::Boundary) {
                boundary += 1;
                first_boundary = std::isnan(first_boundary) ? t : first_boundary;
            } else {
                separable += 1;
                first_separable = std::isnan(first_separable) ? t : first_separable;
            }
        }
        tally += fmt("; r=%.2f: %d boundary from eta*t=%.2f, %d separable from eta*t=%.2f", r, boundary,
                     first_boundary, separable, first_separable);
    }
    report(4, "vacuum bath keeps squeezed states entangled", entangled == total,
           fmt("%d/%d entangled for eta*t in [0, 20]", entangled, total) + tally);
}

void criterion_5() {
    double worst = 0;
    for (double r : {0.1, 0.5, 1.0, 2.0}) {
        CorrelationMatrix s = tmsv_matrix(r);
        SeparabilityVerdict v = decide_separability(s);
        double total = variance_pair(s, v.witness);
        worst = std::max(worst, std::abs(total - 2 * std::exp(-2 * r)));
    }
    report(5, "two-mode squeezed vacuum variance equals 2 exp(-2r)", worst < 1e-10,
           fmt("max deviation %.3e (limit 1e-10)", worst));
}

void criterion_6() {
    double worst_cond = 0;
    double worst_root = 0;
    double worst_inv = 0;
    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
        CorrelationMatrix s = sample_random_physical(seed);
        LluboInvariants before = llubo_invariants(s);
        StandardFormI one = to_standard_form_I(s);
        StandardFormII two = to_standard_form_II(s);
        worst_cond = std::max({worst_cond, std::abs(two.ratio_condition_residual()),
                               std::abs(two.balance_condition_residual())});
        worst_root = std::max({worst_root, std::abs(two.residual_ratio), std::abs(two.residual_balance)});
        for (const Mat4 &m : {one.matrix(), two.matrix()}) {
            LluboInvariants after = llubo_invariants(m);
            double pairs[4][2] = {{before.det_g1, after.det_g1},
                                  {before.det_g2, after.det_g2},
                                  {before.det_c, after.det_c},
                                  {before.det_m, after.det_m}};
            for (auto &p : pairs) {
                double scale = std::max({1.0, std::abs(p[0]), std::abs(p[1])});
                worst_inv = std::max(worst_inv, std::abs(p[0] - p[1]) / scale);
            }
        }
    }
    bool pass = worst_cond < 1e-8 && worst_root < 1e-10 && worst_inv < 1e-9;
    report(6, "standard forms satisfy their defining conditions", pass,
           fmt("form conditions %.3e (limit 1e-8), squeeze equations %.3e (limit 1e-10), invariants %.3e "
               "relative (limit 1e-9)",
               worst_cond, worst_root, worst_inv));
}

void criterion_7() {
    double worst_analytic = 0;
    for (std::uint64_t seed : separable_seeds) {
        CorrelationMatrix s = sample_random_physical(seed);
        SeparabilityVerdict v = decide_separability(s);
        worst_analytic = std::max(worst_analytic, max_abs_diff(v.certificate->reconstruct(), s.matrix()));
    }
    double worst_mc = 0;
    int sampled = 0;
    size_t stride = std::max<size_t>(1, separable_seeds.size() / 10);
    for (size_t i = 0; i < separable_seeds.size() && sampled < 10; i += stride, ++sampled) {
        CorrelationMatrix s = sample_random_physical(separable_seeds[i]);
        SeparabilityVerdict v = decide_separability(s);
        CorrelationMatrix mc = reconstruct_from_p_samples(*v.certificate, 1000000, separable_seeds[i]);
        worst_mc = std::max(worst_mc, max_abs_diff(mc.matrix(), s.matrix()));
    }
    bool pass = !separable_seeds.empty() && worst_analytic < 1e-8 && sampled == 10 && worst_mc < 5e-2;
    report(7, "P-certificates reconstruct separable states", pass,
           fmt("%zu analytic reconstructions, max error %.3e (limit 1e-8); %d Monte Carlo runs of 1e6, max error "
               "%.3e (limit 5e-2)",
               separable_seeds.size(), worst_analytic, sampled, worst_mc));
}

}  // namespace

int main() {
    auto start = Clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    double elapsed = seconds_since(start);
    report(8, "full acceptance run fits the desk-scale budget", elapsed < 120,
           fmt("%.2f s on one core (limit 120 s)", elapsed));
    std::printf("acceptance: %d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
