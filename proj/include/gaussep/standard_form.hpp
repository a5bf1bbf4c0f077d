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

#ifndef GAUSSEP_STANDARD_FORM_HPP
#define GAUSSEP_STANDARD_FORM_HPP

#include "gaussep/gaussian_core.hpp"

namespace gaussep {

inline constexpr double kEpsForm = 1e-8;
inline constexpr double kEpsRoot = 1e-10;

/// Signed singular value decomposition of a 2x2 matrix with proper rotations:
/// a = rotation2(left) * diag(s1, s2) * rotation2(right), s1 >= |s2|.
/// s2 carries the sign of det(a).
struct SignedSvd2 {
    double left;
    double right;
    double s1;
    double s2;
};
SignedSvd2 signed_svd2(const Mat2 &a);

/// Layout
///     [ n  .  c  . ]
///     [ .  n  .  c']
///     [ c  .  m  . ]
///     [ .  c' .  m ]
/// reached from the input state by `transform`. c >= |c'| >= 0 up to sign of c'.
struct StandardFormI {
    double n = 1;
    double m = 1;
    double c = 0;
    double c_prime = 0;
    Llubo transform = Llubo::identity();

    Mat4 matrix() const;
};

/// Layout
///     [ n1 .  c1 .  ]
///     [ .  n2 .  c2 ]
///     [ c1 .  m1 .  ]
///     [ .  c2 .  m2 ]
/// with the balance conditions
///     (n1-1)(m2-1) = (n2-1)(m1-1),
///     |c1| - |c2| = sqrt((n1-1)(m1-1)) - sqrt((n2-1)(m2-1)).
///
/// All fields use the input's mode labels: r1 squeezes mode 1 and r2 mode 2.
/// `swapped_modes` records that the squeeze solve ran with the modes
/// exchanged (the input had n < m); it does not change the layout.
struct StandardFormII {
    double n1 = 1;
    double n2 = 1;
    double m1 = 1;
    double m2 = 1;
    double c1 = 0;
    double c2 = 0;
    double r1 = 1;
    double r2 = 1;
    Llubo transform = Llubo::identity();
    bool swapped_modes = false;
    /// Uncorrelated input or a mode at vacuum purity; the squeeze solve was
    /// skipped and the layout equals standard form I.
    bool degenerate = false;
    /// Residuals of the two squeeze equations at the solution.
    double residual_ratio = 0;
    double residual_balance = 0;

    Mat4 matrix() const;
    /// |(n1-1)(m2-1) - (n2-1)(m1-1)|.
    double ratio_condition_residual() const;
    /// ||c1| - |c2| - sqrt((n1-1)(m1-1)) + sqrt((n2-1)(m2-1))|.
    double balance_condition_residual() const;
};

StandardFormI to_standard_form_I(const CorrelationMatrix &state);

/// Positive root r2 of k*m*r2^2 + (1-k)*r2 - m = 0,
/// k = (n/r1 - 1) / (n*r1 - 1), on the branch with r2(1) = 1.
double solve_r2_given_r1(double n, double m, double r1);

/// Residual of the ratio equation in cross-multiplied form,
/// (n/r1 - 1)(m*r2 - 1) - (m/r2 - 1)(n*r1 - 1).
double squeeze_ratio_residual(double n, double m, double r1, double r2);

/// f(r1) = sqrt(r1 r2)|c| - |c'|/sqrt(r1 r2)
///         - sqrt((n r1 - 1)(m r2 - 1)) + sqrt((n/r1 - 1)(m/r2 - 1))
/// with r2 = solve_r2_given_r1(n, m, r1).
double squeeze_balance_function(double n, double m, double c, double c_prime, double r1);

struct SqueezeRoot {
    double r1;
    double r2;
    double residual_ratio;
    double residual_balance;
};

/// Root r1* in [1, inf) of `squeeze_balance_function`, by doubling to a
/// bracket and bisecting. Requires n >= m and |c| >= |c'|.
SqueezeRoot solve_form_II_root(double n, double m, double c, double c_prime);

StandardFormII to_standard_form_II(const CorrelationMatrix &state);

/// sqrt(N (M' - 1/M')) - |c| with N = max(n, m), M' = min(n, m); nonnegative
/// for physical states.
double physicality_gap(const StandardFormI &form);

}  // namespace gaussep

#endif
