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

#include "gaussep/standard_form.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gaussep {

SignedSvd2 signed_svd2(const Mat2 &a) {
    double e = 0.5 * (a(0, 0) + a(1, 1));
    double f = 0.5 * (a(0, 0) - a(1, 1));
    double g = 0.5 * (a(1, 0) + a(0, 1));
    double h = 0.5 * (a(1, 0) - a(0, 1));
    double q = std::hypot(e, h);
    double r = std::hypot(f, g);
    double a1 = std::atan2(g, f);
    double a2 = std::atan2(h, e);
    return SignedSvd2{0.5 * (a2 + a1), 0.5 * (a2 - a1), q + r, q - r};
}

Mat4 StandardFormI::matrix() const {
    Mat4 out = Mat4::Zero();
    out(0, 0) = out(1, 1) = n;
    out(2, 2) = out(3, 3) = m;
    out(0, 2) = out(2, 0) = c;
    out(1, 3) = out(3, 1) = c_prime;
    return out;
}

Mat4 StandardFormII::matrix() const {
    Mat4 out = Mat4::Zero();
    out(0, 0) = n1;
    out(1, 1) = n2;
    out(2, 2) = m1;
    out(3, 3) = m2;
    out(0, 2) = out(2, 0) = c1;
    out(1, 3) = out(3, 1) = c2;
    return out;
}

double StandardFormII::ratio_condition_residual() const {
    return std::abs((n1 - 1) * (m2 - 1) - (n2 - 1) * (m1 - 1));
}

double StandardFormII::balance_condition_residual() const {
    double lhs = std::abs(c1) - std::abs(c2);
    double rhs = std::sqrt(std::max(0.0, (n1 - 1) * (m1 - 1))) - std::sqrt(std::max(0.0, (n2 - 1) * (m2 - 1)));
    return std::abs(lhs - rhs);
}

namespace {

// Rotation-then-squeeze taking a positive definite 2x2 block to sqrt(det g) * I.
Mat2 local_normalizer(const Mat2 &g) {
    Mat2 rot = rotation2(signed_svd2(g).left);
    Mat2 diag = rot.transpose() * g * rot;
    double s = std::pow(diag(1, 1) / diag(0, 0), 0.25);
    return squeeze2(s) * rot.transpose();
}

}  // namespace

StandardFormI to_standard_form_I(const CorrelationMatrix &state) {
    const Mat4 &m = state.matrix();
    Llubo normalize(local_normalizer(state.g1()), local_normalizer(state.g2()));
    Mat4 normalized = congruence(m, normalize);

    SignedSvd2 svd = signed_svd2(normalized.block<2, 2>(0, 2));
    Llubo diagonalize(rotation2(svd.left).transpose(), rotation2(svd.right));

    StandardFormI form;
    form.n = std::sqrt(state.g1().determinant());
    form.m = std::sqrt(state.g2().determinant());
    form.c = svd.s1;
    form.c_prime = svd.s2;
    form.transform = normalize.then(diagonalize);
    return form;
}

double solve_r2_given_r1(double n, double m, double r1) {
    if (n - 1 < kEpsForm || m - 1 < kEpsForm) {
        throw GaussianError(ErrorCode::DegenerateMode, "a mode at vacuum purity makes the squeeze ratio 0/0");
    }
    if (!(r1 > 0) || !std::isfinite(r1)) {
        throw GaussianError(ErrorCode::InvalidArgument, "r1 must be positive and finite");
    }
    double k = (n / r1 - 1) / (n * r1 - 1);
    double disc = (1 - k) * (1 - k) + 4 * k * m * m;
    if (!(disc >= 0)) {
        throw GaussianError(ErrorCode::NoPositiveRoot, "squeeze ratio quadratic has no real root");
    }
    // Rationalized form of (-(1-k) + sqrt(disc)) / (2km); stays finite at k = 0.
    double denom = (1 - k) + std::sqrt(disc);
    if (!(denom > 0)) {
        throw GaussianError(ErrorCode::NoPositiveRoot, "squeeze ratio quadratic has no positive root");
    }
    return 2 * m / denom;
}

double squeeze_ratio_residual(double n, double m, double r1, double r2) {
    return (n / r1 - 1) * (m * r2 - 1) - (m / r2 - 1) * (n * r1 - 1);
}

double squeeze_balance_function(double n, double m, double c, double c_prime, double r1) {
    double r2 = solve_r2_given_r1(n, m, r1);
    double s = std::sqrt(r1 * r2);
    double lhs = s * std::abs(c) - std::abs(c_prime) / s;
    double rhs = std::sqrt(std::max(0.0, (n * r1 - 1) * (m * r2 - 1))) -
                 std::sqrt(std::max(0.0, (n / r1 - 1) * (m / r2 - 1)));
    return lhs - rhs;
}

SqueezeRoot solve_form_II_root(double n, double m, double c, double c_prime) {
    if (n < m - kEpsForm || std::abs(c) < std::abs(c_prime) - kEpsForm) {
        throw GaussianError(ErrorCode::InvalidArgument, "squeeze solve expects n >= m and |c| >= |c'|");
    }
    auto f = [&](double r1) { return squeeze_balance_function(n, m, c, c_prime, r1); };
    auto finish = [&](double r1) {
        double r2 = solve_r2_given_r1(n, m, r1);
        return SqueezeRoot{r1, r2, std::abs(squeeze_ratio_residual(n, m, r1, r2)), std::abs(f(r1))};
    };

    // f(1) = |c| - |c'| >= 0.
    if (f(1.0) <= 0.5 * kEpsRoot) {
        return finish(1.0);
    }

    // f eventually turns negative: its large-r1 behaviour is
    // sqrt(r1 m) (|c| - sqrt(n (m - 1/m))) and the bracket is nonpositive.
    double lo = 1.0;
    double hi = 2.0;
    double f_hi = f(hi);
    int doublings = 0;
    while (f_hi >= 0) {
        if (f_hi == 0) {
            return finish(hi);
        }
        if (++doublings > 200) {
            throw GaussianError(ErrorCode::RootNotBracketed, "no sign change of the squeeze balance function");
        }
        lo = hi;
        hi *= 2;
        f_hi = f(hi);
    }

    double f_lo = f(lo);
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        double f_mid = f(mid);
        if (f_mid == 0) {
            return finish(mid);
        }
        if (f_mid > 0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    return finish(std::abs(f_lo) <= std::abs(f_hi) ? lo : hi);
}

StandardFormII to_standard_form_II(const CorrelationMatrix &state) {
    StandardFormI first = to_standard_form_I(state);

    StandardFormII form;
    form.n1 = form.n2 = first.n;
    form.m1 = form.m2 = first.m;
    form.c1 = first.c;
    form.c2 = first.c_prime;
    form.transform = first.transform;

    if (std::max(std::abs(first.c), std::abs(first.c_prime)) < kEpsForm || first.n - 1 < kEpsForm ||
        first.m - 1 < kEpsForm) {
        form.degenerate = true;
        return form;
    }

    // Mode exchange is not local; solve in exchanged labels and map back.
    form.swapped_modes = first.n < first.m;
    SqueezeRoot root = form.swapped_modes ? solve_form_II_root(first.m, first.n, first.c, first.c_prime)
                                          : solve_form_II_root(first.n, first.m, first.c, first.c_prime);
    form.r1 = form.swapped_modes ? root.r2 : root.r1;
    form.r2 = form.swapped_modes ? root.r1 : root.r2;
    form.residual_ratio = root.residual_ratio;
    form.residual_balance = root.residual_balance;

    double s = std::sqrt(form.r1 * form.r2);
    form.n1 = first.n * form.r1;
    form.n2 = first.n / form.r1;
    form.m1 = first.m * form.r2;
    form.m2 = first.m / form.r2;
    form.c1 = first.c * s;
    form.c2 = first.c_prime / s;
    form.transform = first.transform.then(Llubo(squeeze2(std::sqrt(form.r1)), squeeze2(std::sqrt(form.r2))));
    return form;
}

double physicality_gap(const StandardFormI &form) {
    double big = std::max(form.n, form.m);
    double small = std::min(form.n, form.m);
    return std::sqrt(big * (small - 1 / small)) - std::abs(form.c);
}

}  // namespace gaussep
