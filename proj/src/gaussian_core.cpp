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

#include "gaussep/gaussian_core.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace gaussep {

Mat4 symplectic_form() {
    Mat4 omega = Mat4::Zero();
    omega(0, 1) = 1;
    omega(1, 0) = -1;
    omega(2, 3) = 1;
    omega(3, 2) = -1;
    return omega;
}

double min_uncertainty_eigenvalue(const Mat4 &m) {
    // H = A + iB is represented by [[A, -B], [B, A]]; its spectrum is the
    // spectrum of H with every eigenvalue doubled.
    Mat4 omega = symplectic_form();
    Eigen::Matrix<double, 8, 8> embed;
    embed << m, -omega, omega, m;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 8, 8>> solver(embed, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

CorrelationMatrix validate(const Mat4 &m) {
    if (!m.allFinite()) {
        throw GaussianError(ErrorCode::NotFinite, "correlation matrix has non-finite entries");
    }
    double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > kEpsSym) {
        std::ostringstream msg;
        msg << "asymmetry " << asym << " exceeds " << kEpsSym;
        throw GaussianError(ErrorCode::NotSymmetric, msg.str());
    }
    Mat4 sym = 0.5 * (m + m.transpose());
    double scale = std::max(1.0, sym.diagonal().cwiseAbs().maxCoeff());
    double lowest = min_uncertainty_eigenvalue(sym);
    if (lowest < -kEpsPsd * scale) {
        std::ostringstream msg;
        msg << "uncertainty relation violated: min eigenvalue of M + i*Omega is " << lowest;
        throw GaussianError(ErrorCode::NotPhysical, msg.str());
    }
    return CorrelationMatrix(sym);
}

Mat2 rotation2(double theta) {
    Mat2 r;
    double c = std::cos(theta);
    double s = std::sin(theta);
    r << c, -s, s, c;
    return r;
}

Mat2 squeeze2(double s) {
    if (!(s > 0) || !std::isfinite(s)) {
        throw GaussianError(ErrorCode::InvalidArgument, "squeeze factor must be positive and finite");
    }
    Mat2 q = Mat2::Zero();
    q(0, 0) = s;
    q(1, 1) = 1.0 / s;
    return q;
}

Llubo::Llubo(const Mat2 &h1, const Mat2 &h2) : h1_(h1), h2_(h2) {
    double d1 = h1.determinant();
    double d2 = h2.determinant();
    if (!h1.allFinite() || !h2.allFinite() || std::abs(d1 - 1) > kEpsDet || std::abs(d2 - 1) > kEpsDet) {
        std::ostringstream msg;
        msg << "local operation determinants (" << d1 << ", " << d2 << ") are not 1";
        throw GaussianError(ErrorCode::InvalidLlubo, msg.str());
    }
}

Llubo Llubo::identity() {
    return Llubo(Mat2::Identity(), Mat2::Identity());
}

Mat4 Llubo::block() const {
    Mat4 b = Mat4::Zero();
    b.block<2, 2>(0, 0) = h1_;
    b.block<2, 2>(2, 2) = h2_;
    return b;
}

namespace {

Mat2 inverse2(const Mat2 &h) {
    Mat2 inv;
    inv << h(1, 1), -h(0, 1), -h(1, 0), h(0, 0);
    return inv / h.determinant();
}

}  // namespace

Llubo Llubo::inverse() const {
    return Llubo(inverse2(h1_), inverse2(h2_));
}

Llubo Llubo::then(const Llubo &next) const {
    return Llubo(next.h1_ * h1_, next.h2_ * h2_);
}

Mat4 congruence(const Mat4 &m, const Llubo &op) {
    Mat4 b = op.block();
    Mat4 out = b * m * b.transpose();
    return 0.5 * (out + out.transpose());
}

CorrelationMatrix apply_llubo(const CorrelationMatrix &state, const Llubo &op) {
    return validate(congruence(state.matrix(), op));
}

LluboInvariants llubo_invariants(const Mat4 &m) {
    return LluboInvariants{
        m.block<2, 2>(0, 0).determinant(),
        m.block<2, 2>(2, 2).determinant(),
        m.block<2, 2>(0, 2).determinant(),
        m.determinant(),
    };
}

LluboInvariants llubo_invariants(const CorrelationMatrix &state) {
    return llubo_invariants(state.matrix());
}

bool invariants_close(const LluboInvariants &a, const LluboInvariants &b, double rel_tol) {
    auto close = [rel_tol](double x, double y) {
        return std::abs(x - y) <= rel_tol * std::max({1.0, std::abs(x), std::abs(y)});
    };
    return close(a.det_g1, b.det_g1) && close(a.det_g2, b.det_g2) && close(a.det_c, b.det_c) &&
           close(a.det_m, b.det_m);
}

EprPair EprPair::from_signed_coefficient(double a) {
    int s = a < 0 ? -1 : +1;
    return EprPair{a, s, -s};
}

double EprPair::separable_bound() const {
    return a * a + 1.0 / (a * a);
}

double variance_pair(const Mat4 &m, const EprPair &pair) {
    if (pair.a == 0 || !std::isfinite(pair.a)) {
        throw GaussianError(ErrorCode::ZeroCoefficient, "EPR coefficient a must be nonzero and finite");
    }
    if ((pair.sign_u != 1 && pair.sign_u != -1) || (pair.sign_v != 1 && pair.sign_v != -1)) {
        throw GaussianError(ErrorCode::InvalidArgument, "EPR signs must be +1 or -1");
    }
    double a2 = pair.a * pair.a;
    double var_u = a2 * m(0, 0) + m(2, 2) / a2 + 2.0 * pair.sign_u * m(0, 2);
    double var_v = a2 * m(1, 1) + m(3, 3) / a2 + 2.0 * pair.sign_v * m(1, 3);
    return 0.5 * (var_u + var_v);
}

double variance_pair(const CorrelationMatrix &state, const EprPair &pair) {
    return variance_pair(state.matrix(), pair);
}

}  // namespace gaussep
