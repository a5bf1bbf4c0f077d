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

#ifndef GAUSSEP_GAUSSIAN_CORE_HPP
#define GAUSSEP_GAUSSIAN_CORE_HPP

#include <Eigen/Core>
#include <Eigen/LU>

#include "gaussep/error.hpp"

/// Conventions used throughout gaussep.
///
///  * Quadrature ordering is (x1, p1, x2, p2): row/column i of a correlation
///    matrix pairs with the i-th entry of that list.
///  * Scaling is "vacuum-identity": M[i][j] = <{dxi_i, dxi_j}>, twice the
///    symmetrized covariance, so the vacuum has M = I. Operator variances are
///    M-entries divided by two.
///  * First moments are dropped; local displacements never change
///    separability.
///  * Physicality is M + i*Omega >= 0 with Omega = diag([[0,1],[-1,0]] per mode).
namespace gaussep {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

inline constexpr double kEpsSym = 1e-10;
/// Relative to the largest diagonal entry.
inline constexpr double kEpsPsd = 1e-9;
inline constexpr double kEpsDet = 1e-10;
inline constexpr double kEpsInv = 1e-9;

/// Two-mode symplectic form, block-diagonal with [[0,1],[-1,0]] per mode.
Mat4 symplectic_form();

/// Smallest eigenvalue of the Hermitian matrix M + i*Omega, computed through
/// the real symmetric 8x8 embedding [[M, -Omega], [Omega, M]].
double min_uncertainty_eigenvalue(const Mat4 &m);

/// A validated two-mode correlation matrix. Only `validate` constructs one.
class CorrelationMatrix {
   public:
    const Mat4 &matrix() const noexcept {
        return m_;
    }
    double operator()(int i, int j) const {
        return m_(i, j);
    }
    Mat2 g1() const {
        return m_.block<2, 2>(0, 0);
    }
    Mat2 g2() const {
        return m_.block<2, 2>(2, 2);
    }
    Mat2 c() const {
        return m_.block<2, 2>(0, 2);
    }

   private:
    explicit CorrelationMatrix(const Mat4 &m) : m_(m) {
    }
    friend CorrelationMatrix validate(const Mat4 &m);

    Mat4 m_;
};

/// Symmetrizes and checks finiteness, symmetry (kEpsSym) and the uncertainty
/// relation (kEpsPsd relative to the largest diagonal entry).
CorrelationMatrix validate(const Mat4 &m);

/// Local linear unitary Bogoliubov operation: a unit-determinant 2x2 real
/// matrix per mode, acting on M by congruence with blockdiag(h1, h2).
class Llubo {
   public:
    /// Throws InvalidLlubo when either determinant is off by more than kEpsDet.
    Llubo(const Mat2 &h1, const Mat2 &h2);

    static Llubo identity();

    const Mat2 &h1() const noexcept {
        return h1_;
    }
    const Mat2 &h2() const noexcept {
        return h2_;
    }
    Mat4 block() const;
    /// Element-wise 2x2 inverse pair.
    Llubo inverse() const;
    /// The operation that applies `*this` first and then `next`.
    Llubo then(const Llubo &next) const;

   private:
    Mat2 h1_;
    Mat2 h2_;
};

Mat2 rotation2(double theta);
/// diag(s, 1/s); s > 0.
Mat2 squeeze2(double s);

/// blockdiag(h1, h2) * M * blockdiag(h1, h2)^T on a raw matrix, no checks.
Mat4 congruence(const Mat4 &m, const Llubo &op);

CorrelationMatrix apply_llubo(const CorrelationMatrix &state, const Llubo &op);

struct LluboInvariants {
    double det_g1;
    double det_g2;
    double det_c;
    double det_m;
};

LluboInvariants llubo_invariants(const CorrelationMatrix &state);
LluboInvariants llubo_invariants(const Mat4 &m);

/// True when each pair of invariants agrees within `rel_tol` relative to
/// max(1, |a|, |b|).
bool invariants_close(const LluboInvariants &a, const LluboInvariants &b, double rel_tol = kEpsInv);

/// EPR-type operator pair
///     u = |a| x1 + sign_u / |a| x2,
///     v = |a| p1 + sign_v / |a| p2.
/// Only |a| enters; the signs are stored explicitly.
struct EprPair {
    double a = 1.0;
    int sign_u = +1;
    int sign_v = -1;

    /// u = |a| x1 + x2 / a, v = |a| p1 - p2 / a (signed a).
    static EprPair from_signed_coefficient(double a);

    /// a^2 + 1/a^2, the separable lower bound on the total variance.
    double separable_bound() const;
};

/// <(du)^2> + <(dv)^2> in operator units.
double variance_pair(const CorrelationMatrix &state, const EprPair &pair);
double variance_pair(const Mat4 &m, const EprPair &pair);

}  // namespace gaussep

#endif
