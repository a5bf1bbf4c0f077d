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

#ifndef GAUSSEP_SEPARABILITY_HPP
#define GAUSSEP_SEPARABILITY_HPP

#include <optional>

#include "gaussep/gaussian_core.hpp"
#include "gaussep/standard_form.hpp"

namespace gaussep {

/// Half-width of the Boundary band.
inline constexpr double kEpsDecide = 1e-7;

enum class Decision { Entangled, Separable, Boundary };

const char *to_string(Decision decision);

struct Theorem1Result {
    bool violated;
    double total_variance;
    double bound;
};

/// Total-variance test with an arbitrary pair. A violation certifies
/// entanglement for any state; compliance proves nothing on its own.
Theorem1Result theorem1_check(const CorrelationMatrix &state, const EprPair &pair, double eps_decide = kEpsDecide);

/// The witness pair for a standard form II:
///     u = a0 x1 - sgn(c1)/a0 x2,  v = a0 p1 - sgn(c2)/a0 p2,
///     a0^2 = sqrt((m1-1)/(n1-1)).
/// Throws DegenerateForm for degenerate forms or a vanishing c1, c2.
EprPair construct_epr_pair(const StandardFormII &form);

/// Gaussian P-distribution over coherent-state labels of the standard form II
/// state. `covariance` is in operator units, (M_II - I)/2; `transform_back`
/// maps the standard form II frame back to the input frame.
struct PRepresentation {
    Mat4 covariance = Mat4::Zero();
    Llubo transform_back = Llubo::identity();

    /// transform_back applied to (2 * covariance + I).
    Mat4 reconstruct() const;
};

/// Throws NotInSeparableRegime unless M_II - I is PSD within kEpsPsd.
PRepresentation p_representation(const StandardFormII &form);

struct DecisionOptions {
    double eps_decide = kEpsDecide;
};

struct SeparabilityVerdict {
    Decision decision = Decision::Boundary;
    double total_variance = 0;
    double bound = 2;
    /// bound - total_variance for `witness`, evaluated on the standard form II.
    double margin = 0;
    EprPair witness;
    /// False when the form is degenerate and `witness` is the a = 1 fallback.
    bool witness_is_optimal = false;
    /// Smallest eigenvalue of M_II - I; the decision is taken on this value.
    double min_eigenvalue = 0;
    StandardFormII form;
    LluboInvariants invariants{};
    std::optional<PRepresentation> certificate;
};

/// Reduces to standard form II and tests M_II - I >= 0.
///
/// Separable when the smallest eigenvalue of M_II - I exceeds eps_decide,
/// Entangled when it is below -eps_decide, Boundary in between. Inside the
/// band an uncorrelated state (|c| < kEpsForm) is still reported Separable,
/// since it is a product of physical single-mode states.
///
/// For non-degenerate forms the witness pair is checked against the
/// eigenvalue decision outside the band; a disagreement throws
/// InconsistentWitness.
SeparabilityVerdict decide_separability(const CorrelationMatrix &state, const DecisionOptions &options = {});

}  // namespace gaussep

#endif
