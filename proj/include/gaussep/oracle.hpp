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

#ifndef GAUSSEP_ORACLE_HPP
#define GAUSSEP_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "gaussep/gaussian_core.hpp"
#include "gaussep/separability.hpp"

namespace gaussep {

/// Smallest eigenvalue of M~ + i*Omega where M~ = L M L, L = diag(1, 1, 1, -1)
/// (momentum reversal on mode 2). Uses a complex Hermitian eigensolver.
double ppt_min_eigenvalue(const CorrelationMatrix &state);

/// Partial-transpose decision with the same Boundary band as
/// `decide_separability`. Uncorrelated states inside the band are Separable.
Decision ppt_decision(const CorrelationMatrix &state, double eps_decide = kEpsDecide);

struct SingleModeGaussian {
    double mean_x = 0;
    double mean_p = 0;
    /// M-units; vacuum is the identity.
    Mat2 covariance = Mat2::Identity();
};

struct EnsembleComponent {
    double weight = 1;
    SingleModeGaussian mode1;
    SingleModeGaussian mode2;
};

/// Finite mixture of product Gaussian states.
struct SeparableEnsemble {
    std::vector<EnsembleComponent> components;
};

/// Throws InvalidArgument unless the weights are positive and sum to 1 within
/// 1e-12 and every single-mode covariance is physical.
void check_ensemble(const SeparableEnsemble &ensemble);

/// Deterministic in `seed`. Between 1 and `max_components` components; each
/// mode is rotation * squeeze (factor in [1/e, e]) applied to a thermal state
/// with occupation in [0, 3], displaced by means in [-2, 2].
SeparableEnsemble sample_separable_ensemble(std::uint64_t seed, int max_components);

/// Mixture correlation matrix: weighted component blocks plus twice the
/// between-component scatter of the means.
CorrelationMatrix ensemble_covariance(const SeparableEnsemble &ensemble);

/// S * diag(nu1, nu1, nu2, nu2) * S^T with
/// S = after * beam_splitter(mixing_angle) * before.
struct PhysicalStateRecipe {
    double nu1 = 1;
    double nu2 = 1;
    Llubo before = Llubo::identity();
    double mixing_angle = 0;
    Llubo after = Llubo::identity();
};

Mat4 beam_splitter(double angle);
CorrelationMatrix compose_physical(const PhysicalStateRecipe &recipe);

/// Deterministic in `seed`; produces both separable and entangled states.
PhysicalStateRecipe sample_physical_recipe(std::uint64_t seed);
CorrelationMatrix sample_random_physical(std::uint64_t seed);

/// Monte Carlo reconstruction: draws `count` coherent-state labels from the
/// certificate's Gaussian, forms the mixture correlation matrix and maps it
/// back to the input frame. `count` must be at least 1000.
CorrelationMatrix reconstruct_from_p_samples(const PRepresentation &cert, int count, std::uint64_t seed);

}  // namespace gaussep

#endif
