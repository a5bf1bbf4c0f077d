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

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace gaussep {

double ppt_min_eigenvalue(const CorrelationMatrix &state) {
    Eigen::Vector4d flip(1, 1, 1, -1);
    Mat4 transposed = flip.asDiagonal() * state.matrix() * flip.asDiagonal();
    Eigen::Matrix4cd h = transposed.cast<std::complex<double>>();
    h += std::complex<double>(0, 1) * symplectic_form().cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

Decision ppt_decision(const CorrelationMatrix &state, double eps_decide) {
    double lowest = ppt_min_eigenvalue(state);
    if (lowest > eps_decide) {
        return Decision::Separable;
    }
    if (lowest < -eps_decide) {
        return Decision::Entangled;
    }
    double psd_tol = kEpsPsd * std::max(1.0, state.matrix().diagonal().maxCoeff());
    if (state.c().cwiseAbs().maxCoeff() < kEpsForm && lowest >= -psd_tol) {
        return Decision::Separable;
    }
    return Decision::Boundary;
}

namespace {

bool single_mode_physical(const Mat2 &cov) {
    double tol = kEpsPsd * std::max(1.0, cov.diagonal().maxCoeff());
    return cov.allFinite() && std::abs(cov(0, 1) - cov(1, 0)) <= kEpsSym && cov(0, 0) > 0 && cov(1, 1) > 0 &&
           cov.determinant() >= 1 - tol;
}

Mat2 random_local_symplectic(std::mt19937_64 &rng, double max_log_squeeze) {
    std::uniform_real_distribution<double> angle(0, std::numbers::pi);
    std::uniform_real_distribution<double> log_squeeze(-max_log_squeeze, max_log_squeeze);
    return rotation2(angle(rng)) * squeeze2(std::exp(log_squeeze(rng))) * rotation2(angle(rng));
}

SingleModeGaussian random_mode(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(0, std::numbers::pi);
    std::uniform_real_distribution<double> log_squeeze(-1, 1);
    std::uniform_real_distribution<double> occupation(0, 3);
    std::uniform_real_distribution<double> mean(-2, 2);
    Mat2 s = rotation2(angle(rng)) * squeeze2(std::exp(log_squeeze(rng)));
    SingleModeGaussian mode;
    mode.covariance = (2 * occupation(rng) + 1) * s * s.transpose();
    mode.covariance = 0.5 * (mode.covariance + mode.covariance.transpose()).eval();
    mode.mean_x = mean(rng);
    mode.mean_p = mean(rng);
    return mode;
}

}  // namespace

void check_ensemble(const SeparableEnsemble &ensemble) {
    if (ensemble.components.empty()) {
        throw GaussianError(ErrorCode::InvalidArgument, "ensemble has no components");
    }
    double total = 0;
    for (const auto &comp : ensemble.components) {
        if (!(comp.weight > 0) || comp.weight > 1) {
            throw GaussianError(ErrorCode::InvalidArgument, "ensemble weights must lie in (0, 1]");
        }
        if (!single_mode_physical(comp.mode1.covariance) || !single_mode_physical(comp.mode2.covariance)) {
            throw GaussianError(ErrorCode::InvalidArgument, "ensemble component is not a physical state");
        }
        total += comp.weight;
    }
    if (std::abs(total - 1) > 1e-12) {
        throw GaussianError(ErrorCode::InvalidArgument, "ensemble weights do not sum to 1");
    }
}

SeparableEnsemble sample_separable_ensemble(std::uint64_t seed, int max_components) {
    if (max_components < 1) {
        throw GaussianError(ErrorCode::InvalidArgument, "max_components must be at least 1");
    }
    std::mt19937_64 rng(seed);
    int count = std::uniform_int_distribution<int>(1, max_components)(rng);
    std::uniform_real_distribution<double> unit(0, 1);

    SeparableEnsemble ensemble;
    std::vector<double> raw(count);
    double sum = 0;
    for (auto &w : raw) {
        w = 1 - unit(rng);  // (0, 1]
        sum += w;
    }
    for (int i = 0; i < count; ++i) {
        EnsembleComponent comp;
        comp.weight = raw[i] / sum;
        comp.mode1 = random_mode(rng);
        comp.mode2 = random_mode(rng);
        ensemble.components.push_back(comp);
    }
    return ensemble;
}

CorrelationMatrix ensemble_covariance(const SeparableEnsemble &ensemble) {
    check_ensemble(ensemble);
    Eigen::Vector4d mean = Eigen::Vector4d::Zero();
    for (const auto &comp : ensemble.components) {
        mean += comp.weight *
                Eigen::Vector4d(comp.mode1.mean_x, comp.mode1.mean_p, comp.mode2.mean_x, comp.mode2.mean_p);
    }
    Mat4 out = Mat4::Zero();
    for (const auto &comp : ensemble.components) {
        Eigen::Vector4d d =
            Eigen::Vector4d(comp.mode1.mean_x, comp.mode1.mean_p, comp.mode2.mean_x, comp.mode2.mean_p) - mean;
        out.block<2, 2>(0, 0) += comp.weight * comp.mode1.covariance;
        out.block<2, 2>(2, 2) += comp.weight * comp.mode2.covariance;
        out += 2 * comp.weight * d * d.transpose();
    }
    return validate(0.5 * (out + out.transpose()));
}

Mat4 beam_splitter(double angle) {
    double c = std::cos(angle);
    double s = std::sin(angle);
    Mat4 b = Mat4::Zero();
    b.block<2, 2>(0, 0) = c * Mat2::Identity();
    b.block<2, 2>(0, 2) = s * Mat2::Identity();
    b.block<2, 2>(2, 0) = -s * Mat2::Identity();
    b.block<2, 2>(2, 2) = c * Mat2::Identity();
    return b;
}

CorrelationMatrix compose_physical(const PhysicalStateRecipe &recipe) {
    if (!(recipe.nu1 >= 1) || !(recipe.nu2 >= 1)) {
        throw GaussianError(ErrorCode::InvalidArgument, "symplectic eigenvalues must be at least 1");
    }
    Mat4 s = recipe.after.block() * beam_splitter(recipe.mixing_angle) * recipe.before.block();
    Eigen::Vector4d nu(recipe.nu1, recipe.nu1, recipe.nu2, recipe.nu2);
    Mat4 m = s * nu.asDiagonal() * s.transpose();
    return validate(0.5 * (m + m.transpose()));
}

PhysicalStateRecipe sample_physical_recipe(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> nu(1, 4);
    std::uniform_real_distribution<double> mixing(0, std::numbers::pi / 2);
    PhysicalStateRecipe recipe;
    recipe.nu1 = nu(rng);
    recipe.nu2 = nu(rng);
    Mat2 b1 = random_local_symplectic(rng, 1.0);
    Mat2 b2 = random_local_symplectic(rng, 1.0);
    recipe.before = Llubo(b1, b2);
    recipe.mixing_angle = mixing(rng);
    Mat2 a1 = random_local_symplectic(rng, 0.5);
    Mat2 a2 = random_local_symplectic(rng, 0.5);
    recipe.after = Llubo(a1, a2);
    return recipe;
}

CorrelationMatrix sample_random_physical(std::uint64_t seed) {
    return compose_physical(sample_physical_recipe(seed));
}

CorrelationMatrix reconstruct_from_p_samples(const PRepresentation &cert, int count, std::uint64_t seed) {
    if (count < 1000) {
        throw GaussianError(ErrorCode::InvalidArgument, "Monte Carlo reconstruction needs at least 1000 samples");
    }
    Eigen::SelfAdjointEigenSolver<Mat4> solver(cert.covariance);
    Eigen::Vector4d spread = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    Mat4 factor = solver.eigenvectors() * spread.asDiagonal();

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0, 1);
    Eigen::Vector4d sum = Eigen::Vector4d::Zero();
    Mat4 second = Mat4::Zero();
    for (int k = 0; k < count; ++k) {
        Eigen::Vector4d z(normal(rng), normal(rng), normal(rng), normal(rng));
        Eigen::Vector4d label = factor * z;
        sum += label;
        second.noalias() += label * label.transpose();
    }
    Eigen::Vector4d mean = sum / count;
    Mat4 scatter = second / count - mean * mean.transpose();
    // Each coherent state contributes the vacuum block I; the labels add
    // twice their scatter.
    Mat4 mixture = Mat4::Identity() + 2 * scatter;
    return validate(congruence(0.5 * (mixture + mixture.transpose()), cert.transform_back));
}

}  // namespace gaussep
