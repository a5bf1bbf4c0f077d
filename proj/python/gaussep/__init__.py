# Copyright 2026 The gaussep Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Entanglement decisions for two-mode Gaussian states."""

from ._gaussep import (
    EPS_DECIDE,
    GaussianError,
    decide,
    evolve_thermal,
    ppt_decision,
    ppt_min_eigenvalue,
    sample_random_physical,
    sample_separable_ensemble,
    scan_boundary,
    standard_form_I,
    standard_form_II,
    threshold_time,
    tmsv_matrix,
    validate,
    variance_pair,
)

__all__ = [
    "EPS_DECIDE",
    "GaussianError",
    "decide",
    "evolve_thermal",
    "ppt_decision",
    "ppt_min_eigenvalue",
    "sample_random_physical",
    "sample_separable_ensemble",
    "scan_boundary",
    "standard_form_I",
    "standard_form_II",
    "threshold_time",
    "tmsv_matrix",
    "validate",
    "variance_pair",
]
