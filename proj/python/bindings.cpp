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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaussep/oracle.hpp"
#include "gaussep/scenarios.hpp"
#include "gaussep/separability.hpp"
#include "gaussep/standard_form.hpp"

namespace py = pybind11;
using namespace gaussep;

namespace {

py::dict transform_dict(const Llubo &op) {
    py::dict d;
    d["h1"] = Mat2(op.h1());
    d["h2"] = Mat2(op.h2());
    return d;
}

py::dict form_i_dict(const StandardFormI &f) {
    py::dict d;
    d["n"] = f.n;
    d["m"] = f.m;
    d["c"] = f.c;
    d["c_prime"] = f.c_prime;
    d["matrix"] = f.matrix();
    d["transform"] = transform_dict(f.transform);
    return d;
}

py::dict form_ii_dict(const StandardFormII &f) {
    py::dict d;
    d["n1"] = f.n1;
    d["n2"] = f.n2;
    d["m1"] = f.m1;
    d["m2"] = f.m2;
    d["c1"] = f.c1;
    d["c2"] = f.c2;
    d["r1"] = f.r1;
    d["r2"] = f.r2;
    d["swapped_modes"] = f.swapped_modes;
    d["degenerate"] = f.degenerate;
    d["matrix"] = f.matrix();
    d["transform"] = transform_dict(f.transform);
    return d;
}

py::dict verdict_dict(const SeparabilityVerdict &v) {
    py::dict d;
    d["decision"] = std::string(to_string(v.decision));
    d["total_variance"] = v.total_variance;
    d["bound"] = v.bound;
    d["margin"] = v.margin;
    d["min_eigenvalue"] = v.min_eigenvalue;
    d["witness"] = py::make_tuple(v.witness.a, v.witness.sign_u, v.witness.sign_v);
    d["witness_is_optimal"] = v.witness_is_optimal;
    d["invariants"] = py::make_tuple(v.invariants.det_g1, v.invariants.det_g2, v.invariants.det_c,
                                     v.invariants.det_m);
    d["form"] = form_ii_dict(v.form);
    if (v.certificate) {
        d["certificate"] = v.certificate->covariance;
    } else {
        d["certificate"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_gaussep, m) {
    m.doc() = "Entanglement decisions for two-mode Gaussian states";

    static py::exception<GaussianError> error(m, "GaussianError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const GaussianError &e) {
            py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    m.attr("EPS_DECIDE") = kEpsDecide;

    m.def(
        "validate", [](const Mat4 &mat) { return validate(mat).matrix(); }, py::arg("matrix"),
        "Check a 4x4 correlation matrix and return it unchanged.");
    m.def(
        "decide", [](const Mat4 &mat, double eps) { return verdict_dict(decide_separability(validate(mat), {eps})); },
        py::arg("matrix"), py::arg("eps_decide") = kEpsDecide,
        "Classify a state as entangled, separable or boundary.");
    m.def(
        "ppt_decision", [](const Mat4 &mat, double eps) { return std::string(to_string(ppt_decision(validate(mat), eps))); },
        py::arg("matrix"), py::arg("eps_decide") = kEpsDecide, "Partial-transpose reference decision.");
    m.def(
        "ppt_min_eigenvalue", [](const Mat4 &mat) { return ppt_min_eigenvalue(validate(mat)); }, py::arg("matrix"));
    m.def(
        "standard_form_I", [](const Mat4 &mat) { return form_i_dict(to_standard_form_I(validate(mat))); },
        py::arg("matrix"));
    m.def(
        "standard_form_II", [](const Mat4 &mat) { return form_ii_dict(to_standard_form_II(validate(mat))); },
        py::arg("matrix"));
    m.def(
        "variance_pair",
        [](const Mat4 &mat, double a, int sign_u, int sign_v) {
            return variance_pair(validate(mat), EprPair{a, sign_u, sign_v});
        },
        py::arg("matrix"), py::arg("a"), py::arg("sign_u"), py::arg("sign_v"));
    m.def(
        "tmsv_matrix", [](double r) { return tmsv_matrix(r).matrix(); }, py::arg("r"));
    m.def(
        "evolve_thermal",
        [](double r, double eta, double nbar, double t) { return evolve_thermal({r, eta, nbar, t}).matrix(); },
        py::arg("r"), py::arg("eta"), py::arg("nbar"), py::arg("t"));
    m.def(
        "threshold_time",
        [](double r, double eta, double nbar) -> double {
            ThresholdTime t = threshold_time(r, eta, nbar);
            return std::holds_alternative<InfiniteTime>(t) ? INFINITY : std::get<double>(t);
        },
        py::arg("r"), py::arg("eta"), py::arg("nbar"), "Boundary time; inf for a vacuum bath.");
    m.def(
        "scan_boundary",
        [](double r, double eta, double nbar, double t_max, int steps) {
            std::vector<py::tuple> rows;
            for (const ScanPoint &p : scan_boundary(r, eta, nbar, t_max, steps)) {
                rows.push_back(py::make_tuple(p.t, p.margin, std::string(to_string(p.decision))));
            }
            return rows;
        },
        py::arg("r"), py::arg("eta"), py::arg("nbar"), py::arg("t_max"), py::arg("steps"));
    m.def(
        "sample_random_physical", [](std::uint64_t seed) { return sample_random_physical(seed).matrix(); },
        py::arg("seed"));
    m.def(
        "sample_separable_ensemble",
        [](std::uint64_t seed, int max_components) {
            return ensemble_covariance(sample_separable_ensemble(seed, max_components)).matrix();
        },
        py::arg("seed"), py::arg("max_components") = 10, "Correlation matrix of a random separable mixture.");
}
