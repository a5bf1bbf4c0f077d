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

#include "gaussep/cli.hpp"

#include <climits>
#include <fstream>
#include <iomanip>
#include <locale>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gaussep/oracle.hpp"
#include "gaussep/scenarios.hpp"
#include "gaussep/separability.hpp"
#include "gaussep/standard_form.hpp"
#include "gaussep/state_file.hpp"

namespace gaussep::cli {

namespace {

std::string num(double x) {
    std::ostringstream s;
    s.imbue(std::locale::classic());
    s << std::setprecision(9) << x;
    return s.str();
}

void print_block(std::ostream &out, const std::string &indent, const Mat2 &h) {
    out << indent << "[" << num(h(0, 0)) << ", " << num(h(0, 1)) << "]\n";
    out << indent << "[" << num(h(1, 0)) << ", " << num(h(1, 1)) << "]\n";
}

void print_matrix(std::ostream &out, const std::string &indent, const Mat4 &m) {
    for (int i = 0; i < 4; ++i) {
        out << indent << "[" << num(m(i, 0)) << ", " << num(m(i, 1)) << ", " << num(m(i, 2)) << ", "
            << num(m(i, 3)) << "]\n";
    }
}

void print_transform(std::ostream &out, const Llubo &op) {
    out << "transform h1:\n";
    print_block(out, "  ", op.h1());
    out << "transform h2:\n";
    print_block(out, "  ", op.h2());
}

int exit_for(Decision d) {
    switch (d) {
        case Decision::Separable:
            return kSeparable;
        case Decision::Entangled:
            return kEntangled;
        case Decision::Boundary:
            return kBoundary;
    }
    return kNumericalFailure;
}

int cmd_check(const std::string &path, bool as_json, double tol, std::ostream &out) {
    CorrelationMatrix state = load_state_file(path);
    SeparabilityVerdict v = decide_separability(state, DecisionOptions{tol});
    if (as_json) {
        out << verdict_to_json(state, v).dump(2) << "\n";
        return exit_for(v.decision);
    }
    const LluboInvariants &inv = v.invariants;
    out << "decision: " << to_string(v.decision) << "\n";
    out << "total variance: " << num(v.total_variance) << "\n";
    out << "bound: " << num(v.bound) << "\n";
    out << "margin: " << num(v.margin) << "\n";
    if (std::abs(v.margin) <= tol) {
        out << "note: margin within " << num(tol) << " of the bound (boundary-adjacent)\n";
    }
    out << "min eigenvalue of M_II - I: " << num(v.min_eigenvalue) << "\n";
    out << "witness: a0 = " << num(v.witness.a) << ", sign_u = " << v.witness.sign_u
        << ", sign_v = " << v.witness.sign_v << (v.witness_is_optimal ? "" : " (fallback, degenerate form)")
        << "\n";
    out << "invariants: det G1 = " << num(inv.det_g1) << ", det G2 = " << num(inv.det_g2)
        << ", det C = " << num(inv.det_c) << ", det M = " << num(inv.det_m) << "\n";
    if (v.certificate) {
        out << "P-certificate covariance (operator units, standard form II frame):\n";
        print_matrix(out, "  ", v.certificate->covariance);
    }
    return exit_for(v.decision);
}

int cmd_reduce(const std::string &path, const std::string &form_name, bool as_json, std::ostream &out) {
    CorrelationMatrix state = load_state_file(path);
    if (form_name == "I") {
        StandardFormI form = to_standard_form_I(state);
        if (as_json) {
            out << form_to_json(form).dump(2) << "\n";
            return 0;
        }
        out << "standard form I\n";
        out << "n = " << num(form.n) << "\nm = " << num(form.m) << "\nc = " << num(form.c)
            << "\nc' = " << num(form.c_prime) << "\n";
        print_transform(out, form.transform);
        return 0;
    }
    StandardFormII form = to_standard_form_II(state);
    if (as_json) {
        out << form_to_json(form).dump(2) << "\n";
        return 0;
    }
    out << "standard form II\n";
    out << "n1 = " << num(form.n1) << "\nn2 = " << num(form.n2) << "\nm1 = " << num(form.m1)
        << "\nm2 = " << num(form.m2) << "\nc1 = " << num(form.c1) << "\nc2 = " << num(form.c2)
        << "\nr1 = " << num(form.r1) << "\nr2 = " << num(form.r2) << "\n";
    out << "swapped_modes: " << (form.swapped_modes ? "true" : "false") << "\n";
    out << "degenerate: " << (form.degenerate ? "true" : "false") << "\n";
    out << "residual (n1-1)(m2-1) = (n2-1)(m1-1): " << num(form.ratio_condition_residual()) << "\n";
    out << "residual |c1|-|c2| balance: " << num(form.balance_condition_residual()) << "\n";
    out << "residual squeeze ratio equation: " << num(form.residual_ratio) << "\n";
    out << "residual squeeze balance equation: " << num(form.residual_balance) << "\n";
    print_transform(out, form.transform);
    return 0;
}

int cmd_threshold(double r, double eta, double nbar, std::ostream &out) {
    ThresholdTime t = threshold_time(r, eta, nbar);
    if (std::holds_alternative<InfiniteTime>(t)) {
        out << "threshold time: infinite (vacuum bath, the state stays entangled)\n";
    } else {
        out << "threshold time: " << num(std::get<double>(t)) << "\n";
    }
    if (nbar > 10) {
        out << "large-nbar asymptote: " << num(large_nbar_threshold(r, eta, nbar)) << "\n";
    }
    out << "time is in units of 1/eta; only eta*t enters\n";
    return 0;
}

int cmd_scan(double r, double eta, double nbar, double t_max, int steps, const std::string &path, double tol,
             std::ostream &out) {
    std::vector<ScanPoint> scan = scan_boundary(r, eta, nbar, t_max, steps, DecisionOptions{tol});
    std::ofstream csv(path, std::ios::binary);
    if (!csv) {
        throw StateFileError(StateFileError::Kind::Write, "cannot write " + path);
    }
    csv << "t,margin,decision\n";
    for (const ScanPoint &p : scan) {
        csv << num(p.t) << "," << num(p.margin) << "," << to_string(p.decision) << "\n";
    }
    csv.close();
    if (!csv) {
        throw StateFileError(StateFileError::Kind::Write, "failed writing " + path);
    }
    out << "wrote " << scan.size() << " rows to " << path << "\n";

    auto bracket = sign_change_bracket(scan);
    ThresholdTime closed = r > 0 ? threshold_time(r, eta, nbar) : ThresholdTime{InfiniteTime{}};
    if (bracket) {
        out << "sign change between t = " << num(bracket->first) << " and t = " << num(bracket->second) << "\n";
    } else {
        out << "no sign change on the grid\n";
    }
    if (std::holds_alternative<InfiniteTime>(closed)) {
        out << "closed-form threshold: infinite\n";
    } else {
        double t_star = std::get<double>(closed);
        out << "closed-form threshold: " << num(t_star) << "\n";
        if (bracket) {
            double mid = 0.5 * (bracket->first + bracket->second);
            bool inside = bracket->first <= t_star && t_star <= bracket->second;
            out << "bracket contains threshold: " << (inside ? "yes" : "no") << "\n";
            out << "deviation of bracket midpoint: " << num(mid - t_star) << "\n";
        }
    }
    return 0;
}

int cmd_sample(std::uint64_t seed, const std::string &kind, int components, const std::string &path,
               std::ostream &out) {
    Mat4 m = kind == "ensemble" ? ensemble_covariance(sample_separable_ensemble(seed, components)).matrix()
                                : sample_random_physical(seed).matrix();
    std::string text = state_to_json(m).dump(2) + "\n";
    if (path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw StateFileError(StateFileError::Kind::Write, "cannot write " + path);
    }
    return 0;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement decisions for two-mode Gaussian states", "gaussep"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false;
    double tol = kEpsDecide;
    std::string form_name = "II";
    double r = 0;
    double eta = 1;
    double nbar = 0;
    double t_max = 1;
    int steps = 101;
    std::string out_path;
    std::uint64_t seed = 0;
    std::string kind = "physical";
    int components = 10;

    auto *check = app.add_subcommand("check", "Decide entangled / separable for a state file");
    check->add_option("path", path, "State file (JSON)")->required();
    check->add_flag("--json", as_json, "Emit the full verdict as JSON");
    check->add_option("--tol-decide", tol, "Boundary band half-width")->check(CLI::PositiveNumber);

    auto *reduce = app.add_subcommand("reduce", "Print standard form I or II");
    reduce->add_option("path", path, "State file (JSON)")->required();
    reduce->add_option("--form", form_name, "I or II")->check(CLI::IsMember({"I", "II"}));
    reduce->add_flag("--json", as_json, "Emit JSON");

    auto *threshold = app.add_subcommand("threshold", "Entanglement lifetime under thermal noise");
    threshold->add_option("--r", r, "Squeezing parameter (> 0)")->required()->check(CLI::PositiveNumber);
    threshold->add_option("--eta", eta, "Damping rate (> 0)")->required()->check(CLI::PositiveNumber);
    threshold->add_option("--nbar", nbar, "Thermal occupation (>= 0)")->required()->check(CLI::NonNegativeNumber);

    auto *scan = app.add_subcommand("scan", "Scan the decision along the thermal evolution; writes CSV");
    scan->add_option("--r", r, "Squeezing parameter")->required()->check(CLI::NonNegativeNumber);
    scan->add_option("--eta", eta, "Damping rate (> 0)")->required()->check(CLI::PositiveNumber);
    scan->add_option("--nbar", nbar, "Thermal occupation (>= 0)")->required()->check(CLI::NonNegativeNumber);
    scan->add_option("--t-max", t_max, "End of the time grid")->required()->check(CLI::PositiveNumber);
    scan->add_option("--steps", steps, "Number of grid points (>= 2)")->required()->check(CLI::Range(2, INT_MAX));
    scan->add_option("--out", out_path, "CSV output path")->required();
    scan->add_option("--tol-decide", tol, "Boundary band half-width")->check(CLI::PositiveNumber);

    auto *sample = app.add_subcommand("sample", "Write a random state file");
    sample->add_option("--seed", seed, "RNG seed");
    sample->add_option("--kind", kind, "physical or ensemble")->check(CLI::IsMember({"physical", "ensemble"}));
    sample->add_option("--components", components, "Max ensemble components")->check(CLI::Range(1, 1000));
    sample->add_option("--out", out_path, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*check) {
            return cmd_check(path, as_json, tol, out);
        }
        if (*reduce) {
            return cmd_reduce(path, form_name, as_json, out);
        }
        if (*threshold) {
            return cmd_threshold(r, eta, nbar, out);
        }
        if (*scan) {
            return cmd_scan(r, eta, nbar, t_max, steps, out_path, tol, out);
        }
        if (*sample) {
            return cmd_sample(seed, kind, components, out_path, out);
        }
    } catch (const StateFileError &e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case StateFileError::Kind::NotFound:
                return kFileNotFound;
            case StateFileError::Kind::Parse:
                return kParseError;
            case StateFileError::Kind::Write:
                return kWriteError;
        }
    } catch (const GaussianError &e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::NotFinite:
            case ErrorCode::NotSymmetric:
            case ErrorCode::NotPhysical:
                return kInvalidState;
            case ErrorCode::InvalidArgument:
                return kUsage;
            default:
                return kNumericalFailure;
        }
    }
    return kUsage;
}

}  // namespace gaussep::cli
