// Copyright 2026 The orbitgeom authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbitgeom/json_io.hpp"
#include "orbitgeom/spectral.hpp"

using namespace orbitgeom;

namespace {

struct RunConfig {
    std::uint64_t seed = 1;
    std::map<std::string, double> tolerances;
    std::string out_path; // empty = stdout
    std::string format = "json";
    int max_iter = 5000;

    double tol(const std::string &name, double fallback) const {
        auto it = tolerances.find(name);
        return it == tolerances.end() ? fallback : it->second;
    }

    Json tolerances_json(std::initializer_list<std::pair<std::string, double>> used) const {
        Json j = Json::object();
        for (const auto &[name, value] : used)
            j[name] = value;
        return j;
    }
};

void add_common_flags(CLI::App *cmd, RunConfig &cfg, std::vector<std::string> &tol_specs) {
    cmd->add_option("--seed", cfg.seed, "Master seed for randomized steps");
    cmd->add_option("--tol", tol_specs, "Tolerance override NAME=VALUE (repeatable)");
    cmd->add_option("--max-iter", cfg.max_iter, "Iteration cap for the membership solver");
    cmd->add_option("--out", cfg.out_path, "Write the report to this path instead of stdout");
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
}

void parse_tol_specs(const std::vector<std::string> &specs, RunConfig &cfg) {
    for (const auto &s : specs) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw IoError("--tol expects NAME=VALUE, got '" + s + "'");
        try {
            cfg.tolerances[s.substr(0, eq)] = std::stod(s.substr(eq + 1));
        } catch (const std::exception &) {
            throw IoError("--tol value in '" + s + "' is not a number");
        }
    }
}

void render_table(const Json &j, std::ostream &os, const std::string &prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object())
            render_table(*it, os, key);
        else if (it->is_array() && !it->empty() && (*it)[0].is_number() && it->size() <= 16)
            os << key << ": " << it->dump() << "\n";
        else if (it->is_array())
            os << key << ": [" << it->size() << " entries]\n";
        else
            os << key << ": " << it->dump() << "\n";
    }
}

void emit(const Json &report, const RunConfig &cfg) {
    std::ostringstream body;
    if (cfg.format == "table")
        render_table(report, body);
    else
        body << report.dump(2) << "\n";
    if (cfg.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(cfg.out_path);
        if (!out)
            throw IoError("cannot open output path '" + cfg.out_path + "'");
        out << body.str();
    }
}

GroupAction action_from_tokens(const std::vector<std::string> &tokens) {
    if (tokens.empty())
        throw IoError("--action expects 'full D' or 'local D1 D2'");
    auto as_int = [](const std::string &s, const char *what) {
        try {
            return std::stoi(s);
        } catch (const std::exception &) {
            throw IoError(std::string("--action: '") + s + "' is not an integer " + what);
        }
    };
    if (tokens[0] == "full" || tokens[0] == "full-unitary") {
        if (tokens.size() != 2)
            throw IoError("--action full expects one dimension");
        return GroupAction::full_unitary_adjoint(as_int(tokens[1], "dimension"));
    }
    if (tokens[0] == "local") {
        if (tokens.size() != 3)
            throw IoError("--action local expects two dimensions");
        return GroupAction::local_unitary_product(as_int(tokens[1], "dimension"),
                                                  as_int(tokens[2], "dimension"));
    }
    throw IoError("--action kind '" + tokens[0] + "' is not one of full|local");
}

DensityState load_state(const std::string &path, const std::string &context) {
    HermitianOperator op = hermitian_from_json(load_json_file(path), context);
    try {
        return DensityState(op, 1e-8, 1e-8);
    } catch (const DomainError &e) {
        throw IoError(context + ": not a density state: " + e.what());
    }
}

FrankWolfeOptions fw_options(const RunConfig &cfg, double dist_tol) {
    FrankWolfeOptions fw;
    fw.dist_tol = dist_tol;
    fw.max_iter = cfg.max_iter;
    fw.seed = cfg.seed;
    return fw;
}

int status_exit_code(MembershipStatus s) {
    return s == MembershipStatus::Inconclusive ? 2 : 0;
}

// ---- subcommand runners ----------------------------------------------------

int run_schmidt(const std::string &vector_path, const RunConfig &cfg) {
    const BipartiteVector input =
        bipartite_vector_from_json(load_json_file(vector_path), "vector");
    const double tol = cfg.tol("schmidt", 1e-10);
    const SchmidtDecomposition sd = schmidt_decompose(input.psi, input.dims, tol);
    Json report = schmidt_to_json(sd, input.dims);
    report["tolerances"] = Json{{"schmidt", tol}};
    emit(report, cfg);
    return 0;
}

int run_certify_maxent(const std::string &state_path, int d1, int d2, const RunConfig &cfg) {
    const DensityState rho = load_state(state_path, "state");
    const double tol = cfg.tol("maxent", 1e-8);
    const MaxEntanglementVerdict v = is_maximally_entangled(rho, BipartiteDims(d1, d2), tol);
    Json report = maxent_to_json(v);
    report["tolerances"] = Json{{"maxent", tol}};
    emit(report, cfg);
    return 0;
}

int run_convex_body(const std::string &state_path, const std::vector<std::string> &action_tokens,
                    const std::string &method_name, const RunConfig &cfg) {
    const GroupAction action = action_from_tokens(action_tokens);
    const HermitianOperator x0 = hermitian_from_json(load_json_file(state_path), "state");
    VerdictMethod method = VerdictMethod::Krylov;
    if (method_name == "blocks")
        method = VerdictMethod::BlockNorms;
    else if (method_name == "marginal")
        method = VerdictMethod::PartialTrace;
    else if (method_name != "krylov")
        throw IoError("--method must be one of krylov|blocks|marginal");
    const double tol = cfg.tol("closure", 1e-9);
    const ConvexBodyVerdict v = is_convex_body(action, x0, method, tol);
    Json report = convex_body_verdict_to_json(v);
    report["tolerances"] = Json{{"closure", tol}};
    emit(report, cfg);
    return 0;
}

int run_blocks(const std::string &state_path, int d1, int d2, const RunConfig &cfg) {
    const HermitianOperator x = hermitian_from_json(load_json_file(state_path), "state");
    emit(blocks_to_json(block_decompose(x, BipartiteDims(d1, d2))), cfg);
    return 0;
}

int run_membership(const std::string &target_path, const std::vector<std::string> &action_tokens,
                   const std::string &base_path, const RunConfig &cfg) {
    const GroupAction action = action_from_tokens(action_tokens);
    const HermitianOperator target = hermitian_from_json(load_json_file(target_path), "target");
    const DensityState base = load_state(base_path, "base");
    OrbitSpec orbit = action.kind() == GroupAction::Kind::FullUnitaryAdjoint
                          ? OrbitSpec::full_unitary(base)
                          : OrbitSpec::local(base, action.local_dims());
    const double dist_tol = cfg.tol("dist", 1e-6);
    const MembershipVerdict v = frank_wolfe_membership(target, orbit, fw_options(cfg, dist_tol));
    Json report = membership_to_json(v);
    report["tolerances"] = Json{{"dist", dist_tol}};
    emit(report, cfg);
    return status_exit_code(v.status);
}

int run_ball(const std::string &orbit_kind, bool pure, int d, const std::string &base_path,
             int d1, int d2, const std::string &slice_name, int directions, const RunConfig &cfg) {
    if (orbit_kind == "full-unitary" && pure) {
        // Exact closed form for the density body.
        Json report = ball_to_json(inscribed_ball_density_states(d));
        emit(report, cfg);
        return 0;
    }
    if (base_path.empty())
        throw IoError("--base FILE is required unless --orbit full-unitary --pure");
    const DensityState base = load_state(base_path, "base");
    OrbitSpec orbit = orbit_kind == "full-unitary"
                          ? OrbitSpec::full_unitary(base)
                          : OrbitSpec::local(base, BipartiteDims(d1, d2));
    AffineSlice slice = AffineSlice::Full;
    if (slice_name == "block00")
        slice = AffineSlice::Block00;
    else if (slice_name != "full")
        throw IoError("--slice must be one of full|block00");

    RadiusProbeOptions opts;
    opts.seed = cfg.seed;
    opts.bisect_tol = cfg.tol("bisect", 1e-3);
    opts.fw = fw_options(cfg, cfg.tol("dist", 1e-5));
    if (orbit_kind == "local" && !orbit.schmidt_coefficients.empty() && d1 == 2 && d2 == 2 &&
        slice == AffineSlice::Full) {
        const double l0 = orbit.schmidt_coefficients.front();
        const double lambda_sq = std::max(l0 * l0, 1.0 - l0 * l0);
        opts.analytic_upper = two_qubit_orbit_ball_bound(lambda_sq);
    }
    const BallEstimate est = inscribed_radius_estimate(
        orbit, DensityState::maximally_mixed(base.dim()), directions, slice, opts);
    Json report = ball_to_json(est);
    report["tolerances"] = Json{{"bisect", opts.bisect_tol}, {"dist", opts.fw.dist_tol}};
    emit(report, cfg);
    return 0;
}

int run_ellipsoid_check(double lambda_sq, int samples, double radius_r, double radius_r0,
                        int directions, const RunConfig &cfg) {
    FrankWolfeOptions fw = fw_options(cfg, cfg.tol("dist", 1e-4));

    Json measured = Json::object();
    if (!(radius_r > 0.0)) {
        ComplexVector phi(4, Complex(0.0));
        phi[0] = std::sqrt(lambda_sq);
        phi[3] = std::sqrt(1.0 - lambda_sq);
        OrbitSpec orbit = OrbitSpec::local(projector(phi), BipartiteDims(2, 2));
        RadiusProbeOptions opts;
        opts.seed = cfg.seed;
        opts.bisect_tol = cfg.tol("bisect", 1e-3);
        opts.fw = fw_options(cfg, cfg.tol("dist", 1e-5));
        opts.analytic_upper = two_qubit_orbit_ball_bound(lambda_sq);
        opts.verify_center = false; // II is always inside a local-orbit hull
        const BallEstimate est = inscribed_radius_estimate(
            orbit, DensityState::maximally_mixed(4), directions, AffineSlice::Full, opts);
        radius_r = est.radius_lower;
        measured["R"] = ball_to_json(est);
    }
    if (!(radius_r0 > 0.0)) {
        // Largest certified ball in the 00-block body through the even
        // mixture of the two aligned product states.
        ComplexVector e00(4, Complex(0.0)), e11(4, Complex(0.0));
        e00[0] = 1.0;
        e11[3] = 1.0;
        HermitianOperator rho0 = 0.5 * projector(e00).op();
        rho0 += 0.5 * projector(e11).op();
        OrbitSpec orbit0 = OrbitSpec::local(DensityState(rho0), BipartiteDims(2, 2));
        RadiusProbeOptions opts;
        opts.seed = cfg.seed ^ 0x5151ULL;
        opts.bisect_tol = cfg.tol("bisect", 1e-3);
        opts.fw = fw_options(cfg, cfg.tol("dist", 1e-5));
        opts.verify_center = false;
        const BallEstimate est = inscribed_radius_estimate(
            orbit0, DensityState::maximally_mixed(4), directions, AffineSlice::Block00, opts);
        radius_r0 = est.radius_lower;
        measured["r0"] = ball_to_json(est);
    }

    const EllipsoidContainmentReport rep =
        block_ellipsoid_containment(lambda_sq, radius_r, radius_r0, samples, fw);
    Json report = ellipsoid_report_to_json(rep);
    if (!measured.empty())
        report["measured"] = std::move(measured);
    report["tolerances"] = Json{{"dist", fw.dist_tol}};
    report["note"] = "local-orbit memberships use a heuristic LMO; Inside verdicts carry "
                     "explicit mixtures, outside verdicts are not certificates";
    emit(report, cfg);
    return rep.all_inside ? 0 : 2;
}

int run_channel_report(const std::string &channel_path, const RunConfig &cfg) {
    const ChannelInput input = channel_from_json(load_json_file(channel_path), "channel");
    FrankWolfeOptions fw = fw_options(cfg, cfg.tol("dist", 1e-6));
    const ChannelReport rep = analyze_channel(input.to_kraus(), true, fw);
    Json report = channel_report_to_json(rep);
    report["tolerances"] = Json{{"dist", fw.dist_tol}};
    report["seed"] = cfg.seed;
    emit(report, cfg);
    if (rep.mixed_unitary && rep.mixed_unitary->status == MembershipStatus::Inconclusive)
        return 2;
    return 0;
}

int run_kostant(const std::vector<double> &spectrum, const RunConfig &cfg) {
    emit(torus_check_to_json(torus_fixed_point_check(spectrum)), cfg);
    return 0;
}

int run_haar_average(int d, int samples, const RunConfig &cfg) {
    if (d < 1 || samples < 1)
        throw IoError("haar-average: --d and --samples must be positive");
    // Fixed, reproducible probe observable with a linear spectrum.
    std::vector<double> spectrum(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
        spectrum[static_cast<size_t>(i)] = static_cast<double>(d - i);
    const HermitianOperator x = HermitianOperator::diagonal(spectrum);
    const HermitianOperator limit = depolarize(x);

    Rng rng(cfg.seed);
    ComplexMatrix acc(d);
    Json checkpoints = Json::array();
    int next_checkpoint = 1;
    for (int n = 1; n <= samples; ++n) {
        const ComplexMatrix u = haar_random_unitary(d, rng);
        acc += u * x.matrix() * u.adjoint();
        if (n == next_checkpoint || n == samples) {
            ComplexMatrix mean = acc;
            mean *= Complex(1.0 / n);
            checkpoints.push_back(Json{{"n", n}, {"error", (mean - limit.matrix()).frobenius_norm()}});
            next_checkpoint *= 10;
        }
    }
    Json report{{"d", d},
                {"samples", samples},
                {"seed", cfg.seed},
                {"observable", hermitian_to_json(x)},
                {"limit", hermitian_to_json(limit)},
                {"checkpoints", std::move(checkpoints)}};
    emit(report, cfg);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Convex-body certificates for compact-group orbits of quantum states and channels"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<std::string> tol_specs;

    // schmidt
    auto *schmidt_cmd = app.add_subcommand("schmidt", "Schmidt decomposition of a bipartite vector");
    std::string schmidt_vector;
    schmidt_cmd->add_option("--vector", schmidt_vector, "Bipartite vector JSON")->required();
    add_common_flags(schmidt_cmd, cfg, tol_specs);

    // certify-maxent
    auto *maxent_cmd =
        app.add_subcommand("certify-maxent", "Maximal-entanglement certificate for a pure state");
    std::string maxent_state;
    int maxent_d1 = 2, maxent_d2 = 2;
    maxent_cmd->add_option("--state", maxent_state, "Density matrix JSON")->required();
    maxent_cmd->add_option("--d1", maxent_d1, "First factor dimension")->required();
    maxent_cmd->add_option("--d2", maxent_d2, "Second factor dimension")->required();
    add_common_flags(maxent_cmd, cfg, tol_specs);

    // convex-body
    auto *body_cmd = app.add_subcommand("convex-body", "Orbit-convexity decision for a state");
    std::string body_state, body_method = "krylov";
    std::vector<std::string> body_action;
    body_cmd->add_option("--state", body_state, "Hermitian matrix JSON")->required();
    body_cmd->add_option("--action", body_action, "Action: 'full D' or 'local D1 D2'")
        ->required()
        ->expected(1, 3);
    body_cmd->add_option("--method", body_method, "krylov|blocks|marginal");
    add_common_flags(body_cmd, cfg, tol_specs);

    // blocks
    auto *blocks_cmd = app.add_subcommand("blocks", "Irreducible block components of an operator");
    std::string blocks_state;
    int blocks_d1 = 2, blocks_d2 = 2;
    blocks_cmd->add_option("--state", blocks_state, "Hermitian matrix JSON")->required();
    blocks_cmd->add_option("--d1", blocks_d1, "First factor dimension")->required();
    blocks_cmd->add_option("--d2", blocks_d2, "Second factor dimension")->required();
    add_common_flags(blocks_cmd, cfg, tol_specs);

    // membership
    auto *member_cmd =
        app.add_subcommand("membership", "Frank-Wolfe membership of a target in a convexed orbit");
    std::string member_target, member_base;
    std::vector<std::string> member_action;
    member_cmd->add_option("--target", member_target, "Target Hermitian matrix JSON")->required();
    member_cmd->add_option("--action", member_action, "Action: 'full D' or 'local D1 D2'")
        ->required()
        ->expected(1, 3);
    member_cmd->add_option("--base", member_base, "Orbit base density matrix JSON")->required();
    add_common_flags(member_cmd, cfg, tol_specs);

    // ball
    auto *ball_cmd = app.add_subcommand("ball", "Inscribed-ball radius of a convexed orbit");
    std::string ball_orbit = "full-unitary", ball_base, ball_slice = "full";
    bool ball_pure = false;
    int ball_d = 2, ball_d1 = 2, ball_d2 = 2, ball_directions = 16;
    ball_cmd->add_option("--orbit", ball_orbit, "full-unitary|local")->required();
    ball_cmd->add_flag("--pure", ball_pure, "Base is a pure state (exact formula path)");
    ball_cmd->add_option("--d", ball_d, "Dimension for the exact pure-state path");
    ball_cmd->add_option("--base", ball_base, "Orbit base density matrix JSON");
    ball_cmd->add_option("--d1", ball_d1, "First factor dimension (local)");
    ball_cmd->add_option("--d2", ball_d2, "Second factor dimension (local)");
    ball_cmd->add_option("--slice", ball_slice, "full|block00");
    ball_cmd->add_option("--directions", ball_directions, "Sampled directions");
    add_common_flags(ball_cmd, cfg, tol_specs);

    // ellipsoid-check
    auto *ell_cmd = app.add_subcommand("ellipsoid-check",
                                       "Block-ellipsoid containment in a two-qubit orbit hull");
    double ell_lambda_sq = 0.75, ell_r = 0.0, ell_r0 = 0.0;
    int ell_samples = 200, ell_directions = 16;
    ell_cmd->add_option("--lambda-sq", ell_lambda_sq, "Schmidt weight in [1/2, 1]")->required();
    ell_cmd->add_option("--samples", ell_samples, "Boundary samples");
    ell_cmd->add_option("--R", ell_r, "Linear-block radius (measured when omitted)");
    ell_cmd->add_option("--r0", ell_r0, "00-block radius (measured when omitted)");
    ell_cmd->add_option("--directions", ell_directions, "Directions for radius measurement");
    add_common_flags(ell_cmd, cfg, tol_specs);

    // channel-report
    auto *chan_cmd = app.add_subcommand("channel-report",
                                        "Stochasticity, positivity, and mixed-unitary certification");
    std::string chan_path;
    chan_cmd->add_option("--channel", chan_path, "Channel JSON (kraus or choi)")->required();
    add_common_flags(chan_cmd, cfg, tol_specs);

    // kostant
    auto *kostant_cmd = app.add_subcommand("kostant", "Torus fixed-point check for a spectrum");
    std::vector<double> kostant_spectrum;
    kostant_cmd->add_option("--spectrum", kostant_spectrum, "Eigenvalues")->required()->expected(-1);
    add_common_flags(kostant_cmd, cfg, tol_specs);

    // haar-average
    auto *haar_cmd = app.add_subcommand("haar-average", "Monte Carlo averaging demo over the unitary group");
    int haar_d = 2, haar_samples = 10000;
    haar_cmd->add_option("--d", haar_d, "Dimension");
    haar_cmd->add_option("--samples", haar_samples, "Sample count");
    add_common_flags(haar_cmd, cfg, tol_specs);

    CLI11_PARSE(app, argc, argv);

    try {
        parse_tol_specs(tol_specs, cfg);
        if (schmidt_cmd->parsed())
            return run_schmidt(schmidt_vector, cfg);
        if (maxent_cmd->parsed())
            return run_certify_maxent(maxent_state, maxent_d1, maxent_d2, cfg);
        if (body_cmd->parsed())
            return run_convex_body(body_state, body_action, body_method, cfg);
        if (blocks_cmd->parsed())
            return run_blocks(blocks_state, blocks_d1, blocks_d2, cfg);
        if (member_cmd->parsed())
            return run_membership(member_target, member_action, member_base, cfg);
        if (ball_cmd->parsed())
            return run_ball(ball_orbit, ball_pure, ball_d, ball_base, ball_d1, ball_d2, ball_slice,
                            ball_directions, cfg);
        if (ell_cmd->parsed())
            return run_ellipsoid_check(ell_lambda_sq, ell_samples, ell_r, ell_r0, ell_directions,
                                       cfg);
        if (chan_cmd->parsed())
            return run_channel_report(chan_path, cfg);
        if (kostant_cmd->parsed())
            return run_kostant(kostant_spectrum, cfg);
        if (haar_cmd->parsed())
            return run_haar_average(haar_d, haar_samples, cfg);
    } catch (const IoError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
