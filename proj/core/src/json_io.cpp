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

#include "orbitgeom/json_io.hpp"

#include <fstream>

namespace orbitgeom {

namespace {

const Json &require_field(const Json &j, const char *name, const std::string &context) {
    if (!j.is_object())
        throw IoError(context + ": expected a JSON object");
    auto it = j.find(name);
    if (it == j.end())
        throw IoError(context + ": missing field '" + name + "'");
    return *it;
}

int require_positive_int(const Json &j, const char *name, const std::string &context) {
    const Json &f = require_field(j, name, context);
    if (!f.is_number_integer() || f.get<long long>() < 1)
        throw IoError(context + ": field '" + name + "' must be a positive integer");
    return static_cast<int>(f.get<long long>());
}

std::vector<std::vector<double>> require_grid(const Json &j, const char *name, int dim,
                                              const std::string &context) {
    const Json &f = require_field(j, name, context);
    if (!f.is_array() || static_cast<int>(f.size()) != dim)
        throw IoError(context + ": field '" + name + "' must be an array of " +
                      std::to_string(dim) + " rows");
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<size_t>(dim));
    for (int r = 0; r < dim; ++r) {
        const Json &row = f[static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw IoError(context + ": field '" + name + "' row " + std::to_string(r) +
                          " must have " + std::to_string(dim) + " entries");
        std::vector<double> vals;
        vals.reserve(static_cast<size_t>(dim));
        for (const auto &e : row) {
            if (!e.is_number())
                throw IoError(context + ": field '" + name + "' contains a non-numeric entry");
            vals.push_back(e.get<double>());
        }
        rows.push_back(std::move(vals));
    }
    return rows;
}

std::vector<double> require_flat(const Json &j, const char *name, int len,
                                 const std::string &context) {
    const Json &f = require_field(j, name, context);
    if (!f.is_array() || static_cast<int>(f.size()) != len)
        throw IoError(context + ": field '" + name + "' must be an array of length " +
                      std::to_string(len));
    std::vector<double> vals;
    vals.reserve(static_cast<size_t>(len));
    for (const auto &e : f) {
        if (!e.is_number())
            throw IoError(context + ": field '" + name + "' contains a non-numeric entry");
        vals.push_back(e.get<double>());
    }
    return vals;
}

Json complex_vector_re(const ComplexVector &v) {
    Json a = Json::array();
    for (const auto &e : v)
        a.push_back(e.real());
    return a;
}

Json complex_vector_im(const ComplexVector &v) {
    Json a = Json::array();
    for (const auto &e : v)
        a.push_back(e.imag());
    return a;
}

} // namespace

Json matrix_to_json(const ComplexMatrix &m) {
    Json re = Json::array(), im = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json re_row = Json::array(), im_row = Json::array();
        for (int j = 0; j < m.dim(); ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return Json{{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const Json &j, const std::string &context) {
    const int dim = require_positive_int(j, "dim", context);
    const auto re = require_grid(j, "re", dim, context);
    const auto im = require_grid(j, "im", dim, context);
    ComplexMatrix m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            m(r, c) = Complex(re[static_cast<size_t>(r)][static_cast<size_t>(c)],
                              im[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    return m;
}

Json hermitian_to_json(const HermitianOperator &x) { return matrix_to_json(x.matrix()); }

HermitianOperator hermitian_from_json(const Json &j, const std::string &context,
                                      double hermiticity_tol) {
    ComplexMatrix m = matrix_from_json(j, context);
    try {
        return HermitianOperator(std::move(m), hermiticity_tol);
    } catch (const DomainError &e) {
        throw IoError(context + ": " + e.what());
    }
}

Json bipartite_vector_to_json(const ComplexVector &psi, const BipartiteDims &dims) {
    return Json{{"d1", dims.d1},
                {"d2", dims.d2},
                {"re", complex_vector_re(psi)},
                {"im", complex_vector_im(psi)}};
}

BipartiteVector bipartite_vector_from_json(const Json &j, const std::string &context) {
    const int d1 = require_positive_int(j, "d1", context);
    const int d2 = require_positive_int(j, "d2", context);
    const auto re = require_flat(j, "re", d1 * d2, context);
    const auto im = require_flat(j, "im", d1 * d2, context);
    ComplexVector psi(static_cast<size_t>(d1) * d2);
    for (size_t k = 0; k < psi.size(); ++k)
        psi[k] = Complex(re[k], im[k]);
    return BipartiteVector{std::move(psi), BipartiteDims(d1, d2)};
}

ChoiMatrix ChannelInput::to_choi() const {
    if (choi)
        return *choi;
    return choi_from_kraus(*kraus);
}

KrausMap ChannelInput::to_kraus() const {
    if (kraus)
        return *kraus;
    const KrausFromChoi back = kraus_from_choi(*choi);
    if (!back.completely_positive)
        throw DomainError("channel: Choi matrix is not PSD; no Kraus form exists");
    return back.map();
}

Json channel_to_json(const KrausMap &k) {
    Json ops = Json::array();
    for (const auto &x : k.operators)
        ops.push_back(matrix_to_json(x));
    return Json{{"d", k.dim()}, {"kraus", std::move(ops)}};
}

Json channel_to_json(const ChoiMatrix &c) {
    return Json{{"d", c.d}, {"choi", hermitian_to_json(c.matrix)}};
}

ChannelInput channel_from_json(const Json &j, const std::string &context) {
    const int d = require_positive_int(j, "d", context);
    ChannelInput input;
    input.d = d;
    const bool has_kraus = j.is_object() && j.contains("kraus");
    const bool has_choi = j.is_object() && j.contains("choi");
    if (has_kraus == has_choi)
        throw IoError(context + ": exactly one of 'kraus' or 'choi' must be present");
    if (has_kraus) {
        const Json &ops = j["kraus"];
        if (!ops.is_array() || ops.empty())
            throw IoError(context + ": field 'kraus' must be a nonempty array of matrices");
        std::vector<ComplexMatrix> mats;
        for (size_t k = 0; k < ops.size(); ++k) {
            ComplexMatrix m = matrix_from_json(ops[k], context + ".kraus[" + std::to_string(k) + "]");
            if (m.dim() != d)
                throw IoError(context + ": field 'kraus' entry " + std::to_string(k) +
                              " has dimension " + std::to_string(m.dim()) + ", expected " +
                              std::to_string(d));
            mats.push_back(std::move(m));
        }
        input.kraus.emplace(std::move(mats));
    } else {
        HermitianOperator m = hermitian_from_json(j["choi"], context + ".choi");
        if (m.dim() != d * d)
            throw IoError(context + ": field 'choi' has dimension " + std::to_string(m.dim()) +
                          ", expected d^2 = " + std::to_string(d * d));
        input.choi.emplace(std::move(m), d);
    }
    return input;
}

Json schmidt_to_json(const SchmidtDecomposition &sd, const BipartiteDims &dims) {
    Json left = Json::array(), right = Json::array();
    for (const auto &u : sd.left_vectors)
        left.push_back(Json{{"re", complex_vector_re(u)}, {"im", complex_vector_im(u)}});
    for (const auto &v : sd.right_vectors)
        right.push_back(Json{{"re", complex_vector_re(v)}, {"im", complex_vector_im(v)}});
    return Json{{"d1", dims.d1},           {"d2", dims.d2},
                {"rank", sd.rank},         {"coefficients", sd.coefficients},
                {"left_vectors", std::move(left)}, {"right_vectors", std::move(right)}};
}

Json maxent_to_json(const MaxEntanglementVerdict &v) {
    return Json{{"maximally_entangled", v.maximally_entangled}, {"residual", v.residual}};
}

Json blocks_to_json(const BlockComponents &b) {
    return Json{{"d1", b.dims.d1},
                {"d2", b.dims.d2},
                {"c_id", b.c_id},
                {"p10", hermitian_to_json(b.p10)},
                {"p01", hermitian_to_json(b.p01)},
                {"p00", hermitian_to_json(b.p00)},
                {"block_norms",
                 Json{{"id", b.norm_id}, {"b10", b.norm10}, {"b01", b.norm01}, {"b00", b.norm00}}}};
}

Json closure_report_to_json(const InvariantSubspaceReport &r) {
    return Json{{"closure_dim", r.closure_dim},
                {"ambient_dim", r.ambient_dim},
                {"added_per_iteration", r.residual_history}};
}

namespace {

const char *method_name(VerdictMethod m) {
    switch (m) {
    case VerdictMethod::Krylov:
        return "krylov";
    case VerdictMethod::BlockNorms:
        return "block_norms";
    case VerdictMethod::PartialTrace:
        return "partial_trace";
    }
    return "unknown";
}

const char *status_name(MembershipStatus s) {
    switch (s) {
    case MembershipStatus::Inside:
        return "inside";
    case MembershipStatus::LikelyOutside:
        return "likely_outside";
    case MembershipStatus::Inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

} // namespace

Json convex_body_verdict_to_json(const ConvexBodyVerdict &v) {
    Json j{{"is_body", v.is_body}, {"method", method_name(v.method)}, {"tol", v.tol}};
    if (v.closure) {
        j["closure_dim"] = v.closure->closure_dim;
        j["ambient_dim"] = v.closure->ambient_dim;
    }
    if (v.blocks)
        j["block_norms"] = Json{{"id", v.blocks->norm_id},
                                {"b10", v.blocks->norm10},
                                {"b01", v.blocks->norm01},
                                {"b00", v.blocks->norm00}};
    return j;
}

Json torus_check_to_json(const TorusFixedPointCheck &t) {
    Json verts = Json::array();
    for (const auto &v : t.vertex_projections)
        verts.push_back(v);
    return Json{{"vertex_projections", std::move(verts)},
                {"span_dim", t.span_dim},
                {"passes", t.passes}};
}

Json membership_to_json(const MembershipVerdict &v) {
    Json j{{"status", status_name(v.status)},
           {"distance", v.distance},
           {"fw_gap", v.fw_gap},
           {"iterations", v.iterations},
           {"heuristic_lmo", v.heuristic_lmo},
           {"seed", v.seed}};
    if (v.status == MembershipStatus::Inside) {
        Json mixture = Json::array();
        for (const auto &a : v.witness_mixture) {
            Json elems = Json::array();
            for (const auto &u : a.group_element)
                elems.push_back(matrix_to_json(u));
            mixture.push_back(Json{{"weight", a.weight},
                                   {"group_element", std::move(elems)},
                                   {"point", hermitian_to_json(a.point)}});
        }
        j["witness_mixture"] = std::move(mixture);
    }
    if (v.separating_functional) {
        j["separating_functional"] = hermitian_to_json(*v.separating_functional);
        j["margin"] = v.margin;
    }
    return j;
}

Json ball_to_json(const BallEstimate &b) {
    Json j{{"center", hermitian_to_json(b.center.op())},
           {"radius_lower", b.radius_lower},
           {"radius_upper", b.radius_upper},
           {"directions_tested", b.directions_tested},
           {"seed", b.seed}};
    if (b.boundary_witness) {
        j["boundary_witness"] = hermitian_to_json(b.boundary_witness->op());
        j["witness_distance"] = b.witness_distance;
    }
    return j;
}

Json ellipsoid_report_to_json(const EllipsoidContainmentReport &r) {
    Json j{{"all_inside", r.all_inside},
           {"samples", r.samples},
           {"inside", r.inside},
           {"volume_ratio", r.volume_ratio},
           {"lambda_sq", r.lambda_sq},
           {"R", r.radius_r},
           {"r0", r.radius_r0},
           {"heuristic_lmo", r.heuristic_lmo},
           {"seed", r.seed}};
    Json failures = Json::array();
    for (const auto &f : r.failures)
        failures.push_back(Json{{"status", status_name(f.status)},
                                {"distance", f.distance},
                                {"point", hermitian_to_json(f.point)}});
    j["failures"] = std::move(failures);
    return j;
}

Json separability_to_json(const SeparabilityReport &r) {
    const char *name = r.verdict == Separability::Separable    ? "separable"
                       : r.verdict == Separability::Entangled ? "entangled"
                                                               : "indeterminate";
    return Json{{"verdict", name},
                {"min_partial_transpose_eigenvalue", r.min_partial_transpose_eigenvalue}};
}

Json channel_report_to_json(const ChannelReport &r) {
    Json j{{"trace_preserving", r.trace_preserving},
           {"trace_residual", r.trace_residual},
           {"unital", r.unital},
           {"unital_residual", r.unital_residual},
           {"completely_positive", r.completely_positive},
           {"min_choi_eigenvalue", r.min_choi_eigenvalue}};
    if (r.mixed_unitary)
        j["mixed_unitary"] = membership_to_json(*r.mixed_unitary);
    else
        j["mixed_unitary"] = "not_attempted";
    return j;
}

Json mixed_unitary_certificate_to_json(const MixedUnitaryCertificate &c) {
    Json unitaries = Json::array();
    for (const auto &u : c.unitaries)
        unitaries.push_back(matrix_to_json(u));
    return Json{{"status", status_name(c.verdict.status)},
                {"weights", c.weights},
                {"unitaries", std::move(unitaries)},
                {"residual", c.reconstruction_residual},
                {"seed", c.verdict.seed}};
}

Json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw IoError("file '" + path + "': " + e.what());
    }
}

} // namespace orbitgeom
