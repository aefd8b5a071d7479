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

#pragma once

#include <string>

#include <json.hpp>

#include "orbitgeom/channel.hpp"

namespace orbitgeom {

using Json = nlohmann::json;

// Matrices travel as {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
// Bipartite vectors as {"d1": n, "d2": m, "re": [...], "im": [...]} with the
// flat index convention i*d2 + k.  Channels as {"d": n, "kraus": [matrix...]}
// or {"d": n, "choi": matrix}.  Parse failures throw IoError naming the
// offending field.

Json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const Json &j, const std::string &context);

Json hermitian_to_json(const HermitianOperator &x);
HermitianOperator hermitian_from_json(const Json &j, const std::string &context,
                                      double hermiticity_tol = 1e-8);

struct BipartiteVector {
    ComplexVector psi;
    BipartiteDims dims;
};

Json bipartite_vector_to_json(const ComplexVector &psi, const BipartiteDims &dims);
BipartiteVector bipartite_vector_from_json(const Json &j, const std::string &context);

struct ChannelInput {
    int d = 0;
    std::optional<KrausMap> kraus;
    std::optional<ChoiMatrix> choi;

    /// Choi form, converting when only Kraus operators were supplied.
    ChoiMatrix to_choi() const;
    /// Kraus form, converting (PSD required) when only a Choi was supplied.
    KrausMap to_kraus() const;
};

Json channel_to_json(const KrausMap &k);
Json channel_to_json(const ChoiMatrix &c);
ChannelInput channel_from_json(const Json &j, const std::string &context);

Json schmidt_to_json(const SchmidtDecomposition &sd, const BipartiteDims &dims);
Json maxent_to_json(const MaxEntanglementVerdict &v);
Json blocks_to_json(const BlockComponents &b);
Json closure_report_to_json(const InvariantSubspaceReport &r);
Json convex_body_verdict_to_json(const ConvexBodyVerdict &v);
Json torus_check_to_json(const TorusFixedPointCheck &t);
Json membership_to_json(const MembershipVerdict &v);
Json ball_to_json(const BallEstimate &b);
Json ellipsoid_report_to_json(const EllipsoidContainmentReport &r);
Json separability_to_json(const SeparabilityReport &r);
Json channel_report_to_json(const ChannelReport &r);
Json mixed_unitary_certificate_to_json(const MixedUnitaryCertificate &c);

/// Reads a whole file into a Json value; IoError on parse failure.
Json load_json_file(const std::string &path);

} // namespace orbitgeom
