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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "orbitgeom/json_io.hpp"
#include "orbitgeom/rng.hpp"

using namespace orbitgeom;

TEST_CASE("matrix JSON round-trips at full precision") {
    Rng rng(3);
    for (int rep = 0; rep < 50; ++rep) {
        const int d = 2 + static_cast<int>(rng.integer() % 4);
        const ComplexMatrix m = rng.ginibre(d);
        const Json j = matrix_to_json(m);
        const ComplexMatrix back = matrix_from_json(j, "roundtrip");
        // Bit-exact: the writer emits shortest round-trip decimal forms.
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                CHECK(back(r, c) == m(r, c));

        // Through a serialized string as well.
        const ComplexMatrix back2 = matrix_from_json(Json::parse(j.dump()), "roundtrip");
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                CHECK(back2(r, c) == m(r, c));
    }
}

TEST_CASE("bipartite vector JSON round-trips and uses the i*d2+k convention") {
    ComplexVector psi(6, Complex(0.0));
    psi[0 * 3 + 1] = Complex(0.5, -0.25); // i=0, k=1
    psi[1 * 3 + 2] = Complex(0.0, 1.0);   // i=1, k=2
    const BipartiteDims dims(2, 3);
    const Json j = bipartite_vector_to_json(psi, dims);
    CHECK(j["d1"] == 2);
    CHECK(j["d2"] == 3);
    CHECK(j["re"][1] == 0.5);
    CHECK(j["im"][5] == 1.0);
    const BipartiteVector back = bipartite_vector_from_json(j, "vector");
    CHECK(back.dims.d1 == 2);
    for (size_t k = 0; k < psi.size(); ++k)
        CHECK(back.psi[k] == psi[k]);
}

TEST_CASE("parse failures name the offending field") {
    const Json missing_dim = Json{{"re", Json::array()}, {"im", Json::array()}};
    CHECK_THROWS_WITH_AS((void)matrix_from_json(missing_dim, "state"),
                         doctest::Contains("missing field 'dim'"), IoError);

    Json bad_rows = Json{{"dim", 2}, {"re", Json::array({Json::array({1.0, 0.0})})},
                         {"im", Json::array()}};
    CHECK_THROWS_WITH_AS((void)matrix_from_json(bad_rows, "state"),
                         doctest::Contains("field 're'"), IoError);

    Json non_numeric = Json{{"dim", 1}, {"re", Json::array({Json::array({"x"})})},
                            {"im", Json::array({Json::array({0.0})})}};
    CHECK_THROWS_WITH_AS((void)matrix_from_json(non_numeric, "state"),
                         doctest::Contains("non-numeric"), IoError);

    Json both = Json{{"d", 2}, {"kraus", Json::array()}, {"choi", Json::object()}};
    CHECK_THROWS_WITH_AS((void)channel_from_json(both, "channel"),
                         doctest::Contains("exactly one of 'kraus' or 'choi'"), IoError);
}

TEST_CASE("channel JSON: kraus and choi forms cross-convert") {
    Rng rng(7);
    std::vector<ComplexMatrix> ops;
    for (int k = 0; k < 2; ++k) {
        ComplexMatrix x = rng.ginibre(2);
        x *= Complex(0.3);
        ops.push_back(std::move(x));
    }
    const KrausMap kraus(ops);
    const Json jk = channel_to_json(kraus);
    const ChannelInput from_kraus = channel_from_json(jk, "channel");
    REQUIRE(from_kraus.kraus.has_value());
    CHECK((from_kraus.to_choi().matrix - choi_from_kraus(kraus).matrix).norm() < 1e-12);

    const Json jc = channel_to_json(choi_from_kraus(kraus));
    const ChannelInput from_choi = channel_from_json(jc, "channel");
    REQUIRE(from_choi.choi.has_value());
    // Kraus recovered from the Choi reproduces the same Choi matrix.
    CHECK((choi_from_kraus(from_choi.to_kraus()).matrix - choi_from_kraus(kraus).matrix).norm() <
          1e-9);

    const Json jh = hermitian_to_json(HermitianOperator::identity(2));
    CHECK_NOTHROW((void)hermitian_from_json(jh, "h"));
    Json skew = jh;
    skew["im"][0][1] = 0.5; // breaks Hermiticity
    CHECK_THROWS_AS((void)hermitian_from_json(skew, "h"), IoError);
}

TEST_CASE("report serializers carry seeds and verdict fields") {
    Rng rng(11);
    const OrbitSpec orbit = OrbitSpec::full_unitary(projector(rng.random_vector(2)));
    FrankWolfeOptions fw;
    fw.dist_tol = 1e-6;
    fw.seed = 42;
    const MembershipVerdict v =
        frank_wolfe_membership(HermitianOperator::normalized_identity(2), orbit, fw);
    const Json j = membership_to_json(v);
    CHECK(j["seed"] == 42);
    CHECK(j["status"] == "inside");
    CHECK(j.contains("witness_mixture"));

    const Json jb = ball_to_json(inscribed_ball_density_states(3));
    CHECK(jb["radius_lower"] == jb["radius_upper"]);
    CHECK(jb.contains("boundary_witness"));
}
