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

#include "orbitgeom/hermitian.hpp"
#include "orbitgeom/rng.hpp"
#include "orbitgeom/spectral.hpp"

using namespace orbitgeom;

namespace {

// Independent oracle: trace of a matrix product by raw index summation.
Complex trace_product_oracle(const ComplexMatrix &a, const ComplexMatrix &b) {
    Complex t = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            t += a(i, j) * b(j, i);
    return t;
}

// Independent oracle: partial trace over the second factor by index sums.
ComplexMatrix trace_out_second_oracle(const ComplexMatrix &x, int d1, int d2) {
    ComplexMatrix out(d1);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j)
            for (int k = 0; k < d2; ++k)
                out(i, j) += x(i * d2 + k, j * d2 + k);
    return out;
}

HermitianOperator random_hermitian_op(Rng &rng, int d) {
    return HermitianOperator(rng.random_hermitian(d));
}

ComplexVector basis_vector(int d, int k) {
    ComplexVector v(static_cast<size_t>(d), Complex(0.0));
    v[static_cast<size_t>(k)] = 1.0;
    return v;
}

// (e1 (x) f1 + e2 (x) f2)/sqrt(2) on C^2 (x) C^2.
ComplexVector bell_vector() {
    ComplexVector v(4, Complex(0.0));
    v[0] = 1.0 / std::sqrt(2.0);
    v[3] = 1.0 / std::sqrt(2.0);
    return v;
}

} // namespace

TEST_CASE("frobenius_inner on identities and projectors") {
    auto i2 = HermitianOperator::identity(2);
    CHECK(frobenius_inner(i2, i2) == doctest::Approx(2.0).epsilon(1e-14));

    auto p0 = HermitianOperator::diagonal({1.0, 0.0});
    auto p1 = HermitianOperator::diagonal({0.0, 1.0});
    CHECK(frobenius_inner(p0, p1) == doctest::Approx(0.0).epsilon(1e-14));

    // tr(P^2) = 1 for rank-1 projectors, brute force over random psi.
    Rng rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        const int d = 2 + static_cast<int>(rng.integer() % 5);
        auto p = projector(rng.random_vector(d));
        const Complex oracle = trace_product_oracle(p.matrix(), p.matrix());
        CHECK(std::abs(oracle - Complex(1.0)) < 1e-10);
        CHECK(frobenius_inner(p.op(), p.op()) == doctest::Approx(1.0).epsilon(1e-10));
    }

    auto i3 = HermitianOperator::identity(3);
    CHECK_THROWS_AS((void)frobenius_inner(i2, i3), DimensionError);
}

TEST_CASE("eigh on pinned spectra") {
    auto d312 = eigh(HermitianOperator::diagonal({3.0, 1.0, 2.0}));
    CHECK(d312.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(d312.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(d312.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-12));

    // Pauli-x: characteristic polynomial lambda^2 - 1 by hand.
    ComplexMatrix px(2);
    px(0, 1) = 1.0;
    px(1, 0) = 1.0;
    auto sx = eigh(HermitianOperator(px));
    CHECK(sx.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sx.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-12));

    auto mm = eigh(HermitianOperator::normalized_identity(4));
    for (double lam : mm.eigenvalues)
        CHECK(lam == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("eigh reconstruction and orthonormality on random Hermitian matrices") {
    Rng rng(11);
    for (int rep = 0; rep < 1000; ++rep) {
        const int d = 2 + static_cast<int>(rng.integer() % 7);
        auto x = random_hermitian_op(rng, d);
        auto spec = eigh(x);

        const double scale = std::max(1.0, x.norm());
        CHECK((spec.reconstruct() - x.matrix()).frobenius_norm() <= 1e-8 * scale);

        // Eigenvector matrix unitary within 1e-8.
        const ComplexMatrix vtv = spec.eigenvectors.adjoint() * spec.eigenvectors;
        CHECK((vtv - ComplexMatrix::identity(d)).frobenius_norm() < 1e-8);

        // Residual per eigenpair.
        for (int k = 0; k < d; ++k) {
            ComplexVector v = spec.eigenvector(k);
            ComplexVector av = x.matrix().apply(v);
            double res = 0.0;
            for (int i = 0; i < d; ++i)
                res += std::norm(av[static_cast<size_t>(i)] -
                                 spec.eigenvalues[static_cast<size_t>(k)] * v[static_cast<size_t>(i)]);
            CHECK(std::sqrt(res) <= 1e-8 * scale);
        }

        // frobenius_inner(x,x) matches sum of squared eigenvalues.
        double sum2 = 0.0;
        for (double lam : spec.eigenvalues)
            sum2 += lam * lam;
        CHECK(frobenius_inner(x, x) == doctest::Approx(sum2).epsilon(1e-8));
        CHECK(frobenius_inner(x, x) >= 0.0);
    }
}

TEST_CASE("tensor_product pinned values and trace multiplicativity") {
    auto i2 = ComplexMatrix::identity(2);
    CHECK((tensor_product(i2, i2) - ComplexMatrix::identity(4)).frobenius_norm() == 0.0);

    ComplexMatrix p(2);
    p(0, 0) = 1.0;
    auto pp = tensor_product(p, p);
    CHECK(pp.dim() == 4);
    CHECK(pp(0, 0) == Complex(1.0));
    CHECK(pp.frobenius_norm() == doctest::Approx(1.0));

    Rng rng(3);
    for (int rep = 0; rep < 100; ++rep) {
        const int da = 2 + static_cast<int>(rng.integer() % 3);
        const int db = 2 + static_cast<int>(rng.integer() % 3);
        auto a = rng.ginibre(da);
        auto b = rng.ginibre(db);
        // Direct expansion oracle for the trace of the Kronecker product.
        Complex oracle = 0.0;
        for (int i = 0; i < da; ++i)
            for (int k = 0; k < db; ++k)
                oracle += a(i, i) * b(k, k);
        CHECK(std::abs(tensor_product(a, b).trace() - oracle) < 1e-12);
        CHECK(std::abs(oracle - a.trace() * b.trace()) < 1e-10);
    }
}

TEST_CASE("partial_trace pinned values") {
    auto bell = projector(bell_vector());
    auto reduced = partial_trace(bell.op(), 2, 2, TraceSide::First);
    CHECK((reduced.matrix() - (ComplexMatrix::identity(2) * Complex(0.5))).frobenius_norm() < 1e-12);

    auto tr1_i4 = partial_trace(HermitianOperator::identity(4), 2, 2, TraceSide::First);
    CHECK((tr1_i4.matrix() - (ComplexMatrix::identity(2) * Complex(2.0))).frobenius_norm() < 1e-13);

    CHECK_THROWS_AS((void)partial_trace(HermitianOperator::identity(6), 4, 2, TraceSide::First),
                    DimensionError);
}

TEST_CASE("partial_trace against index-sum oracle on tensor inputs") {
    Rng rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        const int d1 = 2 + static_cast<int>(rng.integer() % 2);
        const int d2 = 2 + static_cast<int>(rng.integer() % 2);
        auto a = random_hermitian_op(rng, d1);
        auto b = random_hermitian_op(rng, d2);
        auto x = HermitianOperator(tensor_product(a.matrix(), b.matrix()), 1e-8);

        // tr_2(a (x) b) = tr(b) a, via the independent oracle.
        auto got = partial_trace(x, d1, d2, TraceSide::Second);
        auto oracle = trace_out_second_oracle(x.matrix(), d1, d2);
        CHECK((got.matrix() - oracle).frobenius_norm() < 1e-13);
        CHECK((got.matrix() - a.matrix() * b.matrix().trace()).frobenius_norm() < 1e-12);

        // tr_1(a (x) b) = tr(a) b, exactly within 1e-12.
        auto got1 = partial_trace(x, d1, d2, TraceSide::First);
        CHECK((got1.matrix() - b.matrix() * a.matrix().trace()).frobenius_norm() < 1e-12);

        // Trace preservation.
        CHECK(got.trace() == doctest::Approx(x.trace()).epsilon(1e-12));
        CHECK(got1.trace() == doctest::Approx(x.trace()).epsilon(1e-12));
    }
}

TEST_CASE("partial_transpose pinned values and involution") {
    // Identity is PT-invariant.
    auto i4 = HermitianOperator::identity(4);
    CHECK((partial_transpose(i4, 2, 2).matrix() - i4.matrix()).frobenius_norm() == 0.0);

    // PT(P_bell) = SWAP/2 entrywise; its antisymmetric eigenvector has
    // eigenvalue -1/2 (4x4 flip operator over 2).
    auto bell = projector(bell_vector());
    auto pt = partial_transpose(bell.op(), 2, 2);
    ComplexMatrix swap_half(4);
    swap_half(0, 0) = 0.5;
    swap_half(3, 3) = 0.5;
    swap_half(1, 2) = 0.5;
    swap_half(2, 1) = 0.5;
    CHECK((pt.matrix() - swap_half).frobenius_norm() < 1e-14);

    ComplexVector antisym(4, Complex(0.0));
    antisym[1] = 1.0 / std::sqrt(2.0);
    antisym[2] = -1.0 / std::sqrt(2.0);
    ComplexVector image = pt.matrix().apply(antisym);
    for (int i = 0; i < 4; ++i)
        CHECK(std::abs(image[static_cast<size_t>(i)] - Complex(-0.5) * antisym[static_cast<size_t>(i)]) <
              1e-14);

    // (a (x) b) -> a (x) b^T via the index oracle, and PT is an involution.
    Rng rng(23);
    for (int rep = 0; rep < 50; ++rep) {
        const int d1 = 2 + static_cast<int>(rng.integer() % 2);
        const int d2 = 2 + static_cast<int>(rng.integer() % 2);
        auto a = random_hermitian_op(rng, d1);
        auto b = random_hermitian_op(rng, d2);
        auto x = HermitianOperator(tensor_product(a.matrix(), b.matrix()), 1e-8);
        auto pt_x = partial_transpose(x, d1, d2);
        CHECK((pt_x.matrix() - tensor_product(a.matrix(), b.matrix().transpose())).frobenius_norm() <
              1e-13);
        auto twice = partial_transpose(pt_x, d1, d2);
        CHECK((twice.matrix() - x.matrix()).frobenius_norm() <= 1e-14 * x.norm());
        CHECK(pt_x.trace() == doctest::Approx(x.trace()).epsilon(1e-13));
    }
}

TEST_CASE("projector pinned values and degenerate input") {
    auto p = projector(basis_vector(2, 0));
    CHECK((p.matrix() - HermitianOperator::diagonal({1.0, 0.0}).matrix()).frobenius_norm() < 1e-15);

    ComplexVector plus = {Complex(1.0 / std::sqrt(2.0)), Complex(1.0 / std::sqrt(2.0))};
    auto pp = projector(plus);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(std::abs(pp.matrix()(i, j) - Complex(0.5)) < 1e-14);

    // Homogeneity of the quotient: unnormalized input gives the same state.
    ComplexVector two_e1 = {Complex(2.0), Complex(0.0)};
    CHECK((projector(two_e1).matrix() - p.matrix()).frobenius_norm() < 1e-15);

    CHECK_THROWS_AS((void)projector(ComplexVector(3, Complex(0.0))), DegenerateInputError);

    // Idempotency within 1e-10 and unit trace.
    Rng rng(5);
    auto q = projector(rng.random_vector(4));
    CHECK((q.matrix() * q.matrix() - q.matrix()).frobenius_norm() < 1e-10);
    CHECK(q.op().trace() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("traceless_part projection behaviour") {
    auto i3 = HermitianOperator::identity(3);
    CHECK(traceless_part(i3).norm() < 1e-15);

    // Pure state, d = 2: ||P - I/2|| = 1/sqrt(2).
    Rng rng(29);
    auto p = projector(rng.random_vector(2));
    CHECK(traceless_part(p.op()).norm() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

    for (int rep = 0; rep < 50; ++rep) {
        const int d = 2 + static_cast<int>(rng.integer() % 5);
        auto x = random_hermitian_op(rng, d);
        auto t = traceless_part(x);
        CHECK(std::abs(t.trace()) <= 1e-12);
        // Idempotent as a projection.
        CHECK((traceless_part(t).matrix() - t.matrix()).frobenius_norm() < 1e-13);
        // Orthogonal to the identity.
        CHECK(std::abs(frobenius_inner(t, HermitianOperator::identity(d))) <= 1e-12);
        // Fixed point on traceless input.
        CHECK((traceless_part(t).matrix() - t.matrix()).frobenius_norm() < 1e-13);
    }
}

TEST_CASE("validated constructors reject bad input") {
    ComplexMatrix skew(2);
    skew(0, 1) = Complex(0.0, 1.0);
    skew(1, 0) = Complex(0.0, 1.0); // not Hermitian: conj mismatch of 2i
    CHECK_THROWS_AS(HermitianOperator{skew}, DomainError);

    // Asymmetry below tolerance is symmetrized, not rejected.
    ComplexMatrix nearly(2);
    nearly(0, 1) = Complex(0.5, 1e-12);
    nearly(1, 0) = Complex(0.5, 1e-12);
    HermitianOperator h(nearly, 1e-10);
    CHECK(h.matrix().hermiticity_defect() == 0.0);

    CHECK_THROWS_AS(DensityState{HermitianOperator::identity(2)}, DomainError); // trace 2
    CHECK_THROWS_AS(DensityState{HermitianOperator::diagonal({1.5, -0.5})}, DomainError); // not PSD

    CHECK_THROWS_AS(ComplexMatrix(2, ComplexVector(3)), DimensionError);
    ComplexVector bad(4, Complex(0.0));
    bad[2] = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(ComplexMatrix(2, bad), DomainError);
}
