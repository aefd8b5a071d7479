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

#include <vector>

#include "orbitgeom/hermitian.hpp"

namespace orbitgeom {

/// Dimensions of a bipartite system H1 (x) H2.  Vectors are flattened with
/// the index convention i*d2 + k.  Full-Schmidt-rank statements assume
/// d1 >= d2; `oriented()` reports whether that holds.
struct BipartiteDims {
    int d1 = 0;
    int d2 = 0;

    BipartiteDims(int d1_, int d2_) : d1(d1_), d2(d2_) {
        if (d1 < 1 || d2 < 1)
            throw DimensionError("BipartiteDims: dimensions must be >= 1, got (" +
                                 std::to_string(d1) + "," + std::to_string(d2) + ")");
    }

    int total() const { return d1 * d2; }
    bool oriented() const { return d1 >= d2; }
};

/// Schmidt data of a bipartite vector psi = sum_j c_j u_j (x) v_j with
/// positive coefficients sorted descending and orthonormal factor systems.
struct SchmidtDecomposition {
    std::vector<double> coefficients;
    std::vector<ComplexVector> left_vectors;
    std::vector<ComplexVector> right_vectors;
    int rank = 0;

    /// sum_j c_j u_j (x) v_j, flattened with i*d2 + k indexing.
    ComplexVector reconstruct(const BipartiteDims &dims) const;
};

/// Schmidt decomposition of the d1 x d2 coefficient matrix M[i][k] = psi[i*d2+k].
/// Coefficients are the singular values above tol * (largest singular value).
/// Implemented as eigh on the smaller Gram matrix plus back-substitution; the
/// retained singular values are re-measured as ||M w|| so that exact rank
/// deficiency is resolved at the stated relative tolerance.
SchmidtDecomposition schmidt_decompose(const ComplexVector &psi, const BipartiteDims &dims,
                                       double tol = 1e-10);

struct MaxEntanglementVerdict {
    bool maximally_entangled = false;
    /// || tr_1(rho) - I/d2 ||_F, reported either way.
    double residual = 0.0;
};

/// Decides whether a pure state has maximally mixed first-factor marginal.
/// Requires rho pure (largest eigenvalue >= 1 - 1e-8) and d2 > 1.
MaxEntanglementVerdict is_maximally_entangled(const DensityState &rho, const BipartiteDims &dims,
                                              double tol = 1e-8);

/// Components of a Hermitian operator on H1 (x) H2 under the orthogonal
/// splitting <I> (x) <I>, <I> (x) su*, su* (x) <I>, su* (x) su*.  The stored
/// p10/p01 are the traceless factors normalized so that
///   x = c_id (II1 (x) II2) + II1 (x) p10 + p01 (x) II2 + p00,
/// where IIj = I/dj.  block norms are those of the embedded summands.
struct BlockComponents {
    BipartiteDims dims;
    double c_id = 0.0;
    HermitianOperator p10; // on H2, traceless
    HermitianOperator p01; // on H1, traceless
    HermitianOperator p00; // on H1 (x) H2, both partial traces vanish

    double norm_id = 0.0;
    double norm10 = 0.0; // || II1 (x) p10 ||
    double norm01 = 0.0; // || p01 (x) II2 ||
    double norm00 = 0.0; // || p00 ||

    HermitianOperator embedded_block10() const;
    HermitianOperator embedded_block01() const;
    HermitianOperator reconstruct() const;
};

/// Orthogonal block decomposition of x with respect to the Frobenius pairing.
BlockComponents block_decompose(const HermitianOperator &x, const BipartiteDims &dims);

/// Blocks of P_psi - II, the projection of the state onto the traceless part.
BlockComponents decompose_projection(const ComplexVector &psi, const BipartiteDims &dims);

} // namespace orbitgeom
