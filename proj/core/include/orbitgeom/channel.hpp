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

#include <cstdint>
#include <optional>
#include <vector>

#include "orbitgeom/hull_membership.hpp"

namespace orbitgeom {

/// Kraus form of a Hermiticity-preserving superoperator:
/// rho -> sum_k X_k rho X_k^dag.
struct KrausMap {
    std::vector<ComplexMatrix> operators;

    explicit KrausMap(std::vector<ComplexMatrix> ops) : operators(std::move(ops)) {
        if (operators.empty())
            throw DegenerateInputError("KrausMap: operator list is empty");
        for (const auto &x : operators)
            if (x.dim() != operators.front().dim())
                throw DimensionError("KrausMap: mixed operator dimensions");
    }

    int dim() const { return operators.front().dim(); }
};

HermitianOperator apply_channel(const KrausMap &k, const HermitianOperator &rho);

/// The two stochasticity operators of a Kraus map: t1 = sum X^dag X (trace
/// preservation iff t1 = I) and t2 = sum X X^dag (unitality iff t2 = I).
struct StochasticityOps {
    HermitianOperator t1;
    HermitianOperator t2;
};

StochasticityOps stochasticity_ops(const KrausMap &k);

/// Operator on H (x) H representing a Hermiticity-preserving superoperator.
///
/// Convention used throughout: the channel acts on the first tensor factor,
///   J(A) = sum_ij A(E_ij) (x) E_ij = d (A (x) id)(P_phi+),
/// entrywise J[(i,j),(k,l)] = sum_m X_m[i][j] conj(X_m[k][l]).  This is the
/// convention pinned by J(identity) = d P_phi+; completely positive maps
/// correspond exactly to PSD matrices, tr_2 J(A) = t2(A) exactly, and
/// tr_1 J(A) = t1(A)^T (transposed; equal to t1 for real Kraus data).
struct ChoiMatrix {
    HermitianOperator matrix; // on H (x) H, dimension d^2
    int d = 0;

    ChoiMatrix(HermitianOperator m, int d_) : matrix(std::move(m)), d(d_) {
        if (matrix.dim() != d * d)
            throw DimensionError("ChoiMatrix: matrix dimension " + std::to_string(matrix.dim()) +
                                 " is not d^2 for d = " + std::to_string(d));
    }
};

ChoiMatrix choi_from_kraus(const KrausMap &k);

/// Inverse direction via the spectral decomposition of the Choi matrix,
/// rank cut at 1e-10 * lambda_max.  Non-PSD inputs yield a signed
/// decomposition flagged not completely positive:
///   J = sum vec(K)vec(K)^dag - sum vec(N)vec(N)^dag.
struct KrausFromChoi {
    std::vector<ComplexMatrix> kraus;
    std::vector<ComplexMatrix> negative_part;
    bool completely_positive = true;
    double min_eigenvalue = 0.0;

    KrausMap map() const { return KrausMap(kraus); }
};

KrausFromChoi kraus_from_choi(const ChoiMatrix &c);

/// Action of a unitary pair on a channel, chosen so that the Choi matrix
/// transforms by (u1 (x) u2)-conjugation: X_k -> u1 X_k u2^T.
KrausMap conjugate_channel(const KrausMap &k, const ComplexMatrix &u1, const ComplexMatrix &u2);

/// || J((u1,u2).A) - (u1 (x) u2) J(A) (u1 (x) u2)^dag ||; a validation
/// quantity that stays at roundoff for every channel and pair.
double intertwining_check(const KrausMap &k, const ComplexMatrix &u1, const ComplexMatrix &u2);

/// Kraus realization of X -> tr(X) I/d over the matrix-unit family
/// { E_ij / sqrt(d) }.
KrausMap depolarizing_channel(int d);

/// Closed form of the same channel.
HermitianOperator depolarize(const HermitianOperator &x);

/// QR of a complex Ginibre matrix with the R-diagonal phase fixed positive;
/// the resulting distribution is unitarily invariant.
ComplexMatrix haar_random_unitary(int d, Rng &rng);

struct ChannelReport {
    bool trace_preserving = false;
    double trace_residual = 0.0; // ||t1 - I||
    bool unital = false;
    double unital_residual = 0.0; // ||t2 - I||
    bool completely_positive = false;
    double min_choi_eigenvalue = 0.0;
    std::optional<MembershipVerdict> mixed_unitary; // absent = not attempted
};

/// Stochasticity, positivity, and (for doubly stochastic channels)
/// mixed-unitary certification in one pass.
ChannelReport analyze_channel(const KrausMap &k, bool attempt_mixed_unitary = true,
                              const FrankWolfeOptions &fw = {});

struct MixedUnitaryCertificate {
    MembershipVerdict verdict;
    std::vector<double> weights;
    std::vector<ComplexMatrix> unitaries;
    /// || sum_k w_k vec(U_k) vec(U_k)^dag - J ||_F.
    double reconstruction_residual = 0.0;
};

/// Certifies a doubly stochastic Choi matrix as a mixture of unitary
/// conjugations by testing membership of J/d in the convexed local orbit of
/// the maximally entangled projector (unitary conjugation channels are
/// exactly the points d P of that orbit).  Inside verdicts come with mixing
/// weights and the unitaries reconstructed from the orbit points, phases
/// normalized so the first nonzero component is positive real.
MixedUnitaryCertificate certify_mixed_unitary(const ChoiMatrix &c, double dist_tol = 1e-6,
                                              int max_iter = 5000, std::uint64_t seed = 1);

} // namespace orbitgeom
