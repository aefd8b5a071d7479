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

#include "orbitgeom/channel.hpp"

#include <cmath>

#include "orbitgeom/spectral.hpp"

namespace orbitgeom {

namespace {

// Row-major vectorization; vec(u1 X u2^T) = (u1 (x) u2) vec(X).
ComplexVector vec(const ComplexMatrix &x) {
    return x.entries();
}

ComplexMatrix unvec(const ComplexVector &v, int d) {
    return ComplexMatrix(d, v);
}

} // namespace

HermitianOperator apply_channel(const KrausMap &k, const HermitianOperator &rho) {
    if (rho.dim() != k.dim())
        throw DimensionError("apply_channel: state dimension " + std::to_string(rho.dim()) +
                             " vs channel dimension " + std::to_string(k.dim()));
    ComplexMatrix acc(k.dim());
    for (const auto &x : k.operators)
        acc += x * rho.matrix() * x.adjoint();
    const double tol = std::max(1e-9, 1e-12 * acc.max_abs());
    return HermitianOperator(std::move(acc), tol);
}

StochasticityOps stochasticity_ops(const KrausMap &k) {
    ComplexMatrix t1(k.dim()), t2(k.dim());
    for (const auto &x : k.operators) {
        t1 += x.adjoint() * x;
        t2 += x * x.adjoint();
    }
    return {HermitianOperator(std::move(t1), 1e-9), HermitianOperator(std::move(t2), 1e-9)};
}

ChoiMatrix choi_from_kraus(const KrausMap &k) {
    const int d = k.dim();
    ComplexMatrix c(d * d);
    for (const auto &x : k.operators) {
        const ComplexVector v = vec(x);
        for (int r = 0; r < d * d; ++r) {
            const Complex vr = v[static_cast<size_t>(r)];
            if (vr == Complex(0.0))
                continue;
            for (int s = 0; s < d * d; ++s)
                c(r, s) += vr * std::conj(v[static_cast<size_t>(s)]);
        }
    }
    return ChoiMatrix(HermitianOperator(std::move(c), 1e-9), d);
}

KrausFromChoi kraus_from_choi(const ChoiMatrix &c) {
    const SpectralDecomposition spec = eigh(c.matrix);
    KrausFromChoi out;
    out.min_eigenvalue = spec.eigenvalues.back();
    const double lambda_max = std::max(0.0, spec.eigenvalues.front());
    const double cut = 1e-10 * std::max(lambda_max, std::abs(out.min_eigenvalue));
    for (size_t j = 0; j < spec.eigenvalues.size(); ++j) {
        const double lam = spec.eigenvalues[j];
        if (std::abs(lam) <= cut)
            continue;
        ComplexVector v = spec.eigenvector(static_cast<int>(j));
        const double w = std::sqrt(std::abs(lam));
        for (auto &e : v)
            e *= w;
        if (lam > 0.0)
            out.kraus.push_back(unvec(v, c.d));
        else
            out.negative_part.push_back(unvec(v, c.d));
    }
    out.completely_positive = out.negative_part.empty();
    if (out.kraus.empty() && out.negative_part.empty())
        out.kraus.push_back(ComplexMatrix(c.d)); // zero channel
    return out;
}

KrausMap conjugate_channel(const KrausMap &k, const ComplexMatrix &u1, const ComplexMatrix &u2) {
    if (u1.dim() != k.dim() || u2.dim() != k.dim())
        throw DimensionError("conjugate_channel: unitary dimensions must match the channel");
    std::vector<ComplexMatrix> ops;
    ops.reserve(k.operators.size());
    const ComplexMatrix u2t = u2.transpose();
    for (const auto &x : k.operators)
        ops.push_back(u1 * x * u2t);
    return KrausMap(std::move(ops));
}

double intertwining_check(const KrausMap &k, const ComplexMatrix &u1, const ComplexMatrix &u2) {
    const ChoiMatrix lhs = choi_from_kraus(conjugate_channel(k, u1, u2));
    const ComplexMatrix u = tensor_product(u1, u2);
    const ComplexMatrix rhs = u * choi_from_kraus(k).matrix.matrix() * u.adjoint();
    return (lhs.matrix.matrix() - rhs).frobenius_norm();
}

KrausMap depolarizing_channel(int d) {
    if (d < 2)
        throw DimensionError("depolarizing_channel: needs d >= 2");
    std::vector<ComplexMatrix> ops;
    ops.reserve(static_cast<size_t>(d) * d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ComplexMatrix e(d);
            e(i, j) = s;
            ops.push_back(std::move(e));
        }
    return KrausMap(std::move(ops));
}

HermitianOperator depolarize(const HermitianOperator &x) {
    HermitianOperator out = HermitianOperator::normalized_identity(x.dim());
    out *= x.trace();
    return out;
}

ComplexMatrix haar_random_unitary(int d, Rng &rng) {
    if (d < 1)
        throw DimensionError("haar_random_unitary: needs d >= 1");
    ComplexMatrix g = rng.ginibre(d);
    // Gram-Schmidt with a re-orthogonalization pass; the positive R-diagonal
    // of this factorization is exactly the phase convention that makes the
    // resulting Q unitarily invariant.
    ComplexMatrix q(d);
    for (int j = 0; j < d; ++j) {
        ComplexVector col(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i)
            col[static_cast<size_t>(i)] = g(i, j);
        for (int pass = 0; pass < 2; ++pass)
            for (int p = 0; p < j; ++p) {
                Complex proj = 0.0;
                for (int i = 0; i < d; ++i)
                    proj += std::conj(q(i, p)) * col[static_cast<size_t>(i)];
                for (int i = 0; i < d; ++i)
                    col[static_cast<size_t>(i)] -= proj * q(i, p);
            }
        const double n = vector_norm(col);
        if (!(n > 1e-12)) // measure-zero degeneracy; resample the column
            return haar_random_unitary(d, rng);
        for (int i = 0; i < d; ++i)
            q(i, j) = col[static_cast<size_t>(i)] / n;
    }
    return q;
}

ChannelReport analyze_channel(const KrausMap &k, bool attempt_mixed_unitary,
                              const FrankWolfeOptions &fw) {
    ChannelReport report;
    const StochasticityOps ops = stochasticity_ops(k);
    const HermitianOperator id = HermitianOperator::identity(k.dim());
    report.trace_residual = (ops.t1 - id).norm();
    report.unital_residual = (ops.t2 - id).norm();
    report.trace_preserving = report.trace_residual <= 1e-8;
    report.unital = report.unital_residual <= 1e-8;

    const ChoiMatrix choi = choi_from_kraus(k);
    report.min_choi_eigenvalue = eigh(choi.matrix).eigenvalues.back();
    report.completely_positive = report.min_choi_eigenvalue >= -1e-9;

    if (attempt_mixed_unitary && report.trace_preserving && report.unital &&
        report.completely_positive)
        report.mixed_unitary = certify_mixed_unitary(choi, fw.dist_tol, fw.max_iter, fw.seed).verdict;
    return report;
}

MixedUnitaryCertificate certify_mixed_unitary(const ChoiMatrix &c, double dist_tol, int max_iter,
                                              std::uint64_t seed) {
    const int d = c.d;
    const HermitianOperator id = HermitianOperator::identity(d);
    const double r1 = (partial_trace(c.matrix, d, d, TraceSide::First) - id).norm();
    const double r2 = (partial_trace(c.matrix, d, d, TraceSide::Second) - id).norm();
    if (r1 > 1e-8 || r2 > 1e-8)
        throw NotDoublyStochasticError("certify_mixed_unitary: partial trace residuals (" +
                                       std::to_string(r1) + ", " + std::to_string(r2) +
                                       ") exceed 1e-8");
    const double min_eig = eigh(c.matrix).eigenvalues.back();
    if (min_eig < -1e-9)
        throw NotDoublyStochasticError("certify_mixed_unitary: Choi matrix not PSD (min eigenvalue " +
                                       std::to_string(min_eig) + ")");

    // Maximally entangled base point.
    ComplexVector phi(static_cast<size_t>(d) * d, Complex(0.0));
    for (int i = 0; i < d; ++i)
        phi[static_cast<size_t>(i) * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
    OrbitSpec orbit = OrbitSpec::local(projector(phi), BipartiteDims(d, d));

    HermitianOperator target = c.matrix;
    target *= 1.0 / d;

    FrankWolfeOptions fw;
    fw.dist_tol = dist_tol / d; // Choi-level residual <= dist_tol
    fw.max_iter = max_iter;
    fw.seed = seed;

    MixedUnitaryCertificate cert;
    cert.verdict = frank_wolfe_membership(target, orbit, fw);
    if (cert.verdict.status != MembershipStatus::Inside)
        return cert;

    ComplexMatrix recon(d * d);
    for (const auto &atom : cert.verdict.witness_mixture) {
        // Orbit point (u1 (x) u2) P (u1 (x) u2)^dag is the Choi of
        // conjugation by u1 u2^T, scaled by 1/d.
        ComplexMatrix w = atom.group_element.at(0) * atom.group_element.at(1).transpose();
        // Global phase: first nonzero component positive real.
        Complex lead = 0.0;
        for (const auto &e : w.entries())
            if (std::abs(e) > 1e-8) {
                lead = e;
                break;
            }
        if (lead != Complex(0.0))
            w *= std::conj(lead) / std::abs(lead);
        const ComplexVector v = w.entries();
        for (int r = 0; r < d * d; ++r)
            for (int s = 0; s < d * d; ++s)
                recon(r, s) += atom.weight * v[static_cast<size_t>(r)] *
                               std::conj(v[static_cast<size_t>(s)]);
        cert.weights.push_back(atom.weight);
        cert.unitaries.push_back(std::move(w));
    }
    cert.reconstruction_residual = (recon - c.matrix.matrix()).frobenius_norm();
    return cert;
}

} // namespace orbitgeom
