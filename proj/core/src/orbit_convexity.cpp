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

#include "orbitgeom/orbit_convexity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orbitgeom/spectral.hpp"

namespace orbitgeom {

namespace {

// Modified Gram-Schmidt with one re-orthogonalization pass.  Returns the
// residual norm; the candidate is normalized in place when accepted.
double orthogonalize_against(const std::vector<RealVector> &basis, RealVector &w) {
    for (int pass = 0; pass < 2; ++pass)
        for (const auto &b : basis)
            axpy(-dot(b, w), b, w);
    return norm(w);
}

} // namespace

InvariantSubspaceReport minimal_invariant_subspace(const GroupAction &action, const RealVector &seed,
                                                   double tol) {
    if (static_cast<int>(seed.size()) != action.ambient_real_dim())
        throw DimensionError("minimal_invariant_subspace: seed length " +
                             std::to_string(seed.size()) + " vs ambient dim " +
                             std::to_string(action.ambient_real_dim()));
    const double seed_norm = norm(seed);
    if (!(seed_norm > 0.0))
        throw DegenerateInputError("minimal_invariant_subspace: zero seed");

    const double threshold = tol * seed_norm;

    InvariantSubspaceReport report;
    report.ambient_dim = action.ambient_real_dim();
    RealVector first = seed;
    scale(first, 1.0 / seed_norm);
    report.basis.push_back(std::move(first));

    const int gens = action.generator_count();
    size_t frontier_begin = 0;
    while (true) {
        const size_t frontier_end = report.basis.size();
        int added = 0;
        for (size_t v = frontier_begin; v < frontier_end; ++v) {
            for (int g = 0; g < gens; ++g) {
                RealVector w = action.apply_generator(g, report.basis[v]);
                if (orthogonalize_against(report.basis, w) <= threshold)
                    continue;
                scale(w, 1.0 / norm(w));
                report.basis.push_back(std::move(w));
                ++added;
            }
        }
        report.residual_history.push_back(added);
        if (added == 0)
            break;
        // New directions must themselves be closed; earlier vectors were
        // already expanded, so the frontier advances.
        frontier_begin = frontier_end;
        if (static_cast<int>(report.basis.size()) > report.ambient_dim)
            throw NumericalError("minimal_invariant_subspace: basis exceeded ambient dimension");
    }
    report.closure_dim = static_cast<int>(report.basis.size());
    return report;
}

ConvexBodyVerdict is_convex_body(const GroupAction &action, const HermitianOperator &x0,
                                 VerdictMethod method, double tol) {
    ConvexBodyVerdict verdict;
    verdict.method = method;
    verdict.tol = tol;

    if (method == VerdictMethod::BlockNorms || method == VerdictMethod::PartialTrace) {
        if (action.kind() != GroupAction::Kind::LocalUnitaryProduct)
            throw DomainError("is_convex_body: block/marginal methods need a local product action");
        const BipartiteDims &dims = action.local_dims();
        if (x0.dim() != dims.total())
            throw DimensionError("is_convex_body: operator dimension vs action mismatch");
        const double block_tol = tol * std::max(1.0, x0.norm());
        BlockComponents blocks = block_decompose(x0, dims);
        if (method == VerdictMethod::PartialTrace) {
            // Marginal criterion, valid for pure states: the hull has
            // interior iff neither reduced state is maximally mixed.
            const SpectralDecomposition spec = eigh(x0);
            if (spec.eigenvalues.front() < x0.trace() - 1e-8)
                throw NotPureError("is_convex_body: PartialTrace method requires a pure state");
            verdict.is_body = blocks.norm10 > block_tol && blocks.norm01 > block_tol;
        } else {
            verdict.is_body =
                blocks.norm10 > block_tol && blocks.norm01 > block_tol && blocks.norm00 > block_tol;
        }
        verdict.blocks = std::move(blocks);
        return verdict;
    }

    // Generic Krylov path on the realified traceless space.  Custom actions
    // have no Hermitian chart; seed them through minimal_invariant_subspace
    // after projecting out their computed fixed space.
    if (action.kind() == GroupAction::Kind::CustomLieGenerators)
        throw DomainError("is_convex_body: custom actions take seeds via minimal_invariant_subspace");
    if (x0.dim() != action.matrix_dim())
        throw DimensionError("is_convex_body: operator dimension vs action mismatch");
    RealVector seed = action.coordinates().coords(x0); // coords() projects out the trace part

    const double seed_scale = norm(seed);
    if (seed_scale <= tol * std::max(1.0, x0.norm())) {
        // x0 lies in the fixed space; the orbit is a single point.
        verdict.is_body = false;
        return verdict;
    }
    verdict.closure = minimal_invariant_subspace(action, seed, tol);
    verdict.is_body = verdict.closure->closure_dim == verdict.closure->ambient_dim;
    return verdict;
}

TorusFixedPointCheck torus_fixed_point_check(const HermitianOperator &x0) {
    return torus_fixed_point_check(eigh(x0).eigenvalues);
}

TorusFixedPointCheck torus_fixed_point_check(const std::vector<double> &spectrum) {
    const int d = static_cast<int>(spectrum.size());
    if (d < 2)
        throw DegenerateInputError("torus_fixed_point_check: needs dimension >= 2");
    if (d > 8)
        throw DomainError("torus_fixed_point_check: permutation enumeration capped at d = 8");

    // Cluster numerically equal eigenvalues so the permutations of the
    // multiset are enumerated once each.
    std::vector<double> values = spectrum;
    std::sort(values.begin(), values.end());
    double scale_ref = 0.0;
    for (double v : values)
        scale_ref = std::max(scale_ref, std::abs(v));
    const double cluster_tol = 1e-9 * std::max(1.0, scale_ref);
    std::vector<int> ids(static_cast<size_t>(d), 0);
    std::vector<double> representative{values.front()};
    for (int i = 1; i < d; ++i) {
        if (values[static_cast<size_t>(i)] - representative.back() > cluster_tol)
            representative.push_back(values[static_cast<size_t>(i)]);
        ids[static_cast<size_t>(i)] = static_cast<int>(representative.size()) - 1;
    }

    const double mean =
        std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(d);

    TorusFixedPointCheck out;
    std::vector<RealVector> span_basis;
    std::vector<int> perm = ids;
    do {
        RealVector vertex(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i)
            vertex[static_cast<size_t>(i)] = representative[static_cast<size_t>(perm[static_cast<size_t>(i)])] - mean;
        out.vertex_projections.push_back(vertex);
        RealVector w = vertex;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto &b : span_basis)
                axpy(-dot(b, w), b, w);
        if (norm(w) > 1e-9 * std::max(1.0, scale_ref)) {
            scale(w, 1.0 / norm(w));
            span_basis.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    out.span_dim = static_cast<int>(span_basis.size());
    out.passes = out.span_dim == d - 1;
    return out;
}

} // namespace orbitgeom
