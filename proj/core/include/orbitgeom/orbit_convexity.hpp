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

#include <optional>
#include <vector>

#include "orbitgeom/group_action.hpp"

namespace orbitgeom {

/// Minimal generator-invariant subspace containing a seed vector, computed
/// by iterated span closure.
struct InvariantSubspaceReport {
    int closure_dim = 0;
    int ambient_dim = 0;
    std::vector<RealVector> basis;     // orthonormal
    std::vector<int> residual_history; // dimensions added per iteration
};

/// Span closure: start from the seed, repeatedly apply every generator to
/// every basis vector, orthonormalize (modified Gram-Schmidt with a
/// re-orthogonalization pass), and keep components with relative norm above
/// tol.  Terminates because the dimension is monotone and bounded.
InvariantSubspaceReport minimal_invariant_subspace(const GroupAction &action, const RealVector &seed,
                                                   double tol = 1e-9);

enum class VerdictMethod { Krylov, BlockNorms, PartialTrace };

/// Whether the convexed orbit through x0 has interior in its affine slice,
/// together with the computed witness.
struct ConvexBodyVerdict {
    bool is_body = false;
    VerdictMethod method = VerdictMethod::Krylov;
    std::optional<InvariantSubspaceReport> closure; // Krylov path
    std::optional<BlockComponents> blocks;          // block-norm / local path
    double tol = 0.0;
};

/// Decides whether Conv(K . x0) is a convex body in the trace slice through
/// x0.  The generic path projects x0 onto the traceless part (the fixed
/// space of the built-in actions is the span of the identity) and tests
/// whether the closure fills the ambient space.  For local product actions
/// the three traceless blocks are irreducible and pairwise inequivalent, so
/// testing the three block norms is an equivalent fast path; both paths are
/// exposed so they can be cross-checked.  PartialTrace is the pure-state
/// marginal criterion and requires x0 pure.
ConvexBodyVerdict is_convex_body(const GroupAction &action, const HermitianOperator &x0,
                                 VerdictMethod method = VerdictMethod::Krylov, double tol = 1e-9);

/// Fixed points of the maximal torus on the unitary orbit of x0 are the
/// diagonal matrices carrying the distinct permutations of its spectrum.
struct TorusFixedPointCheck {
    std::vector<RealVector> vertex_projections; // traceless diagonal coords, length d
    int span_dim = 0;
    bool passes = false; // span has full dimension d-1; necessary, not sufficient
};

TorusFixedPointCheck torus_fixed_point_check(const HermitianOperator &x0);

/// Same check from a spectrum given directly.
TorusFixedPointCheck torus_fixed_point_check(const std::vector<double> &spectrum);

} // namespace orbitgeom
