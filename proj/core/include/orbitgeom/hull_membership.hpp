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

#include "orbitgeom/orbit_convexity.hpp"
#include "orbitgeom/rng.hpp"

namespace orbitgeom {

/// A compact-group orbit through a density state, the feasible set of the
/// membership solver.  For local product actions the Schmidt spectrum of a
/// pure base point is cached for the analytic radius bounds.
struct OrbitSpec {
    GroupAction action;
    DensityState base_point;
    std::vector<double> base_spectrum;      // eigenvalues of the base, descending
    std::vector<double> schmidt_coefficients; // pure local base only, else empty

    static OrbitSpec full_unitary(DensityState base);
    static OrbitSpec local(DensityState base, const BipartiteDims &dims);
};

/// One term of a certified convex mixture: an orbit point together with the
/// group element that produced it (one unitary for the full action, a pair
/// for local products).
struct MixtureAtom {
    double weight = 0.0;
    std::vector<ComplexMatrix> group_element;
    HermitianOperator point;
};

enum class MembershipStatus { Inside, LikelyOutside, Inconclusive };

struct MembershipVerdict {
    MembershipStatus status = MembershipStatus::Inconclusive;
    std::vector<MixtureAtom> witness_mixture;               // Inside
    std::optional<HermitianOperator> separating_functional; // LikelyOutside, unit norm
    double margin = 0.0;    // <F, target> - max over sampled orbit points of <F, .>
    double fw_gap = 0.0;    // final duality gap
    double distance = 0.0;  // achieved ||y - target||_F
    bool heuristic_lmo = false;
    int iterations = 0;
    std::uint64_t seed = 0;
};

struct FrankWolfeOptions {
    double dist_tol = 1e-6;
    int max_iter = 5000;
    std::uint64_t seed = 1;
    int lmo_restarts = 16;
    int lmo_iters = 500;
    /// Iterations without measurable progress before the heuristic path
    /// declares LikelyOutside.
    int stall_patience = 80;
    /// Optional starting mixture (atoms must lie on the orbit).
    std::vector<MixtureAtom> initial_atoms;
    /// When set, receives ||y_t - target|| per iteration (diagnostics).
    std::vector<double> *record_distances = nullptr;
};

struct UnitaryLmoResult {
    HermitianOperator point;
    double value = 0.0;
    ComplexMatrix rotation; // point = rotation diag(base desc) rotation^dag
};

/// Exact linear minimization over a full unitary orbit: pairs the spectrum
/// of the functional against the base spectrum in opposite order.
UnitaryLmoResult lmo_unitary_orbit(const HermitianOperator &g,
                                   const std::vector<double> &base_spectrum);

struct LocalLmoResult {
    HermitianOperator point;
    double value = 0.0;
    ComplexMatrix u1, u2;
};

/// Heuristic linear minimization over a local product orbit: projected
/// gradient descent on U(d1) x U(d2) with anti-Hermitian steps retracted by
/// the matrix exponential, best over restarts.  No global optimality claim.
LocalLmoResult lmo_local_orbit(const HermitianOperator &g, const DensityState &base,
                               const BipartiteDims &dims, int restarts = 16, int iters = 500,
                               std::uint64_t seed = 1,
                               const std::vector<LocalLmoResult> *warm_starts = nullptr);

/// Frank-Wolfe projection of `target` onto Conv(orbit): classic 2/(t+2)
/// schedule with exact line search on the quadratic.  Inside verdicts carry
/// an explicit mixture; LikelyOutside is duality-certified for exact LMOs
/// and stall-detected (flagged heuristic) for local orbits.
MembershipVerdict frank_wolfe_membership(const HermitianOperator &target, const OrbitSpec &orbit,
                                         const FrankWolfeOptions &options = {});

struct BallEstimate {
    DensityState center;
    double radius_lower = 0.0;
    double radius_upper = 0.0;
    int directions_tested = 0;
    std::uint64_t seed = 0;
    std::optional<DensityState> boundary_witness;
    double witness_distance = 0.0;
};

/// Largest ball inside the density body centred at I/d: radius
/// 1/sqrt(d(d-1)) exactly, touching the boundary at states with spectrum
/// (0, 1/(d-1), ..., 1/(d-1)).
BallEstimate inscribed_ball_density_states(int d);

/// min(lambda_sq - 1/2, 1/sqrt(12)): upper bound for the inscribed-ball
/// radius of the convexed local orbit of a two-qubit pure state with Schmidt
/// weight lambda_sq in [1/2, 1].
double two_qubit_orbit_ball_bound(double lambda_sq);

enum class AffineSlice { Full, Block00 };

struct RadiusProbeOptions {
    std::uint64_t seed = 1;
    double bisect_tol = 1e-3;
    /// Analytic cap intersected into radius_upper, when known.
    std::optional<double> analytic_upper;
    FrankWolfeOptions fw;
    /// Skip re-certifying the center when the caller already has.
    bool verify_center = true;
};

/// Bisection on sampled unit directions in the chosen slice around
/// `center`; radius_lower is certified by Inside verdicts on every sampled
/// direction, radius_upper by LikelyOutside probes and analytic bounds.
BallEstimate inscribed_radius_estimate(const OrbitSpec &orbit, const DensityState &center,
                                       int directions, AffineSlice slice,
                                       const RadiusProbeOptions &options = {});

struct EllipsoidSample {
    HermitianOperator point;
    MembershipStatus status;
    double distance;
};

struct EllipsoidContainmentReport {
    bool all_inside = false;
    int samples = 0;
    int inside = 0;
    double volume_ratio = 0.0; // (R / r0)^9
    double lambda_sq = 0.0;
    double radius_r = 0.0;
    double radius_r0 = 0.0;
    bool heuristic_lmo = true;
    std::uint64_t seed = 0;
    std::vector<EllipsoidSample> failures;
};

/// Samples boundary points of the block ellipsoid
///   { II + r10 + r01 + r00 : ||r10||^2/R^2 + ||r01||^2/R^2 + ||r00||^2/r0^2 <= 1/4 }
/// on a two-qubit system and certifies each inside the convexed local orbit
/// of the Schmidt-weight-lambda_sq pure state.
EllipsoidContainmentReport block_ellipsoid_containment(double lambda_sq, double radius_r,
                                                       double radius_r0, int samples,
                                                       const FrankWolfeOptions &fw = {});

enum class Separability { Separable, Entangled, Indeterminate };

struct SeparabilityReport {
    Separability verdict = Separability::Indeterminate;
    double min_partial_transpose_eigenvalue = 0.0;
};

/// Positive-partial-transpose test; exact decision for 2x2 and 2x3 systems,
/// one-sided (entangled only) otherwise.
SeparabilityReport ppt_separability(const DensityState &rho, const BipartiteDims &dims);

} // namespace orbitgeom
