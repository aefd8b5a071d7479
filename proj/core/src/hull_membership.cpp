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

#include "orbitgeom/hull_membership.hpp"

#include <algorithm>
#include <cmath>

#include "orbitgeom/channel.hpp"
#include "orbitgeom/spectral.hpp"

namespace orbitgeom {

namespace {

ComplexMatrix ptrace_first_raw(const ComplexMatrix &x, int d1, int d2) {
    ComplexMatrix out(d2);
    for (int k = 0; k < d2; ++k)
        for (int l = 0; l < d2; ++l) {
            Complex acc = 0.0;
            for (int i = 0; i < d1; ++i)
                acc += x(i * d2 + k, i * d2 + l);
            out(k, l) = acc;
        }
    return out;
}

ComplexMatrix ptrace_second_raw(const ComplexMatrix &x, int d1, int d2) {
    ComplexMatrix out(d1);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j) {
            Complex acc = 0.0;
            for (int k = 0; k < d2; ++k)
                acc += x(i * d2 + k, j * d2 + k);
            out(i, j) = acc;
        }
    return out;
}

// exp(K) for anti-Hermitian K, via the spectral decomposition of -iK.
// 2x2 inputs take the closed form exp(i(t0 I + t.sigma)).
ComplexMatrix expm_antihermitian(const ComplexMatrix &k) {
    if (k.dim() == 2) {
        const Complex b00 = Complex(0.0, -1.0) * k(0, 0);
        const Complex b01 = Complex(0.0, -1.0) * k(0, 1);
        const Complex b11 = Complex(0.0, -1.0) * k(1, 1);
        const double t0 = 0.5 * (b00.real() + b11.real());
        const double t3 = 0.5 * (b00.real() - b11.real());
        const double t1 = b01.real();
        const double t2 = -b01.imag();
        const double theta = std::sqrt(t1 * t1 + t2 * t2 + t3 * t3);
        const Complex phase = std::polar(1.0, t0);
        const double c = std::cos(theta);
        const double sc = theta > 1e-300 ? std::sin(theta) / theta : 1.0;
        ComplexMatrix out(2);
        out(0, 0) = phase * (Complex(c) + Complex(0.0, sc) * Complex(t3));
        out(0, 1) = phase * Complex(0.0, sc) * Complex(t1, -t2);
        out(1, 0) = phase * Complex(0.0, sc) * Complex(t1, t2);
        out(1, 1) = phase * (Complex(c) - Complex(0.0, sc) * Complex(t3));
        return out;
    }
    ComplexMatrix b = k;
    b *= Complex(0.0, -1.0); // Hermitian
    const SpectralDecomposition spec = eigh_matrix(b);
    const int d = k.dim();
    ComplexMatrix out(d);
    for (int j = 0; j < d; ++j) {
        const Complex phase = std::polar(1.0, spec.eigenvalues[static_cast<size_t>(j)]);
        for (int r = 0; r < d; ++r) {
            const Complex vrj = spec.eigenvectors(r, j);
            if (vrj == Complex(0.0))
                continue;
            for (int c = 0; c < d; ++c)
                out(r, c) += phase * vrj * std::conj(spec.eigenvectors(c, j));
        }
    }
    return out;
}

double real_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    // Re tr(a b) for Hermitian a, b stored raw.
    Complex t = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            t += a(i, j) * b(j, i);
    return t.real();
}

HermitianOperator wrap_loose(ComplexMatrix m) {
    const double tol = 1e-8 * (1.0 + m.max_abs());
    return HermitianOperator(std::move(m), tol);
}

} // namespace

OrbitSpec OrbitSpec::full_unitary(DensityState base) {
    OrbitSpec spec{GroupAction::full_unitary_adjoint(base.dim()), std::move(base), {}, {}};
    spec.base_spectrum = eigh(spec.base_point.op()).eigenvalues;
    return spec;
}

OrbitSpec OrbitSpec::local(DensityState base, const BipartiteDims &dims) {
    detail::check_bipartite_dims(base.dim(), dims.d1, dims.d2, "OrbitSpec::local");
    OrbitSpec spec{GroupAction::local_unitary_product(dims.d1, dims.d2), std::move(base), {}, {}};
    const SpectralDecomposition s = eigh(spec.base_point.op());
    spec.base_spectrum = s.eigenvalues;
    if (s.eigenvalues.front() >= 1.0 - 1e-8) {
        // Pure base point: cache the Schmidt spectrum for analytic bounds.
        const SchmidtDecomposition schmidt = schmidt_decompose(s.eigenvector(0), dims);
        spec.schmidt_coefficients = schmidt.coefficients;
    }
    return spec;
}

UnitaryLmoResult lmo_unitary_orbit(const HermitianOperator &g,
                                   const std::vector<double> &base_spectrum) {
    const int d = g.dim();
    if (static_cast<int>(base_spectrum.size()) != d)
        throw DimensionError("lmo_unitary_orbit: spectrum length vs functional dimension");
    const SpectralDecomposition spec = eigh(g); // eigenvalues descending

    std::vector<double> base_desc = base_spectrum;
    std::sort(base_desc.begin(), base_desc.end(), std::greater<double>());

    // Largest eigenvalue of g pairs with the smallest base value.
    ComplexMatrix point(d);
    double value = 0.0;
    UnitaryLmoResult out{HermitianOperator::zero(d), 0.0, ComplexMatrix::identity(d)};
    for (int k = 0; k < d; ++k) {
        const double paired = base_desc[static_cast<size_t>(d - 1 - k)];
        value += spec.eigenvalues[static_cast<size_t>(k)] * paired;
        for (int r = 0; r < d; ++r) {
            const Complex vrk = spec.eigenvectors(r, k);
            if (vrk == Complex(0.0))
                continue;
            for (int c = 0; c < d; ++c)
                point(r, c) += paired * vrk * std::conj(spec.eigenvectors(c, k));
        }
        // Column j of the rotation carries base_desc[j]; eigenvector k
        // carries base_desc[d-1-k].
        for (int r = 0; r < d; ++r)
            out.rotation(r, d - 1 - k) = spec.eigenvectors(r, k);
    }
    out.point = wrap_loose(std::move(point));
    out.value = value;
    return out;
}

namespace {

struct LocalAscentState {
    ComplexMatrix u1, u2;
    double value = 0.0;
};

HermitianOperator conjugate_local(const DensityState &base, const ComplexMatrix &u1,
                                  const ComplexMatrix &u2) {
    const ComplexMatrix u = tensor_product(u1, u2);
    return wrap_loose(u * base.matrix() * u.adjoint());
}

// Projected-gradient descent of tr(G M) over the local orbit from one start.
LocalAscentState run_local_descent(const HermitianOperator &g, const DensityState &base,
                                   const BipartiteDims &dims, ComplexMatrix u1, ComplexMatrix u2,
                                   int iters) {
    const double gscale = std::max(1.0, g.norm());
    double step = 0.5 / gscale;
    ComplexMatrix m = conjugate_local(base, u1, u2).matrix();
    double value = real_inner(g.matrix(), m);

    for (int it = 0; it < iters; ++it) {
        // C = [M, G] is anti-Hermitian; its partial traces are the
        // Lie-algebra gradients on the two factors.
        const ComplexMatrix c = m * g.matrix() - g.matrix() * m;
        ComplexMatrix k1 = ptrace_second_raw(c, dims.d1, dims.d2);
        ComplexMatrix k2 = ptrace_first_raw(c, dims.d1, dims.d2);
        const double grad_sq = std::pow(k1.frobenius_norm(), 2) + std::pow(k2.frobenius_norm(), 2);
        if (grad_sq <= 1e-24 * gscale * gscale)
            break;

        bool accepted = false;
        for (int bt = 0; bt < 40; ++bt) {
            ComplexMatrix k1s = k1;
            k1s *= Complex(step);
            ComplexMatrix k2s = k2;
            k2s *= Complex(step);
            ComplexMatrix u1_trial = expm_antihermitian(k1s) * u1;
            ComplexMatrix u2_trial = expm_antihermitian(k2s) * u2;
            const ComplexMatrix u = tensor_product(u1_trial, u2_trial);
            ComplexMatrix m_trial = u * base.matrix() * u.adjoint();
            const double value_trial = real_inner(g.matrix(), m_trial);
            if (value_trial <= value - 1e-4 * step * grad_sq) {
                u1 = std::move(u1_trial);
                u2 = std::move(u2_trial);
                m = std::move(m_trial);
                value = value_trial;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted)
            break;
        step = std::min(step * 1.5, 4.0 / gscale);
    }
    return {std::move(u1), std::move(u2), value};
}

} // namespace

LocalLmoResult lmo_local_orbit(const HermitianOperator &g, const DensityState &base,
                               const BipartiteDims &dims, int restarts, int iters,
                               std::uint64_t seed, const std::vector<LocalLmoResult> *warm_starts) {
    detail::check_bipartite_dims(base.dim(), dims.d1, dims.d2, "lmo_local_orbit");
    if (g.dim() != base.dim())
        throw DimensionError("lmo_local_orbit: functional vs base dimension mismatch");

    std::optional<LocalAscentState> best;
    int attempt = 0;
    auto consider = [&](ComplexMatrix u1, ComplexMatrix u2) {
        LocalAscentState s =
            run_local_descent(g, base, dims, std::move(u1), std::move(u2), iters);
        if (!best || s.value < best->value)
            best = std::move(s);
        ++attempt;
    };

    consider(ComplexMatrix::identity(dims.d1), ComplexMatrix::identity(dims.d2));
    if (warm_starts)
        for (const auto &w : *warm_starts)
            consider(w.u1, w.u2);
    while (attempt < restarts) {
        Rng rng = Rng::derived(seed, static_cast<std::uint64_t>(attempt));
        ComplexMatrix u1 = haar_random_unitary(dims.d1, rng);
        ComplexMatrix u2 = haar_random_unitary(dims.d2, rng);
        consider(std::move(u1), std::move(u2));
    }

    LocalLmoResult out{conjugate_local(base, best->u1, best->u2), best->value, best->u1, best->u2};
    return out;
}

namespace {

struct AtomPool {
    std::vector<MixtureAtom> atoms;

    void add(double weight, std::vector<ComplexMatrix> element, const HermitianOperator &point) {
        for (auto &a : atoms) {
            if ((a.point - point).norm() <= 1e-10 * std::max(1.0, point.norm())) {
                a.weight += weight;
                return;
            }
        }
        atoms.push_back(MixtureAtom{weight, std::move(element), point});
    }

    void rescale(double factor) {
        for (auto &a : atoms)
            a.weight *= factor;
    }

    // Drop negligible weights and renormalize to a probability vector.
    void prune(double cutoff) {
        std::vector<MixtureAtom> kept;
        double total = 0.0;
        for (auto &a : atoms)
            if (a.weight > cutoff) {
                total += a.weight;
                kept.push_back(std::move(a));
            }
        atoms = std::move(kept);
        if (total > 0.0)
            for (auto &a : atoms)
                a.weight /= total;
    }

    HermitianOperator combine(int dim) const {
        ComplexMatrix acc(dim);
        for (const auto &a : atoms) {
            const ComplexMatrix &p = a.point.matrix();
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    acc(i, j) += a.weight * p(i, j);
        }
        return wrap_loose(std::move(acc));
    }

    // Re-optimize the weights over the current atoms:
    //   min ||sum w_i a_i - target||^2  over the probability simplex.
    // Projected gradient on the atom Gram matrix; the pool stays small, so
    // this is cheap and removes the weight-balancing tail of the classic
    // Frank-Wolfe schedule.
    void reoptimize_weights(const HermitianOperator &target) {
        const size_t n = atoms.size();
        if (n < 2)
            return;
        std::vector<double> gram(n * n), lin(n), w(n);
        for (size_t i = 0; i < n; ++i) {
            w[i] = atoms[i].weight;
            lin[i] = frobenius_inner(atoms[i].point, target);
            for (size_t j = i; j < n; ++j) {
                const double gij = frobenius_inner(atoms[i].point, atoms[j].point);
                gram[i * n + j] = gij;
                gram[j * n + i] = gij;
            }
        }
        double lipschitz = 0.0; // row-sum bound on the largest eigenvalue
        for (size_t i = 0; i < n; ++i) {
            double row = 0.0;
            for (size_t j = 0; j < n; ++j)
                row += std::abs(gram[i * n + j]);
            lipschitz = std::max(lipschitz, row);
        }
        if (!(lipschitz > 0.0))
            return;
        const double step = 1.0 / lipschitz;

        std::vector<double> grad(n), sorted(n);
        auto project_simplex = [&](std::vector<double> &v) {
            sorted = v;
            std::sort(sorted.begin(), sorted.end(), std::greater<double>());
            double cum = 0.0, theta = 0.0;
            int support = 0;
            for (size_t k = 0; k < n; ++k) {
                cum += sorted[k];
                const double candidate = (cum - 1.0) / static_cast<double>(k + 1);
                if (sorted[k] - candidate > 0.0) {
                    theta = candidate;
                    support = static_cast<int>(k + 1);
                }
            }
            (void)support;
            for (auto &x : v)
                x = std::max(0.0, x - theta);
        };

        for (int it = 0; it < 200; ++it) {
            for (size_t i = 0; i < n; ++i) {
                double g = -lin[i];
                for (size_t j = 0; j < n; ++j)
                    g += gram[i * n + j] * w[j];
                grad[i] = g;
            }
            for (size_t i = 0; i < n; ++i)
                w[i] -= step * grad[i];
            project_simplex(w);
        }
        for (size_t i = 0; i < n; ++i)
            atoms[i].weight = w[i];
    }
};

} // namespace

MembershipVerdict frank_wolfe_membership(const HermitianOperator &target, const OrbitSpec &orbit,
                                         const FrankWolfeOptions &options) {
    const int dim = orbit.base_point.dim();
    if (target.dim() != dim)
        throw DimensionError("frank_wolfe_membership: target vs orbit dimension mismatch");
    if (std::abs(target.trace() - orbit.base_point.op().trace()) > 1e-8)
        throw DomainError("frank_wolfe_membership: target trace " + std::to_string(target.trace()) +
                          " is outside the orbit's affine slice");

    const bool exact_lmo = orbit.action.kind() == GroupAction::Kind::FullUnitaryAdjoint;
    if (!exact_lmo && orbit.action.kind() != GroupAction::Kind::LocalUnitaryProduct)
        throw DomainError("frank_wolfe_membership: orbit action must be full unitary or local product");

    MembershipVerdict verdict;
    verdict.seed = options.seed;
    verdict.heuristic_lmo = !exact_lmo;

    AtomPool pool;
    if (!options.initial_atoms.empty()) {
        for (const auto &a : options.initial_atoms)
            pool.add(a.weight, a.group_element, a.point);
        pool.prune(0.0);
    } else if (exact_lmo) {
        pool.add(1.0, {ComplexMatrix::identity(dim)}, orbit.base_point.op());
    } else {
        const BipartiteDims &dims = orbit.action.local_dims();
        pool.add(1.0, {ComplexMatrix::identity(dims.d1), ComplexMatrix::identity(dims.d2)},
                 orbit.base_point.op());
    }

    HermitianOperator y = pool.combine(dim);

    std::vector<LocalLmoResult> warm;
    double best_dist = std::numeric_limits<double>::infinity();
    int last_progress_iter = 0;
    double max_f_sample = -std::numeric_limits<double>::infinity(); // over LMO outputs, for margins

    const double tol = options.dist_tol;

    auto finalize_inside = [&]() {
        pool.prune(1e-12);
        pool.reoptimize_weights(target);
        pool.prune(1e-12);
        y = pool.combine(dim);
        verdict.distance = (y - target).norm();
        verdict.status = MembershipStatus::Inside;
        verdict.witness_mixture = pool.atoms;
    };

    // Margin of the separating functional F = (target - y)/||.||  against
    // every orbit point the solver has seen, plus one LMO probe along -F.
    auto compute_margin = [&](const HermitianOperator &y_now) -> std::pair<HermitianOperator, double> {
        HermitianOperator f = target - y_now;
        const double fn = f.norm();
        f *= 1.0 / fn;
        double max_on_orbit = -std::numeric_limits<double>::infinity();
        for (const auto &a : pool.atoms)
            max_on_orbit = std::max(max_on_orbit, frobenius_inner(f, a.point));
        HermitianOperator neg_f = f;
        neg_f *= -1.0;
        if (exact_lmo) {
            max_on_orbit = std::max(max_on_orbit,
                                    -lmo_unitary_orbit(neg_f, orbit.base_spectrum).value);
        } else {
            const LocalLmoResult probe =
                lmo_local_orbit(neg_f, orbit.base_point, orbit.action.local_dims(),
                                options.lmo_restarts, options.lmo_iters, options.seed ^ 0xabcdefULL,
                                &warm);
            max_on_orbit = std::max(max_on_orbit, -probe.value);
        }
        return {std::move(f), frobenius_inner(f, target) - max_on_orbit};
    };

    for (int t = 0; t < options.max_iter; ++t) {
        verdict.iterations = t + 1;
        HermitianOperator grad = y - target;
        const double dist = grad.norm();
        if (options.record_distances)
            options.record_distances->push_back(dist);
        if (dist < best_dist - 1e-12) {
            best_dist = dist;
            last_progress_iter = t;
        }
        if (dist <= tol) {
            finalize_inside();
            if (verdict.distance <= tol)
                return verdict;
            // Recombination drifted; keep iterating from the exact mixture.
            verdict.status = MembershipStatus::Inconclusive;
            verdict.witness_mixture.clear();
            y = pool.combine(dim);
        }

        // Linear minimization oracle.
        HermitianOperator s = HermitianOperator::zero(dim);
        std::vector<ComplexMatrix> element;
        if (exact_lmo) {
            UnitaryLmoResult r = lmo_unitary_orbit(grad, orbit.base_spectrum);
            s = std::move(r.point);
            element = {std::move(r.rotation)};
        } else {
            const int restarts = t == 0 ? options.lmo_restarts
                                        : std::max(2, options.lmo_restarts / 4);
            LocalLmoResult r =
                lmo_local_orbit(grad, orbit.base_point, orbit.action.local_dims(), restarts,
                                options.lmo_iters, Rng::derived(options.seed, static_cast<std::uint64_t>(t)).integer(),
                                &warm);
            s = r.point;
            element = {r.u1, r.u2};
            warm.clear();
            warm.push_back(std::move(r));
        }
        max_f_sample = std::max(max_f_sample, -frobenius_inner(grad, s));

        const double gap = frobenius_inner(grad, y - s);
        verdict.fw_gap = gap;

        if (exact_lmo) {
            // Duality certificate: f* >= f(y) - gap for the exact oracle.
            const double f_now = 0.5 * dist * dist;
            const double lower = f_now - gap;
            if (lower > 0.5 * tol * tol) {
                auto [f, margin] = compute_margin(y);
                verdict.status = MembershipStatus::LikelyOutside;
                verdict.separating_functional = std::move(f);
                verdict.margin = margin;
                verdict.distance = dist;
                return verdict;
            }
        }

        // Exact line search on the quadratic.
        HermitianOperator dir = s - y;
        const double denom = dir.norm() * dir.norm();
        double gamma = 0.0;
        if (denom > 0.0)
            gamma = std::clamp(frobenius_inner(target - y, dir) / denom, 0.0, 1.0);
        if (gamma > 0.0) {
            pool.rescale(1.0 - gamma);
            pool.add(gamma, std::move(element), s);
            dir *= gamma;
            y += dir;
        }

        if ((t + 1) % 25 == 0) {
            pool.prune(1e-12);
            pool.reoptimize_weights(target);
            pool.prune(1e-12);
            y = pool.combine(dim);
        }

        // Stalled heuristic search: no progress within the patience window.
        if (!exact_lmo && t - last_progress_iter >= options.stall_patience && best_dist > tol) {
            auto [f, margin] = compute_margin(y);
            verdict.distance = (y - target).norm();
            if (margin > 0.0) {
                verdict.status = MembershipStatus::LikelyOutside;
                verdict.separating_functional = std::move(f);
                verdict.margin = margin;
            } else {
                verdict.status = MembershipStatus::Inconclusive;
            }
            return verdict;
        }
    }

    pool.prune(1e-12);
    pool.reoptimize_weights(target);
    pool.prune(1e-12);
    y = pool.combine(dim);
    verdict.distance = (y - target).norm();
    if (verdict.distance <= tol) {
        verdict.status = MembershipStatus::Inside;
        verdict.witness_mixture = pool.atoms;
    } else {
        verdict.status = MembershipStatus::Inconclusive;
    }
    return verdict;
}

BallEstimate inscribed_ball_density_states(int d) {
    if (d < 2)
        throw DimensionError("inscribed_ball_density_states: needs d >= 2");
    const double radius = 1.0 / std::sqrt(static_cast<double>(d) * (d - 1));

    std::vector<double> witness_spectrum(static_cast<size_t>(d), 1.0 / (d - 1));
    witness_spectrum[0] = 0.0;
    DensityState witness(HermitianOperator::diagonal(witness_spectrum));
    DensityState center = DensityState::maximally_mixed(d);

    BallEstimate est{center, radius, radius, 0, 0, witness,
                     (witness.op() - center.op()).norm()};
    return est;
}

double two_qubit_orbit_ball_bound(double lambda_sq) {
    if (!(lambda_sq >= 0.5 && lambda_sq <= 1.0))
        throw DomainError("two_qubit_orbit_ball_bound: lambda_sq " + std::to_string(lambda_sq) +
                          " outside [1/2, 1]; fold smaller weights through lambda_sq -> 1 - lambda_sq");
    return std::min(lambda_sq - 0.5, 1.0 / std::sqrt(12.0));
}

namespace {

HermitianOperator random_slice_direction(Rng &rng, const OrbitSpec &orbit, AffineSlice slice) {
    const int dim = orbit.base_point.dim();
    HermitianOperator h = traceless_part(HermitianOperator(rng.random_hermitian(dim)));
    if (slice == AffineSlice::Block00) {
        const BipartiteDims &dims = orbit.action.local_dims();
        h = block_decompose(h, dims).p00;
    }
    const double n = h.norm();
    if (n < 1e-12)
        return random_slice_direction(rng, orbit, slice);
    h *= 1.0 / n;
    return h;
}

} // namespace

BallEstimate inscribed_radius_estimate(const OrbitSpec &orbit, const DensityState &center,
                                       int directions, AffineSlice slice,
                                       const RadiusProbeOptions &options) {
    if (directions < 1)
        throw DomainError("inscribed_radius_estimate: needs at least one direction");
    if (slice == AffineSlice::Block00 &&
        orbit.action.kind() != GroupAction::Kind::LocalUnitaryProduct)
        throw DomainError("inscribed_radius_estimate: Block00 slice needs a local product orbit");

    if (options.verify_center) {
        FrankWolfeOptions fw = options.fw;
        fw.seed = options.seed ^ 0x5eedULL;
        const MembershipVerdict v = frank_wolfe_membership(center.op(), orbit, fw);
        if (v.status != MembershipStatus::Inside)
            throw InvalidCenterError("inscribed_radius_estimate: center not certified inside "
                                     "(status " +
                                     std::to_string(static_cast<int>(v.status)) + ", distance " +
                                     std::to_string(v.distance) + ")");
    }

    const double cap = std::max(1e-6, (orbit.base_point.op() - center.op()).norm());
    double lower = std::numeric_limits<double>::infinity();
    double upper = options.analytic_upper ? *options.analytic_upper
                                          : std::numeric_limits<double>::infinity();

    for (int dir_idx = 0; dir_idx < directions; ++dir_idx) {
        Rng rng = Rng::derived(options.seed, static_cast<std::uint64_t>(dir_idx));
        const HermitianOperator direction = random_slice_direction(rng, orbit, slice);

        double lo = 0.0;
        double hi = options.analytic_upper ? std::min(cap, *options.analytic_upper * 1.25 + 1e-3)
                                           : cap;
        std::vector<MixtureAtom> warm_mixture;
        int probes = 0;
        while (hi - lo > options.bisect_tol * std::max(1.0, hi) && probes < 60) {
            const double mid = 0.5 * (lo + hi);
            HermitianOperator target = direction;
            target *= mid;
            target += center.op();

            FrankWolfeOptions fw = options.fw;
            fw.seed = Rng::derived(options.seed, (static_cast<std::uint64_t>(dir_idx) << 16) ^
                                                     static_cast<std::uint64_t>(probes))
                          .integer();
            fw.initial_atoms = warm_mixture;
            const MembershipVerdict v = frank_wolfe_membership(target, orbit, fw);
            if (v.status == MembershipStatus::Inside) {
                lo = mid;
                warm_mixture = v.witness_mixture;
            } else {
                hi = mid;
                if (v.status == MembershipStatus::LikelyOutside)
                    upper = std::min(upper, mid);
            }
            ++probes;
        }
        lower = std::min(lower, lo);
        upper = std::min(upper, std::max(hi, lo)); // bracket top caps the estimate
    }

    BallEstimate est{center, std::min(lower, upper), upper, directions, options.seed, std::nullopt,
                     0.0};
    return est;
}

EllipsoidContainmentReport block_ellipsoid_containment(double lambda_sq, double radius_r,
                                                       double radius_r0, int samples,
                                                       const FrankWolfeOptions &fw) {
    if (!(radius_r > 0.0) || !(radius_r0 > 0.0))
        throw DomainError("block_ellipsoid_containment: radii must be positive");
    if (!(lambda_sq >= 0.5 && lambda_sq <= 1.0))
        throw DomainError("block_ellipsoid_containment: lambda_sq outside [1/2, 1]");

    ComplexVector phi(4, Complex(0.0));
    phi[0] = std::sqrt(lambda_sq);
    phi[3] = std::sqrt(1.0 - lambda_sq);
    const BipartiteDims dims(2, 2);
    const OrbitSpec orbit = OrbitSpec::local(projector(phi), dims);
    const HermitianOperator center = HermitianOperator::normalized_identity(4);

    EllipsoidContainmentReport report;
    report.lambda_sq = lambda_sq;
    report.radius_r = radius_r;
    report.radius_r0 = radius_r0;
    report.samples = samples;
    report.volume_ratio = std::pow(radius_r / radius_r0, 9.0);
    report.seed = fw.seed;

    std::vector<MixtureAtom> warm_mixture;
    for (int i = 0; i < samples; ++i) {
        Rng rng = Rng::derived(fw.seed, static_cast<std::uint64_t>(i));

        HermitianOperator p10 = traceless_part(HermitianOperator(rng.random_hermitian(2)));
        HermitianOperator p01 = traceless_part(HermitianOperator(rng.random_hermitian(2)));
        HermitianOperator p00 = block_decompose(
            HermitianOperator(rng.random_hermitian(4)), dims).p00;

        BlockComponents blocks{dims, 0.0, p10, p01, p00};
        HermitianOperator b10 = blocks.embedded_block10();
        HermitianOperator b01 = blocks.embedded_block01();

        const double q = (b10.norm() * b10.norm() + b01.norm() * b01.norm()) /
                             (radius_r * radius_r) +
                         (p00.norm() * p00.norm()) / (radius_r0 * radius_r0);
        if (!(q > 1e-12)) {
            --i;
            continue;
        }
        const double s = 0.5 / std::sqrt(q); // boundary: constraint value 1/4
        HermitianOperator point = center;
        b10 *= s;
        b01 *= s;
        HermitianOperator p00s = p00;
        p00s *= s;
        point += b10;
        point += b01;
        point += p00s;

        FrankWolfeOptions run = fw;
        run.seed = Rng::derived(fw.seed, 0x777ULL + static_cast<std::uint64_t>(i)).integer();
        run.initial_atoms = warm_mixture;
        const MembershipVerdict v = frank_wolfe_membership(point, orbit, run);
        if (v.status == MembershipStatus::Inside) {
            ++report.inside;
            warm_mixture = v.witness_mixture;
        } else if (report.failures.size() < 8) {
            report.failures.push_back(EllipsoidSample{point, v.status, v.distance});
        }
    }
    report.all_inside = report.inside == report.samples;
    return report;
}

SeparabilityReport ppt_separability(const DensityState &rho, const BipartiteDims &dims) {
    detail::check_bipartite_dims(rho.dim(), dims.d1, dims.d2, "ppt_separability");
    const HermitianOperator pt = partial_transpose(rho.op(), dims.d1, dims.d2);
    SeparabilityReport report;
    report.min_partial_transpose_eigenvalue = eigh(pt).eigenvalues.back();
    if (report.min_partial_transpose_eigenvalue < -1e-9) {
        report.verdict = Separability::Entangled;
        return report;
    }
    const bool exact_regime = (dims.d1 == 2 && dims.d2 == 2) || (dims.d1 == 2 && dims.d2 == 3) ||
                              (dims.d1 == 3 && dims.d2 == 2);
    report.verdict = exact_regime ? Separability::Separable : Separability::Indeterminate;
    return report;
}

} // namespace orbitgeom
