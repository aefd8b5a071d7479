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

#include "orbitgeom/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace orbitgeom {

namespace {

double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0.0;
    const int d = a.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j)
                s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One cyclic sweep of two-sided Jacobi rotations.  Each pivot (p,q) is
// annihilated by J = diag(1, e^{-i phi}) * R(theta) acting on the (p,q)
// plane, where phi is the phase of a_pq and R is the classic real rotation.
void jacobi_sweep(ComplexMatrix &a, ComplexMatrix &v, double threshold) {
    const int d = a.dim();
    for (int p = 0; p < d - 1; ++p) {
        for (int q = p + 1; q < d; ++q) {
            const Complex apq = a(p, q);
            const double b = std::abs(apq);
            if (b <= threshold)
                continue;
            const Complex phase = apq / b; // e^{i phi}
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double tau = (aqq - app) / (2.0 * b);
            const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;

            const Complex jqp = -s * std::conj(phase); // J[q][p]
            const Complex jqq = c * std::conj(phase);  // J[q][q]

            // Columns p,q of A <- A * J.
            for (int i = 0; i < d; ++i) {
                const Complex aip = a(i, p);
                const Complex aiq = a(i, q);
                a(i, p) = c * aip + jqp * aiq;
                a(i, q) = s * aip + jqq * aiq;
            }
            // Rows p,q of A <- J^dag * A.
            for (int j = 0; j < d; ++j) {
                const Complex apj = a(p, j);
                const Complex aqj = a(q, j);
                a(p, j) = c * apj + std::conj(jqp) * aqj;
                a(q, j) = s * apj + std::conj(jqq) * aqj;
            }
            // Clean the pivot and keep the diagonal exactly real.
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            a(p, p) = Complex(a(p, p).real(), 0.0);
            a(q, q) = Complex(a(q, q).real(), 0.0);

            // Accumulate V <- V * J.
            for (int i = 0; i < d; ++i) {
                const Complex vip = v(i, p);
                const Complex viq = v(i, q);
                v(i, p) = c * vip + jqp * viq;
                v(i, q) = s * vip + jqq * viq;
            }
        }
    }
}

} // namespace

ComplexMatrix SpectralDecomposition::reconstruct() const {
    const int d = eigenvectors.dim();
    ComplexMatrix out(d);
    for (int k = 0; k < d; ++k) {
        const double lam = eigenvalues[static_cast<size_t>(k)];
        for (int i = 0; i < d; ++i) {
            const Complex vik = eigenvectors(i, k);
            if (vik == Complex(0.0))
                continue;
            for (int j = 0; j < d; ++j)
                out(i, j) += lam * vik * std::conj(eigenvectors(j, k));
        }
    }
    return out;
}

SpectralDecomposition eigh_matrix(const ComplexMatrix &input) {
    constexpr int kMaxSweeps = 100;

    const int d = input.dim();
    ComplexMatrix a = input;
    ComplexMatrix v = ComplexMatrix::identity(d);

    const double scale = a.frobenius_norm();
    const double threshold = 1e-12 * scale;

    if (scale > 0.0) {
        int sweep = 0;
        while (off_diagonal_norm(a) > threshold) {
            if (++sweep > kMaxSweeps)
                throw NumericalError("eigh: no convergence after " + std::to_string(kMaxSweeps) +
                                     " Jacobi sweeps (off-diagonal " +
                                     std::to_string(off_diagonal_norm(a)) + ")");
            jacobi_sweep(a, v, 0.1 * threshold / std::max(1, d));
        }
    }

    std::vector<int> order(static_cast<size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    SpectralDecomposition out;
    out.eigenvalues.resize(static_cast<size_t>(d));
    out.eigenvectors = ComplexMatrix(d);
    for (int k = 0; k < d; ++k) {
        out.eigenvalues[static_cast<size_t>(k)] = a(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]).real();
        for (int i = 0; i < d; ++i)
            out.eigenvectors(i, k) = v(i, order[static_cast<size_t>(k)]);
    }
    return out;
}

SpectralDecomposition eigh(const HermitianOperator &a) { return eigh_matrix(a.matrix()); }

} // namespace orbitgeom
