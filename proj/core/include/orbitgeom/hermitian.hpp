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

#include "orbitgeom/complex_matrix.hpp"

namespace orbitgeom {

/// Element of the real vector space of Hermitian operators, equipped with
/// the Frobenius pairing tr(AB).  Construction symmetrizes (A + A^dag)/2 only
/// when the asymmetry is below tolerance, and rejects otherwise.
class HermitianOperator {
  public:
    static constexpr double kDefaultHermiticityTol = 1e-10;

    explicit HermitianOperator(ComplexMatrix m, double hermiticity_tol = kDefaultHermiticityTol)
        : matrix_(std::move(m)), tol_(hermiticity_tol) {
        const double defect = matrix_.hermiticity_defect();
        if (defect > tol_)
            throw DomainError("HermitianOperator: asymmetry " + std::to_string(defect) +
                              " exceeds tolerance " + std::to_string(tol_));
        for (int i = 0; i < matrix_.dim(); ++i)
            for (int j = i; j < matrix_.dim(); ++j) {
                const Complex s = 0.5 * (matrix_(i, j) + std::conj(matrix_(j, i)));
                matrix_(i, j) = s;
                matrix_(j, i) = std::conj(s);
            }
    }

    static HermitianOperator zero(int dim) { return HermitianOperator(ComplexMatrix(dim)); }
    static HermitianOperator identity(int dim) { return HermitianOperator(ComplexMatrix::identity(dim)); }

    /// The maximally mixed operator I/d.
    static HermitianOperator normalized_identity(int dim) {
        ComplexMatrix m = ComplexMatrix::identity(dim);
        m *= Complex(1.0 / dim);
        return HermitianOperator(std::move(m));
    }

    static HermitianOperator diagonal(const std::vector<double> &values) {
        ComplexMatrix m(static_cast<int>(values.size()));
        for (int i = 0; i < m.dim(); ++i)
            m(i, i) = values[static_cast<size_t>(i)];
        return HermitianOperator(std::move(m));
    }

    const ComplexMatrix &matrix() const { return matrix_; }
    int dim() const { return matrix_.dim(); }
    double hermiticity_tol() const { return tol_; }

    const Complex &operator()(int i, int j) const { return matrix_(i, j); }

    double trace() const { return matrix_.trace().real(); }
    double norm() const { return matrix_.frobenius_norm(); }

    HermitianOperator &operator+=(const HermitianOperator &o) {
        matrix_ += o.matrix_;
        return *this;
    }
    HermitianOperator &operator-=(const HermitianOperator &o) {
        matrix_ -= o.matrix_;
        return *this;
    }
    HermitianOperator &operator*=(double s) {
        matrix_ *= Complex(s);
        return *this;
    }

    friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator &b) { return a += b; }
    friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator &b) { return a -= b; }
    friend HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }

    /// Conjugation U . A = U A U^dag; preserves Hermiticity exactly, so the
    /// result is re-wrapped with a loose tolerance to absorb roundoff.
    HermitianOperator conjugated_by(const ComplexMatrix &u) const {
        ComplexMatrix m = u * matrix_ * u.adjoint();
        const double tol = std::max(tol_, 1e-9 * (1.0 + m.max_abs()));
        return HermitianOperator(std::move(m), tol);
    }

  private:
    ComplexMatrix matrix_;
    double tol_;
};

/// Frobenius pairing tr(ab).  Symmetric; the imaginary part must vanish for
/// Hermitian inputs and is asserted below 1e-10 before being discarded.
double frobenius_inner(const HermitianOperator &a, const HermitianOperator &b);

/// x - (tr(x)/d) I; orthogonal projection onto the traceless subspace.
HermitianOperator traceless_part(const HermitianOperator &x);

/// Positive semidefinite, unit-trace element of the state body.
class DensityState {
  public:
    static constexpr double kDefaultTraceTol = 1e-10;
    static constexpr double kDefaultPsdTol = 1e-9;

    explicit DensityState(HermitianOperator op, double trace_tol = kDefaultTraceTol,
                          double psd_tol = kDefaultPsdTol);

    static DensityState maximally_mixed(int dim) {
        return DensityState(HermitianOperator::normalized_identity(dim));
    }

    const HermitianOperator &op() const { return op_; }
    int dim() const { return op_.dim(); }
    const ComplexMatrix &matrix() const { return op_.matrix(); }
    double min_eigenvalue() const { return min_eigenvalue_; }

  private:
    HermitianOperator op_;
    double min_eigenvalue_;
};

/// Rank-1 projector |v><v| / ||v||^2 as a density state.
DensityState projector(const ComplexVector &v);

enum class TraceSide { First, Second };

/// Partial trace of an operator on H1 (x) H2 with dim(H1) = d1, dim(H2) = d2.
/// side = First traces out H1 (result on H2); side = Second traces out H2.
HermitianOperator partial_trace(const HermitianOperator &x, int d1, int d2, TraceSide side);

/// Transposes the second tensor factor.  Involution, trace preserving.
HermitianOperator partial_transpose(const HermitianOperator &x, int d1, int d2);

namespace detail {
/// Shared precondition: d1*d2 must factor dim(x).
inline void check_bipartite_dims(int dim, int d1, int d2, const char *what) {
    if (d1 < 1 || d2 < 1 || d1 * d2 != dim)
        throw DimensionError(std::string(what) + ": dims (" + std::to_string(d1) + "," +
                             std::to_string(d2) + ") do not factor matrix dimension " +
                             std::to_string(dim));
}
} // namespace detail

} // namespace orbitgeom
