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

#include "orbitgeom/bipartite.hpp"
#include "orbitgeom/hermitian.hpp"

namespace orbitgeom {

using RealVector = std::vector<double>;

/// Dense real matrix acting on the flattened coordinate space; row-major.
struct RealMatrix {
    int dim = 0;
    std::vector<double> data;

    RealMatrix() = default;
    explicit RealMatrix(int d) : dim(d), data(static_cast<size_t>(d) * d, 0.0) {}

    double &at(int i, int j) { return data[static_cast<size_t>(i) * dim + j]; }
    double at(int i, int j) const { return data[static_cast<size_t>(i) * dim + j]; }

    RealVector apply(const RealVector &v) const;
    /// max_ij |M + M^T|_ij, the antisymmetry defect.
    double symmetry_defect() const;
};

double dot(const RealVector &a, const RealVector &b);
double norm(const RealVector &a);
void axpy(double alpha, const RealVector &x, RealVector &y);
void scale(RealVector &v, double alpha);

/// Orthonormal real basis of the traceless Hermitian operators su*(d) under
/// the Frobenius pairing: paired symmetric/antisymmetric off-diagonal
/// elements followed by d-1 diagonal combinations.  Fixing the basis once
/// makes Hermitian <-> coordinate flattening exact and reproducible.
class SuCoordinates {
  public:
    explicit SuCoordinates(int d);

    int matrix_dim() const { return d_; }
    int real_dim() const { return d_ * d_ - 1; }

    /// Coordinates of the traceless part of x.
    RealVector coords(const HermitianOperator &x) const;
    HermitianOperator from_coords(const RealVector &v) const;
    const HermitianOperator &basis_element(int k) const { return basis_[static_cast<size_t>(k)]; }

  private:
    int d_;
    std::vector<HermitianOperator> basis_;
};

/// Descriptor of the compact group acting orthogonally on the realified
/// traceless Hermitian space.  Built-in kinds apply their Lie algebra
/// generators matrix-free (as commutators); custom actions carry explicit
/// antisymmetric real matrices.
class GroupAction {
  public:
    enum class Kind { FullUnitaryAdjoint, LocalUnitaryProduct, CustomLieGenerators };

    static GroupAction full_unitary_adjoint(int d);
    static GroupAction local_unitary_product(int d1, int d2);
    /// Validates each generator is antisymmetric within 1e-9.
    static GroupAction custom(int ambient_real_dim, std::vector<RealMatrix> generators);

    Kind kind() const { return kind_; }
    int ambient_real_dim() const { return ambient_real_dim_; }
    /// Dimension of the Hermitian matrices the action lives on (built-ins).
    int matrix_dim() const { return matrix_dim_; }
    const BipartiteDims &local_dims() const;
    int generator_count() const;

    /// Image of v under generator g; real-linear and antisymmetric.
    RealVector apply_generator(int g, const RealVector &v) const;

    const SuCoordinates &coordinates() const;

    /// Orthogonal projection onto the orthogonal complement of the fixed
    /// space V_K.  For the built-in actions V_K = <I>, already removed by
    /// the traceless flattening, so this is the identity; for custom
    /// actions the common kernel of the generators is computed once and
    /// projected out.
    RealVector project_out_fixed_space(const RealVector &v) const;
    int fixed_space_dim() const { return static_cast<int>(fixed_space_basis_.size()); }

  private:
    GroupAction() = default;

    Kind kind_ = Kind::FullUnitaryAdjoint;
    int ambient_real_dim_ = 0;
    int matrix_dim_ = 0;
    std::optional<BipartiteDims> dims_;
    std::optional<SuCoordinates> coords_;
    std::vector<RealMatrix> custom_generators_;
    std::vector<RealVector> fixed_space_basis_; // orthonormal; custom only

    // Hermitian basis h_a used to build commutator generators [i h_a, x].
    std::vector<ComplexMatrix> lie_basis_1_; // full: u(d); local: u(d1)
    std::vector<ComplexMatrix> lie_basis_2_; // local: u(d2)

    void build_fixed_space();
};

/// Hermitian basis of all d x d Hermitian matrices (d^2 elements),
/// orthonormal under the Frobenius pairing.  The generators of the unitary
/// action are the commutator maps x -> i[h, x] over this basis.
std::vector<ComplexMatrix> hermitian_basis(int d);

} // namespace orbitgeom
