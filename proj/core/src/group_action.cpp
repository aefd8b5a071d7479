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

#include "orbitgeom/group_action.hpp"

#include <cmath>

#include "orbitgeom/spectral.hpp"

namespace orbitgeom {

RealVector RealMatrix::apply(const RealVector &v) const {
    if (static_cast<int>(v.size()) != dim)
        throw DimensionError("RealMatrix::apply: length mismatch");
    RealVector out(static_cast<size_t>(dim), 0.0);
    for (int i = 0; i < dim; ++i) {
        double acc = 0.0;
        for (int j = 0; j < dim; ++j)
            acc += at(i, j) * v[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

double RealMatrix::symmetry_defect() const {
    double m = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m = std::max(m, std::abs(at(i, j) + at(j, i)));
    return m;
}

double dot(const RealVector &a, const RealVector &b) {
    double s = 0.0;
    for (size_t k = 0; k < a.size(); ++k)
        s += a[k] * b[k];
    return s;
}

double norm(const RealVector &a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const RealVector &x, RealVector &y) {
    for (size_t k = 0; k < x.size(); ++k)
        y[k] += alpha * x[k];
}

void scale(RealVector &v, double alpha) {
    for (auto &e : v)
        e *= alpha;
}

SuCoordinates::SuCoordinates(int d) : d_(d) {
    if (d < 1)
        throw DimensionError("SuCoordinates: dimension must be >= 1");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    basis_.reserve(static_cast<size_t>(d) * d - 1);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            ComplexMatrix sym(d);
            sym(i, j) = inv_sqrt2;
            sym(j, i) = inv_sqrt2;
            basis_.emplace_back(std::move(sym));

            ComplexMatrix asym(d);
            asym(i, j) = Complex(0.0, inv_sqrt2);
            asym(j, i) = Complex(0.0, -inv_sqrt2);
            basis_.emplace_back(std::move(asym));
        }
    for (int k = 1; k < d; ++k) {
        // diag(1,...,1,-k,0,...,0)/sqrt(k(k+1)) with k leading ones.
        ComplexMatrix diag(d);
        const double s = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
        for (int i = 0; i < k; ++i)
            diag(i, i) = s;
        diag(k, k) = -static_cast<double>(k) * s;
        basis_.emplace_back(std::move(diag));
    }
}

RealVector SuCoordinates::coords(const HermitianOperator &x) const {
    if (x.dim() != d_)
        throw DimensionError("SuCoordinates::coords: dimension mismatch");
    RealVector v(static_cast<size_t>(real_dim()));
    for (int k = 0; k < real_dim(); ++k)
        v[static_cast<size_t>(k)] = frobenius_inner(basis_[static_cast<size_t>(k)], x);
    return v;
}

HermitianOperator SuCoordinates::from_coords(const RealVector &v) const {
    if (static_cast<int>(v.size()) != real_dim())
        throw DimensionError("SuCoordinates::from_coords: length mismatch");
    ComplexMatrix acc(d_);
    for (int k = 0; k < real_dim(); ++k) {
        const double c = v[static_cast<size_t>(k)];
        if (c == 0.0)
            continue;
        const ComplexMatrix &b = basis_[static_cast<size_t>(k)].matrix();
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j)
                acc(i, j) += c * b(i, j);
    }
    return HermitianOperator(std::move(acc), 1e-9);
}

std::vector<ComplexMatrix> hermitian_basis(int d) {
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<size_t>(d) * d);
    ComplexMatrix id = ComplexMatrix::identity(d);
    id *= Complex(1.0 / std::sqrt(static_cast<double>(d)));
    out.push_back(std::move(id));
    SuCoordinates su(d);
    for (int k = 0; k < su.real_dim(); ++k)
        out.push_back(su.basis_element(k).matrix());
    return out;
}

GroupAction GroupAction::full_unitary_adjoint(int d) {
    if (d < 2)
        throw DimensionError("full_unitary_adjoint: needs d >= 2");
    GroupAction a;
    a.kind_ = Kind::FullUnitaryAdjoint;
    a.matrix_dim_ = d;
    a.coords_.emplace(d);
    a.ambient_real_dim_ = a.coords_->real_dim();
    a.lie_basis_1_ = hermitian_basis(d);
    return a;
}

GroupAction GroupAction::local_unitary_product(int d1, int d2) {
    if (d1 < 2 || d2 < 2)
        throw DimensionError("local_unitary_product: needs d1, d2 >= 2");
    GroupAction a;
    a.kind_ = Kind::LocalUnitaryProduct;
    a.dims_.emplace(d1, d2);
    a.matrix_dim_ = d1 * d2;
    a.coords_.emplace(d1 * d2);
    a.ambient_real_dim_ = a.coords_->real_dim();
    a.lie_basis_1_ = hermitian_basis(d1);
    a.lie_basis_2_ = hermitian_basis(d2);
    return a;
}

GroupAction GroupAction::custom(int ambient_real_dim, std::vector<RealMatrix> generators) {
    if (generators.empty())
        throw DegenerateInputError("custom action: generator list is empty");
    for (const auto &g : generators) {
        if (g.dim != ambient_real_dim)
            throw DimensionError("custom action: generator dimension mismatch");
        if (g.symmetry_defect() > 1e-9)
            throw DomainError("custom action: generator is not antisymmetric (defect " +
                              std::to_string(g.symmetry_defect()) + " > 1e-9)");
    }
    GroupAction a;
    a.kind_ = Kind::CustomLieGenerators;
    a.ambient_real_dim_ = ambient_real_dim;
    a.custom_generators_ = std::move(generators);
    a.build_fixed_space();
    return a;
}

const BipartiteDims &GroupAction::local_dims() const {
    if (!dims_)
        throw DomainError("GroupAction: not a local product action");
    return *dims_;
}

int GroupAction::generator_count() const {
    switch (kind_) {
    case Kind::FullUnitaryAdjoint:
        return static_cast<int>(lie_basis_1_.size());
    case Kind::LocalUnitaryProduct:
        return static_cast<int>(lie_basis_1_.size() + lie_basis_2_.size());
    case Kind::CustomLieGenerators:
        return static_cast<int>(custom_generators_.size());
    }
    return 0;
}

const SuCoordinates &GroupAction::coordinates() const {
    if (!coords_)
        throw DomainError("GroupAction: custom actions have no Hermitian coordinate chart");
    return *coords_;
}

namespace {

// i[h, x]; Hermitian whenever h and x are.
ComplexMatrix commutator_i(const ComplexMatrix &h, const ComplexMatrix &x) {
    ComplexMatrix hx = h * x;
    ComplexMatrix xh = x * h;
    hx -= xh;
    hx *= Complex(0.0, 1.0);
    return hx;
}

// i[h (x) I, x] computed without materializing the Kronecker factor.
ComplexMatrix commutator_i_first(const ComplexMatrix &h, const ComplexMatrix &x, int d1, int d2) {
    const int d = d1 * d2;
    ComplexMatrix out(d);
    // (h (x) I) x  and  x (h (x) I)
    for (int i = 0; i < d1; ++i)
        for (int k = 0; k < d2; ++k) {
            const int row = i * d2 + k;
            for (int col = 0; col < d; ++col) {
                Complex left = 0.0;
                for (int p = 0; p < d1; ++p)
                    left += h(i, p) * x(p * d2 + k, col);
                out(row, col) = left;
            }
        }
    for (int row = 0; row < d; ++row)
        for (int j = 0; j < d1; ++j)
            for (int l = 0; l < d2; ++l) {
                const int col = j * d2 + l;
                Complex right = 0.0;
                for (int p = 0; p < d1; ++p)
                    right += x(row, p * d2 + l) * h(p, j);
                out(row, col) -= right;
            }
    out *= Complex(0.0, 1.0);
    return out;
}

// i[I (x) h, x].
ComplexMatrix commutator_i_second(const ComplexMatrix &h, const ComplexMatrix &x, int d1, int d2) {
    const int d = d1 * d2;
    ComplexMatrix out(d);
    for (int i = 0; i < d1; ++i)
        for (int k = 0; k < d2; ++k) {
            const int row = i * d2 + k;
            for (int col = 0; col < d; ++col) {
                Complex left = 0.0;
                for (int q = 0; q < d2; ++q)
                    left += h(k, q) * x(i * d2 + q, col);
                out(row, col) = left;
            }
        }
    for (int row = 0; row < d; ++row)
        for (int j = 0; j < d1; ++j)
            for (int l = 0; l < d2; ++l) {
                const int col = j * d2 + l;
                Complex right = 0.0;
                for (int q = 0; q < d2; ++q)
                    right += x(row, j * d2 + q) * h(q, l);
                out(row, col) -= right;
            }
    out *= Complex(0.0, 1.0);
    return out;
}

} // namespace

RealVector GroupAction::apply_generator(int g, const RealVector &v) const {
    if (g < 0 || g >= generator_count())
        throw DomainError("apply_generator: index out of range");
    if (kind_ == Kind::CustomLieGenerators)
        return custom_generators_[static_cast<size_t>(g)].apply(v);

    const HermitianOperator x = coords_->from_coords(v);
    ComplexMatrix image;
    if (kind_ == Kind::FullUnitaryAdjoint) {
        image = commutator_i(lie_basis_1_[static_cast<size_t>(g)], x.matrix());
    } else {
        const int n1 = static_cast<int>(lie_basis_1_.size());
        if (g < n1)
            image = commutator_i_first(lie_basis_1_[static_cast<size_t>(g)], x.matrix(),
                                       dims_->d1, dims_->d2);
        else
            image = commutator_i_second(lie_basis_2_[static_cast<size_t>(g - n1)], x.matrix(),
                                        dims_->d1, dims_->d2);
    }
    return coords_->coords(HermitianOperator(std::move(image), 1e-8));
}

void GroupAction::build_fixed_space() {
    // Common kernel of the generators: kernel of K = sum_g G^T G, taken as
    // the span of eigenvectors with near-zero eigenvalue.
    const int n = ambient_real_dim_;
    ComplexMatrix k(n);
    for (const auto &g : custom_generators_)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double acc = 0.0;
                for (int p = 0; p < n; ++p)
                    acc += g.at(p, i) * g.at(p, j);
                k(i, j) += acc;
            }
    const SpectralDecomposition spec = eigh_matrix(k);
    const double cut = 1e-12 * std::max(1.0, spec.eigenvalues.front());
    for (int idx = n - 1; idx >= 0 && spec.eigenvalues[static_cast<size_t>(idx)] <= cut; --idx) {
        RealVector b(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            b[static_cast<size_t>(i)] = spec.eigenvectors(i, idx).real();
        const double bn = norm(b);
        if (bn > 0.5) { // eigenvectors of a real symmetric matrix stay real
            scale(b, 1.0 / bn);
            fixed_space_basis_.push_back(std::move(b));
        }
    }
}

RealVector GroupAction::project_out_fixed_space(const RealVector &v) const {
    RealVector out = v;
    for (const auto &b : fixed_space_basis_)
        axpy(-dot(b, out), b, out);
    return out;
}

} // namespace orbitgeom
