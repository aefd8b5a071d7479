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

#include "orbitgeom/bipartite.hpp"

#include <algorithm>
#include <cmath>

#include "orbitgeom/spectral.hpp"

namespace orbitgeom {

namespace {

// psi as the d1 x d2 coefficient matrix; rectangular, so kept as raw rows.
struct CoefficientMatrix {
    int d1, d2;
    ComplexVector data; // row-major d1 x d2

    Complex at(int i, int k) const { return data[static_cast<size_t>(i) * d2 + k]; }
};

// Gram matrix M^dag M (d2 x d2).
ComplexMatrix gram_right(const CoefficientMatrix &m) {
    ComplexMatrix g(m.d2);
    for (int k = 0; k < m.d2; ++k)
        for (int l = 0; l < m.d2; ++l) {
            Complex acc = 0.0;
            for (int i = 0; i < m.d1; ++i)
                acc += std::conj(m.at(i, k)) * m.at(i, l);
            g(k, l) = acc;
        }
    return g;
}

// Gram matrix M M^dag (d1 x d1).
ComplexMatrix gram_left(const CoefficientMatrix &m) {
    ComplexMatrix g(m.d1);
    for (int i = 0; i < m.d1; ++i)
        for (int j = 0; j < m.d1; ++j) {
            Complex acc = 0.0;
            for (int k = 0; k < m.d2; ++k)
                acc += m.at(i, k) * std::conj(m.at(j, k));
            g(i, j) = acc;
        }
    return g;
}

ComplexVector apply_m(const CoefficientMatrix &m, const ComplexVector &w) {
    ComplexVector out(static_cast<size_t>(m.d1), Complex(0.0));
    for (int i = 0; i < m.d1; ++i) {
        Complex acc = 0.0;
        for (int k = 0; k < m.d2; ++k)
            acc += m.at(i, k) * w[static_cast<size_t>(k)];
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

ComplexVector apply_m_adjoint(const CoefficientMatrix &m, const ComplexVector &u) {
    ComplexVector out(static_cast<size_t>(m.d2), Complex(0.0));
    for (int k = 0; k < m.d2; ++k) {
        Complex acc = 0.0;
        for (int i = 0; i < m.d1; ++i)
            acc += std::conj(m.at(i, k)) * u[static_cast<size_t>(i)];
        out[static_cast<size_t>(k)] = acc;
    }
    return out;
}

ComplexVector conjugated(ComplexVector v) {
    for (auto &e : v)
        e = std::conj(e);
    return v;
}

void scale_vector(ComplexVector &v, double s) {
    for (auto &e : v)
        e *= s;
}

} // namespace

ComplexVector SchmidtDecomposition::reconstruct(const BipartiteDims &dims) const {
    ComplexVector psi(static_cast<size_t>(dims.total()), Complex(0.0));
    for (int j = 0; j < rank; ++j) {
        const double c = coefficients[static_cast<size_t>(j)];
        for (int i = 0; i < dims.d1; ++i)
            for (int k = 0; k < dims.d2; ++k)
                psi[static_cast<size_t>(i) * dims.d2 + k] +=
                    c * left_vectors[static_cast<size_t>(j)][static_cast<size_t>(i)] *
                    right_vectors[static_cast<size_t>(j)][static_cast<size_t>(k)];
    }
    return psi;
}

SchmidtDecomposition schmidt_decompose(const ComplexVector &psi, const BipartiteDims &dims,
                                       double tol) {
    if (static_cast<int>(psi.size()) != dims.total())
        throw DimensionError("schmidt_decompose: vector length " + std::to_string(psi.size()) +
                             " vs d1*d2 = " + std::to_string(dims.total()));
    const double psi_norm = vector_norm(psi);
    if (!(psi_norm > 0.0))
        throw DegenerateInputError("schmidt_decompose: zero vector");

    const CoefficientMatrix m{dims.d1, dims.d2, psi};
    const bool right_side = dims.d2 <= dims.d1;

    const SpectralDecomposition gram = eigh_matrix(right_side ? gram_right(m) : gram_left(m));

    SchmidtDecomposition out;
    const double sigma_max = std::sqrt(std::max(0.0, gram.eigenvalues.front()));
    const int small_dim = right_side ? dims.d2 : dims.d1;

    for (int j = 0; j < small_dim; ++j) {
        ComplexVector w = gram.eigenvector(j);
        // Back-substitute through M; re-measuring the norm resolves exact
        // rank deficiency that the squared spectrum blurs.
        ComplexVector image = right_side ? apply_m(m, w) : apply_m_adjoint(m, w);
        const double sigma = vector_norm(image);
        if (sigma <= tol * sigma_max)
            continue;
        scale_vector(image, 1.0 / sigma);
        out.coefficients.push_back(sigma);
        if (right_side) {
            out.left_vectors.push_back(std::move(image));
            out.right_vectors.push_back(conjugated(w));
        } else {
            out.left_vectors.push_back(std::move(w));
            out.right_vectors.push_back(conjugated(image));
        }
    }
    out.rank = static_cast<int>(out.coefficients.size());
    return out;
}

MaxEntanglementVerdict is_maximally_entangled(const DensityState &rho, const BipartiteDims &dims,
                                              double tol) {
    detail::check_bipartite_dims(rho.dim(), dims.d1, dims.d2, "is_maximally_entangled");
    if (dims.d2 == 1)
        throw DegenerateInputError("is_maximally_entangled: d2 must exceed 1");
    const SpectralDecomposition spec = eigh(rho.op());
    if (spec.eigenvalues.front() < 1.0 - 1e-8)
        throw NotPureError("is_maximally_entangled: largest eigenvalue " +
                           std::to_string(spec.eigenvalues.front()) + " < 1 - 1e-8");
    const HermitianOperator reduced = partial_trace(rho.op(), dims.d1, dims.d2, TraceSide::First);
    const HermitianOperator delta = reduced - HermitianOperator::normalized_identity(dims.d2);
    MaxEntanglementVerdict v;
    v.residual = delta.norm();
    v.maximally_entangled = v.residual <= tol;
    return v;
}

HermitianOperator BlockComponents::embedded_block10() const {
    ComplexMatrix id1 = ComplexMatrix::identity(dims.d1);
    id1 *= Complex(1.0 / dims.d1);
    return HermitianOperator(tensor_product(id1, p10.matrix()), 1e-9);
}

HermitianOperator BlockComponents::embedded_block01() const {
    ComplexMatrix id2 = ComplexMatrix::identity(dims.d2);
    id2 *= Complex(1.0 / dims.d2);
    return HermitianOperator(tensor_product(p01.matrix(), id2), 1e-9);
}

HermitianOperator BlockComponents::reconstruct() const {
    HermitianOperator out = HermitianOperator::normalized_identity(dims.total());
    out *= c_id;
    out += embedded_block10();
    out += embedded_block01();
    out += p00;
    return out;
}

BlockComponents block_decompose(const HermitianOperator &x, const BipartiteDims &dims) {
    detail::check_bipartite_dims(x.dim(), dims.d1, dims.d2, "block_decompose");

    const double c_id = x.trace();

    HermitianOperator p10 = partial_trace(x, dims.d1, dims.d2, TraceSide::First);
    p10 -= c_id * HermitianOperator::normalized_identity(dims.d2);

    HermitianOperator p01 = partial_trace(x, dims.d1, dims.d2, TraceSide::Second);
    p01 -= c_id * HermitianOperator::normalized_identity(dims.d1);

    BlockComponents out{dims, c_id, std::move(p10), std::move(p01), HermitianOperator::zero(x.dim())};

    HermitianOperator remainder = x;
    remainder -= c_id * HermitianOperator::normalized_identity(dims.total());
    remainder -= out.embedded_block10();
    remainder -= out.embedded_block01();
    out.p00 = std::move(remainder);

    out.norm_id = std::abs(c_id) / std::sqrt(static_cast<double>(dims.total()));
    out.norm10 = out.p10.norm() / std::sqrt(static_cast<double>(dims.d1));
    out.norm01 = out.p01.norm() / std::sqrt(static_cast<double>(dims.d2));
    out.norm00 = out.p00.norm();
    return out;
}

BlockComponents decompose_projection(const ComplexVector &psi, const BipartiteDims &dims) {
    const DensityState p = projector(psi);
    HermitianOperator shifted = p.op();
    shifted -= HermitianOperator::normalized_identity(dims.total());
    return block_decompose(shifted, dims);
}

} // namespace orbitgeom
