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

#include "orbitgeom/hermitian.hpp"

#include <cmath>

#include "orbitgeom/spectral.hpp"

namespace orbitgeom {

double frobenius_inner(const HermitianOperator &a, const HermitianOperator &b) {
    a.matrix().check_same_dim(b.matrix(), "frobenius_inner");
    const int d = a.dim();
    Complex t = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            t += a(i, j) * b(j, i);
    if (std::abs(t.imag()) > 1e-10)
        throw NumericalError("frobenius_inner: imaginary part " + std::to_string(t.imag()) +
                             " exceeds 1e-10");
    return t.real();
}

HermitianOperator traceless_part(const HermitianOperator &x) {
    const int d = x.dim();
    ComplexMatrix m = x.matrix();
    const double shift = x.trace() / d;
    for (int i = 0; i < d; ++i)
        m(i, i) -= shift;
    return HermitianOperator(std::move(m), x.hermiticity_tol());
}

DensityState::DensityState(HermitianOperator op, double trace_tol, double psd_tol)
    : op_(std::move(op)), min_eigenvalue_(0.0) {
    const double tr = op_.trace();
    if (std::abs(tr - 1.0) > trace_tol)
        throw DomainError("DensityState: trace " + std::to_string(tr) + " deviates from 1 beyond " +
                          std::to_string(trace_tol));
    const SpectralDecomposition spec = eigh(op_);
    min_eigenvalue_ = spec.eigenvalues.back();
    if (min_eigenvalue_ < -psd_tol)
        throw DomainError("DensityState: smallest eigenvalue " + std::to_string(min_eigenvalue_) +
                          " below -" + std::to_string(psd_tol));
}

DensityState projector(const ComplexVector &v) {
    const double n2 = vector_norm(v);
    if (!(n2 > 0.0) || !std::isfinite(n2))
        throw DegenerateInputError("projector: zero (or non-finite) vector");
    ComplexMatrix m = outer_product(v, v);
    m *= Complex(1.0 / (n2 * n2));
    return DensityState(HermitianOperator(std::move(m)));
}

HermitianOperator partial_trace(const HermitianOperator &x, int d1, int d2, TraceSide side) {
    detail::check_bipartite_dims(x.dim(), d1, d2, "partial_trace");
    if (side == TraceSide::First) {
        ComplexMatrix out(d2);
        for (int k = 0; k < d2; ++k)
            for (int l = 0; l < d2; ++l) {
                Complex acc = 0.0;
                for (int i = 0; i < d1; ++i)
                    acc += x(i * d2 + k, i * d2 + l);
                out(k, l) = acc;
            }
        return HermitianOperator(std::move(out), std::max(x.hermiticity_tol(), 1e-9));
    }
    ComplexMatrix out(d1);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j) {
            Complex acc = 0.0;
            for (int k = 0; k < d2; ++k)
                acc += x(i * d2 + k, j * d2 + k);
            out(i, j) = acc;
        }
    return HermitianOperator(std::move(out), std::max(x.hermiticity_tol(), 1e-9));
}

HermitianOperator partial_transpose(const HermitianOperator &x, int d1, int d2) {
    detail::check_bipartite_dims(x.dim(), d1, d2, "partial_transpose");
    ComplexMatrix out(x.dim());
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j)
            for (int k = 0; k < d2; ++k)
                for (int l = 0; l < d2; ++l)
                    out(i * d2 + k, j * d2 + l) = x(i * d2 + l, j * d2 + k);
    return HermitianOperator(std::move(out), std::max(x.hermiticity_tol(), 1e-9));
}

} // namespace orbitgeom
