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

#include <complex>
#include <vector>

#include "orbitgeom/errors.hpp"

namespace orbitgeom {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense square complex matrix, row-major.  The universal carrier for
/// operators on H and on H1 (x) H2; dimensions stay at desk scale (<= ~64),
/// so everything is a plain contiguous buffer with O(d^3) kernels.
class ComplexMatrix {
  public:
    ComplexMatrix() : dim_(0) {}

    /// Zero matrix of size dim x dim.
    explicit ComplexMatrix(int dim) : dim_(dim), entries_(static_cast<size_t>(dim) * dim) {
        if (dim <= 0)
            throw DimensionError("ComplexMatrix: dim must be positive, got " + std::to_string(dim));
    }

    ComplexMatrix(int dim, ComplexVector entries) : dim_(dim), entries_(std::move(entries)) {
        if (dim <= 0)
            throw DimensionError("ComplexMatrix: dim must be positive, got " + std::to_string(dim));
        if (entries_.size() != static_cast<size_t>(dim) * dim)
            throw DimensionError("ComplexMatrix: entries length " + std::to_string(entries_.size()) +
                                 " does not equal dim^2 = " + std::to_string(dim * dim));
        validate_finite();
    }

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i)
            m(i, i) = 1.0;
        return m;
    }

    int dim() const { return dim_; }

    Complex &operator()(int i, int j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }
    const Complex &operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }

    const ComplexVector &entries() const { return entries_; }

    ComplexMatrix &operator+=(const ComplexMatrix &other) {
        check_same_dim(other, "operator+=");
        for (size_t k = 0; k < entries_.size(); ++k)
            entries_[k] += other.entries_[k];
        return *this;
    }

    ComplexMatrix &operator-=(const ComplexMatrix &other) {
        check_same_dim(other, "operator-=");
        for (size_t k = 0; k < entries_.size(); ++k)
            entries_[k] -= other.entries_[k];
        return *this;
    }

    ComplexMatrix &operator*=(Complex scale) {
        for (auto &e : entries_)
            e *= scale;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
        a.check_same_dim(b, "matrix product");
        const int d = a.dim_;
        ComplexMatrix c(d);
        for (int i = 0; i < d; ++i) {
            for (int k = 0; k < d; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex(0.0))
                    continue;
                for (int j = 0; j < d; ++j)
                    c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix c(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                c(j, i) = std::conj((*this)(i, j));
        return c;
    }

    ComplexMatrix transpose() const {
        ComplexMatrix c(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                c(j, i) = (*this)(i, j);
        return c;
    }

    ComplexMatrix conjugate() const {
        ComplexMatrix c(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                c(i, j) = std::conj((*this)(i, j));
        return c;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (int i = 0; i < dim_; ++i)
            t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto &e : entries_)
            s += std::norm(e);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto &e : entries_)
            m = std::max(m, std::abs(e));
        return m;
    }

    /// Largest |A[i][j] - conj(A[j][i])| over all entries.
    double hermiticity_defect() const {
        double m = 0.0;
        for (int i = 0; i < dim_; ++i)
            for (int j = i; j < dim_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

    /// Matrix-vector product.
    ComplexVector apply(const ComplexVector &v) const {
        if (static_cast<int>(v.size()) != dim_)
            throw DimensionError("ComplexMatrix::apply: vector length " + std::to_string(v.size()) +
                                 " vs dim " + std::to_string(dim_));
        ComplexVector out(dim_, Complex(0.0));
        for (int i = 0; i < dim_; ++i) {
            Complex acc = 0.0;
            for (int j = 0; j < dim_; ++j)
                acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    void check_same_dim(const ComplexMatrix &other, const char *what) const {
        if (dim_ != other.dim_)
            throw DimensionError(std::string(what) + ": dimension mismatch " + std::to_string(dim_) +
                                 " vs " + std::to_string(other.dim_));
    }

  private:
    void validate_finite() const {
        for (const auto &e : entries_)
            if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
                throw DomainError("ComplexMatrix: entries must be finite");
    }

    int dim_;
    ComplexVector entries_;
};

/// Kronecker product; (a (x) b)[(i*db+k),(j*db+l)] = a[i][j] * b[k][l].
inline ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    const int da = a.dim(), db = b.dim();
    ComplexMatrix c(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0))
                continue;
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l)
                    c(i * db + k, j * db + l) = aij * b(k, l);
        }
    return c;
}

/// Outer product |u><v|.
inline ComplexMatrix outer_product(const ComplexVector &u, const ComplexVector &v) {
    if (u.size() != v.size())
        throw DimensionError("outer_product: length mismatch");
    const int d = static_cast<int>(u.size());
    ComplexMatrix c(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            c(i, j) = u[i] * std::conj(v[j]);
    return c;
}

inline Complex inner_product(const ComplexVector &u, const ComplexVector &v) {
    if (u.size() != v.size())
        throw DimensionError("inner_product: length mismatch");
    Complex s = 0.0;
    for (size_t k = 0; k < u.size(); ++k)
        s += std::conj(u[k]) * v[k];
    return s;
}

inline double vector_norm(const ComplexVector &v) {
    double s = 0.0;
    for (const auto &e : v)
        s += std::norm(e);
    return std::sqrt(s);
}

} // namespace orbitgeom
