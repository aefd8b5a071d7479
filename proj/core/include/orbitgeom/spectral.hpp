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

#include <vector>

#include "orbitgeom/hermitian.hpp"

namespace orbitgeom {

/// Eigensystem of a Hermitian operator.  Eigenvalues are real and sorted
/// descending; column k of `eigenvectors` is the unit eigenvector paired with
/// eigenvalue k.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    ComplexVector eigenvector(int k) const {
        const int d = eigenvectors.dim();
        ComplexVector v(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i)
            v[static_cast<size_t>(i)] = eigenvectors(i, k);
        return v;
    }

    /// V diag(lambda) V^dag.
    ComplexMatrix reconstruct() const;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices.  Deterministic and
/// dependency-free; sized for the desk-scale dimensions (<= ~64) this library
/// targets.  Sweep cap 100, off-diagonal threshold 1e-12 * ||A||_F.
/// Throws NumericalError if the cap is exceeded.
SpectralDecomposition eigh(const HermitianOperator &a);

/// Same solver on a raw matrix known to be Hermitian (used internally where
/// wrapping would only re-validate).
SpectralDecomposition eigh_matrix(const ComplexMatrix &a);

} // namespace orbitgeom
