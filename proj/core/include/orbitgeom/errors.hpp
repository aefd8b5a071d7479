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

#include <stdexcept>
#include <string>

namespace orbitgeom {

/// Base class of every validation failure raised by the library.  All
/// constructors validate their invariants and throw instead of clamping, so
/// that emitted certificates stay auditable.
struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Incompatible matrix/vector dimensions, or dims that do not factor.
struct DimensionError : Error {
    using Error::Error;
};

/// Iterative scheme exceeded its cap without meeting its tolerance.
struct NumericalError : Error {
    using Error::Error;
};

/// Zero vector, scalar spectrum, d2 = 1, and similar degenerate inputs.
struct DegenerateInputError : Error {
    using Error::Error;
};

/// A density state required to be pure is mixed.
struct NotPureError : Error {
    using Error::Error;
};

/// Scalar argument outside its documented domain.
struct DomainError : Error {
    using Error::Error;
};

/// Ball estimation requested around a center that is not inside the hull.
struct InvalidCenterError : Error {
    using Error::Error;
};

/// Choi matrix fails the doubly stochastic preconditions.
struct NotDoublyStochasticError : Error {
    using Error::Error;
};

/// Malformed or inconsistent JSON input; message names the offending field.
struct IoError : Error {
    using Error::Error;
};

} // namespace orbitgeom
