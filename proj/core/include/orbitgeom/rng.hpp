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

#include <cmath>
#include <cstdint>
#include <random>

#include "orbitgeom/complex_matrix.hpp"

namespace orbitgeom {

/// Seeded random stream.  The gaussian is generated by the polar method on
/// top of mt19937_64 rather than std::normal_distribution, so sequences are
/// identical across standard library implementations.  Derived streams
/// (seed, task index) keep randomized subtasks independent of scheduling.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Stream for subtask `index`, independent of this stream's position.
    static Rng derived(std::uint64_t seed, std::uint64_t index) {
        // splitmix64 of the pair; avoids correlated mt19937 seedings.
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    double uniform() { return std::generate_canonical<double, 53>(engine_); }

    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    Complex complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return Complex(re, im);
    }

    ComplexVector random_vector(int dim) {
        ComplexVector v(static_cast<size_t>(dim));
        for (auto &e : v)
            e = complex_gaussian();
        return v;
    }

    /// Ginibre matrix: i.i.d. standard complex gaussian entries.
    ComplexMatrix ginibre(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                m(i, j) = complex_gaussian();
        return m;
    }

    /// GUE-style random Hermitian matrix.
    ComplexMatrix random_hermitian(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) {
            m(i, i) = gaussian();
            for (int j = i + 1; j < dim; ++j) {
                const Complex z = 0.5 * complex_gaussian();
                m(i, j) = z;
                m(j, i) = std::conj(z);
            }
        }
        return m;
    }

    std::uint64_t integer() { return engine_(); }

    std::mt19937_64 &engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace orbitgeom
