// Copyright 2026 The ctxflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXFLOW_HILBERT_H
#define CTXFLOW_HILBERT_H

#include <array>
#include <complex>
#include <cstddef>
#include <string>

namespace ctxflow {

using Complex = std::complex<double>;

inline constexpr double TOL_NORM = 1e-10;
inline constexpr double TOL_UNITARY = 1e-10;
inline constexpr double TOL_ZERO = 1e-12;

/// Three complex amplitudes over the computational path basis.
///
/// Internally indexed 0..2; path k of the user-facing basis {1,2,3} lives at
/// index k-1. Construction rejects non-finite amplitudes.
class StateVector {
   public:
    StateVector() = default;
    StateVector(Complex a1, Complex a2, Complex a3);
    explicit StateVector(const std::array<Complex, 3> &amplitudes);

    static StateVector basis(int path);  // path in 1..3

    const Complex &operator[](std::size_t k) const {
        return amplitudes_[k];
    }
    const std::array<Complex, 3> &amplitudes() const {
        return amplitudes_;
    }

    StateVector operator*(Complex scale) const;
    StateVector operator+(const StateVector &other) const;
    StateVector operator-(const StateVector &other) const;

    bool operator==(const StateVector &other) const = default;

    std::string str() const;

   private:
    std::array<Complex, 3> amplitudes_{};
};

/// 3x3 complex operator; entry(row, col) with row = output index, col = input index.
class Operator3 {
   public:
    using Rows = std::array<std::array<Complex, 3>, 3>;

    Operator3() = default;
    explicit Operator3(const Rows &entries) : entries_(entries) {
    }

    static Operator3 identity();
    static Operator3 zero() {
        return Operator3();
    }

    Complex &operator()(std::size_t row, std::size_t col) {
        return entries_[row][col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row][col];
    }

    const Rows &entries() const {
        return entries_;
    }

   private:
    Rows entries_{};
};

/// Returns sum_k conj(bra_k) * ket_k.
Complex inner_product(const StateVector &bra, const StateVector &ket);

double norm_squared(const StateVector &v);
double norm(const StateVector &v);

/// Throws ZeroVectorError when the squared norm is <= TOL_ZERO.
StateVector normalize(const StateVector &v);

/// True when |norm_squared(v) - 1| <= tol.
bool is_normalized(const StateVector &v, double tol = TOL_NORM);

/// Throws NotNormalizedError unless is_normalized(v).
void require_normalized(const StateVector &v);

/// Projector |v><v|.
Operator3 outer_product(const StateVector &ket, const StateVector &bra);

StateVector apply(const Operator3 &op, const StateVector &v);

/// Returns a * b, i.e. b is applied first.
Operator3 compose(const Operator3 &a, const Operator3 &b);

Operator3 adjoint(const Operator3 &op);

/// max_{r,c} |a(r,c) - b(r,c)|
double max_entry_deviation(const Operator3 &a, const Operator3 &b);

/// max_{k} |a_k - b_k|
double max_component_deviation(const StateVector &a, const StateVector &b);

bool is_unitary(const Operator3 &op, double tol = TOL_UNITARY);

}  // namespace ctxflow

#endif
