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

#ifndef CTXFLOW_TESTS_TEST_UTIL_H
#define CTXFLOW_TESTS_TEST_UTIL_H

#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <string>

#include "ctxflow/hilbert.h"
#include "ctxflow/network.h"

namespace ctxflow::test {

inline std::string data_path(const std::string &name) {
    return std::string(CTXFLOW_TEST_DATA_DIR) + "/" + name;
}

/// Arm kets of the canonical interferometer written out by hand, independent
/// of the beam-splitter recursion in the library.
inline std::map<PathLabel, StateVector> literal_kets() {
    const double r2 = std::sqrt(2.0);
    const double r3 = std::sqrt(3.0);
    const double r6 = std::sqrt(6.0);
    using enum PathLabel;
    return {
        {IN1, StateVector(1, 0, 0)},
        {IN2, StateVector(0, 1, 0)},
        {IN3, StateVector(0, 0, 1)},
        {S1, StateVector(0, 1 / r2, 1 / r2)},
        {D1, StateVector(0, 1 / r2, -1 / r2)},
        {F, StateVector(1 / r3, 1 / r3, -1 / r3)},
        {P1, StateVector(2 / r6, -1 / r6, 1 / r6)},
        {S2, StateVector(1 / r2, 0, 1 / r2)},
        {P2, StateVector(-1 / r6, 2 / r6, 1 / r6)},
        {D2, StateVector(1 / r2, 0, -1 / r2)},
        {OUT1, StateVector(1, 0, 0)},
        {OUT2, StateVector(0, 1, 0)},
        {OUT3, StateVector(0, 0, 1)},
    };
}

/// Weak value evaluated directly from literal kets.
inline Complex literal_weak_value(const StateVector &psi, PathLabel i, PathLabel o) {
    auto kets = literal_kets();
    auto dot = [](const StateVector &a, const StateVector &b) {
        Complex s = 0;
        for (size_t k = 0; k < 3; ++k) {
            s += std::conj(a[k]) * b[k];
        }
        return s;
    };
    return dot(kets.at(o), kets.at(i)) * dot(kets.at(i), psi) / dot(kets.at(o), psi);
}

/// Random unit vector from a std::mt19937_64 stream (separate from the
/// library's own generator).
inline StateVector gaussian_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    while (true) {
        StateVector v({g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)});
        double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
        if (n > 1e-3) {
            return v * (1 / n);
        }
    }
}

/// Random unitary by Gram-Schmidt on the columns of a Gaussian matrix.
inline Operator3 random_unitary(std::mt19937_64 &rng) {
    std::array<StateVector, 3> cols{gaussian_state(rng), gaussian_state(rng), gaussian_state(rng)};
    for (size_t c = 0; c < 3; ++c) {
        for (size_t p = 0; p < c; ++p) {
            Complex proj = 0;
            for (size_t k = 0; k < 3; ++k) {
                proj += std::conj(cols[p][k]) * cols[c][k];
            }
            cols[c] = cols[c] - cols[p] * proj;
        }
        double n = std::sqrt(std::norm(cols[c][0]) + std::norm(cols[c][1]) + std::norm(cols[c][2]));
        cols[c] = cols[c] * (1 / n);
    }
    Operator3 u;
    for (size_t r = 0; r < 3; ++r) {
        for (size_t c = 0; c < 3; ++c) {
            u(r, c) = cols[c][r];
        }
    }
    return u;
}

}  // namespace ctxflow::test

#endif
