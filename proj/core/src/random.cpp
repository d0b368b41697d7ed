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

#include "ctxflow/random.h"

#include <cmath>
#include <numbers>

namespace ctxflow {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t CounterRng::bits_at(uint64_t index) const {
    // Key the stream by a mixed seed so nearby seeds do not share draws.
    return splitmix64(splitmix64(seed_) ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
}

double CounterRng::uniform_at(uint64_t index) const {
    return static_cast<double>(bits_at(index) >> 11) * 0x1.0p-53;
}

double CounterRng::next_gaussian() {
    // Box-Muller; 1 - u keeps the logarithm finite.
    double u1 = 1.0 - next_uniform();
    double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

CounterRng CounterRng::split(uint64_t stream) const {
    return CounterRng(splitmix64(seed_ + 0x632be59bd9b4e019ULL * (stream + 1)));
}

StateVector random_state(CounterRng &rng) {
    while (true) {
        std::array<Complex, 3> a{};
        for (auto &c : a) {
            double re = rng.next_gaussian();
            double im = rng.next_gaussian();
            c = Complex(re, im);
        }
        StateVector v(a);
        if (norm_squared(v) > 1e-6) {
            return normalize(v);
        }
    }
}

StateVector random_real_state(CounterRng &rng) {
    while (true) {
        std::array<Complex, 3> a{};
        for (auto &c : a) {
            c = rng.next_gaussian();
        }
        StateVector v(a);
        if (norm_squared(v) > 1e-6) {
            return normalize(v);
        }
    }
}

}  // namespace ctxflow
