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

#ifndef CTXFLOW_RANDOM_H
#define CTXFLOW_RANDOM_H

#include <cstdint>

#include "ctxflow/hilbert.h"

namespace ctxflow {

/// Counter-based generator: draw n of stream `seed` is a pure function of
/// (seed, n), so any draw can be reproduced or computed out of order.
class CounterRng {
   public:
    explicit CounterRng(uint64_t seed, uint64_t counter = 0) : seed_(seed), counter_(counter) {
    }

    /// 64 random bits for draw `index` without advancing.
    uint64_t bits_at(uint64_t index) const;
    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform_at(uint64_t index) const;

    uint64_t next_bits() {
        return bits_at(counter_++);
    }
    double next_uniform() {
        return uniform_at(counter_++);
    }
    double next_gaussian();

    /// Independent stream derived from this one.
    CounterRng split(uint64_t stream) const;

    uint64_t seed() const {
        return seed_;
    }
    uint64_t counter() const {
        return counter_;
    }

   private:
    uint64_t seed_;
    uint64_t counter_;
};

uint64_t splitmix64(uint64_t x);

/// Haar-distributed unit vector (normalized complex Gaussian).
StateVector random_state(CounterRng &rng);

/// Unit vector with real Gaussian components.
StateVector random_real_state(CounterRng &rng);

}  // namespace ctxflow

#endif
