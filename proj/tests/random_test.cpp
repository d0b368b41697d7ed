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

#include <gtest/gtest.h>

#include <set>

using namespace ctxflow;

TEST(CounterRng, DrawsArePureFunctionsOfSeedAndIndex) {
    CounterRng a(42);
    CounterRng b(42);
    for (int k = 0; k < 100; ++k) {
        EXPECT_EQ(a.next_bits(), b.bits_at(static_cast<uint64_t>(k)));
    }
    EXPECT_EQ(a.counter(), 100u);
    EXPECT_NE(CounterRng(42).bits_at(0), CounterRng(43).bits_at(0));
}

TEST(CounterRng, UniformRangeAndMean) {
    CounterRng rng(1);
    double sum = 0;
    const int n = 200000;
    for (int k = 0; k < n; ++k) {
        double u = rng.next_uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    // standard error of the mean is sqrt(1/12/n) ~ 6.5e-4
    EXPECT_NEAR(sum / n, 0.5, 5 * std::sqrt(1.0 / 12 / n));
}

TEST(CounterRng, GaussianMoments) {
    CounterRng rng(2);
    double s1 = 0;
    double s2 = 0;
    const int n = 200000;
    for (int k = 0; k < n; ++k) {
        double g = rng.next_gaussian();
        s1 += g;
        s2 += g * g;
    }
    EXPECT_NEAR(s1 / n, 0, 5 / std::sqrt(n));
    EXPECT_NEAR(s2 / n, 1, 5 * std::sqrt(2.0 / n));
}

TEST(CounterRng, SplitStreamsDiffer) {
    CounterRng base(7);
    std::set<uint64_t> firsts;
    for (uint64_t s = 0; s < 100; ++s) {
        firsts.insert(base.split(s).bits_at(0));
    }
    EXPECT_EQ(firsts.size(), 100u);
}

TEST(RandomState, Normalized) {
    CounterRng rng(3);
    for (int k = 0; k < 1000; ++k) {
        EXPECT_TRUE(is_normalized(random_state(rng)));
        auto r = random_real_state(rng);
        EXPECT_TRUE(is_normalized(r));
        EXPECT_EQ(r[0].imag(), 0);
    }
}
