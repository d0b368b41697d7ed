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

#include "cli/format.h"

#include <gtest/gtest.h>

#include <cmath>

using namespace ctxflow;
using namespace ctxflow::cli;

TEST(Format, FractionsUpToDenominator36) {
    EXPECT_EQ(format_fraction(1.0 / 3), "1/3");
    EXPECT_EQ(format_fraction(1.0 / 18), "1/18");
    EXPECT_EQ(format_fraction(2.0 / 9), "2/9");
    EXPECT_EQ(format_fraction(-0.25), "-1/4");
    EXPECT_EQ(format_fraction(1.0), "1");
    EXPECT_EQ(format_fraction(-1.0), "-1");
    EXPECT_EQ(format_fraction(0.0), "0");
    EXPECT_EQ(format_fraction(-1e-17), "0");
    EXPECT_EQ(format_fraction(5.0 / 36), "5/36");
    EXPECT_EQ(format_fraction(1.0 / 3 + 5e-10), "1/3");
}

TEST(Format, DecimalsOtherwise) {
    EXPECT_EQ(format_fraction(1 / std::sqrt(3.0)), "0.57735026919");
    EXPECT_EQ(format_fraction(1.0 / 37), "0.027027027027");
    EXPECT_EQ(format_fraction(1.0 / 3 + 1e-8), "0.333333343333");
}

TEST(Format, Round12) {
    EXPECT_EQ(round12(2.0 / 9), 0.222222222222);
    EXPECT_FALSE(std::signbit(round12(-0.0)));
    EXPECT_FALSE(std::signbit(round12(-1e-300 * 1e-300)));
    EXPECT_EQ(format_decimal(1.0 / 18), "0.0555555555556");
}

TEST(Format, Complex) {
    EXPECT_EQ(format_complex({0.5, 1e-12}), "1/2");
    EXPECT_EQ(format_complex({0.5, -0.25}), "1/2-1/4i");
    EXPECT_EQ(format_complex({0, 1.0 / 3}), "1/3i");
    EXPECT_EQ(format_complex({0, -1}), "-1i");
    EXPECT_EQ(format_complex_cell({0.5, -1.0 / 3}), "0.5:-0.333333333333");
}
