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

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace ctxflow::cli {

namespace {

constexpr int MAX_DENOMINATOR = 36;
constexpr double FRACTION_TOLERANCE = 1e-9;

}  // namespace

double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    double r = std::strtod(buf, nullptr);
    return r == 0 ? 0.0 : r;
}

std::string format_decimal(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", round12(x));
    return buf;
}

std::string format_fraction(double x) {
    for (int q = 1; q <= MAX_DENOMINATOR; ++q) {
        double p = std::round(x * q);
        if (std::abs(x - p / q) <= FRACTION_TOLERANCE) {
            long long num = static_cast<long long>(p);
            if (q == 1) {
                return std::to_string(num);
            }
            return std::to_string(num) + "/" + std::to_string(q);
        }
    }
    return format_decimal(x);
}

std::string format_complex(Complex z) {
    if (std::abs(z.imag()) < FRACTION_TOLERANCE) {
        return format_fraction(z.real());
    }
    std::string im = format_fraction(std::abs(z.imag()));
    std::string sign = z.imag() < 0 ? "-" : "+";
    if (std::abs(z.real()) < FRACTION_TOLERANCE) {
        return (z.imag() < 0 ? "-" : "") + im + "i";
    }
    return format_fraction(z.real()) + sign + im + "i";
}

std::string format_complex_cell(Complex z) {
    return format_decimal(z.real()) + ":" + format_decimal(z.imag());
}

}  // namespace ctxflow::cli
