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

#ifndef CTXFLOW_CLI_FORMAT_H
#define CTXFLOW_CLI_FORMAT_H

#include <string>

#include "ctxflow/hilbert.h"

namespace ctxflow::cli {

/// Rounds to 12 significant digits; negative zero becomes zero.
double round12(double x);

/// "%.12g" of round12(x).
std::string format_decimal(double x);

/// "p/q" when x is within 1e-9 of a rational with denominator <= 36,
/// otherwise format_decimal(x).
std::string format_fraction(double x);

/// Real part only when the imaginary part is below 1e-9, else "a+bi".
std::string format_complex(Complex z);

/// CSV cell "re:im".
std::string format_complex_cell(Complex z);

}  // namespace ctxflow::cli

#endif
