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

#ifndef CTXFLOW_CLI_STATE_PARSER_H
#define CTXFLOW_CLI_STATE_PARSER_H

#include <string_view>

#include "ctxflow/hilbert.h"

namespace ctxflow::cli {

/// Largest accepted deviation of ||v|| from 1 without --normalize.
inline constexpr double INPUT_NORM_TOLERANCE = 1e-6;

/// Parses "a+bi" style literals; components may be decimals or fractions
/// ("2/3", "-1/3i", "0.5+0.5i", "i", "1e-3-2/7i").
Complex parse_complex(std::string_view text);

/// Resolves a state source: a preset ("nx", "symmetric"), an inline list of
/// three complex literals, or a path to a JSON file holding three amplitudes.
///
/// The result is normalized. Without `normalize`, inputs whose norm is off by
/// more than INPUT_NORM_TOLERANCE raise NotNormalizedError.
StateVector parse_state(std::string_view spec, bool normalize = false);

}  // namespace ctxflow::cli

#endif
