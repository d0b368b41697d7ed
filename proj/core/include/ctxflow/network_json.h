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

#ifndef CTXFLOW_NETWORK_JSON_H
#define CTXFLOW_NETWORK_JSON_H

#include <cstdint>
#include <string>
#include <string_view>

#include "ctxflow/network.h"

namespace ctxflow {

/// Parses {"stages":[{"in":["IN2","IN3"],"out":["S1","D1"],"R":0.5},...],"phases":{"F":0.0}}.
/// "R" may be a number or a fraction string such as "1/3". Throws ParseError or
/// InvalidNetworkError.
Network network_from_json(std::string_view text);

Network load_network_file(const std::string &path);

/// Compact canonical document (sorted keys, nonzero phases only).
std::string network_to_json(const Network &net, int indent = -1);

/// FNV-1a 64 of network_to_json(net), as 16 hex digits.
std::string network_hash(const Network &net);

}  // namespace ctxflow

#endif
