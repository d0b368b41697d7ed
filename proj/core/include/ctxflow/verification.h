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

#ifndef CTXFLOW_VERIFICATION_H
#define CTXFLOW_VERIFICATION_H

#include <cstdint>
#include <string>
#include <vector>

#include "ctxflow/network.h"

namespace ctxflow {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct VerifyOptions {
    int random_states = 1000;
    uint64_t seed = 42;
};

/// Runs every structural and statistical invariant of the network against the
/// preset states and `random_states` random ones.
std::vector<CheckResult> run_invariant_suite(const Network &net, const VerifyOptions &options = {});

bool all_passed(const std::vector<CheckResult> &results);

std::string_view to_string(CheckStatus status);

}  // namespace ctxflow

#endif
