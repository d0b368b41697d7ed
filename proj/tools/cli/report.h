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

#ifndef CTXFLOW_CLI_REPORT_H
#define CTXFLOW_CLI_REPORT_H

#include <optional>
#include <string>
#include <vector>

#include "ctxflow/analysis.h"
#include "ctxflow/classical.h"
#include "ctxflow/network.h"
#include "ctxflow/verification.h"
#include "json.hpp"

namespace ctxflow::cli {

using nlohmann::json;

/// Number rounded to 12 significant digits so that dump/parse/dump is stable.
json number(double x);
/// [re, im]
json complex_pair(Complex z);
json state_json(const StateVector &v);

json paths_json(const Network &net);
json probabilities_json(const StateVector &state, const Network &net, const std::vector<Context> &ctxs);
json weak_values_json(const StateVector &state, const Network &net);
json inequality_json(const InequalityReport &report);
json continuity_json(const ContinuityReport &report);
json trajectories_json(const TrajectoryReport &report);
json sample_json(const DetectionSample &sample, const StateVector &state, const Network &net);
json verify_json(const std::vector<CheckResult> &results);

/// {"command", "state", "network_hash", "result"}
json envelope(const std::string &command, const std::optional<StateVector> &state, const Network &net,
              json result);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump_report(const json &report);

}  // namespace ctxflow::cli

#endif
