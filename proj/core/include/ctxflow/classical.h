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

#ifndef CTXFLOW_CLASSICAL_H
#define CTXFLOW_CLASSICAL_H

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ctxflow/network.h"

namespace ctxflow {

/// A definite route of a classical particle: one arm per slice.
struct Trajectory {
    PathLabel input;
    std::vector<PathLabel> arms;
    PathLabel output;
    int branchings = 0;  // beam splitters at which a choice was made

    bool visits(PathLabel label) const;
    bool same_port() const;

    /// Hyphenated route with repeated arms collapsed, e.g. "1-f-D2-1".
    std::string route() const;

    bool operator==(const Trajectory &) const = default;
};

/// Every route through the arm DAG. A particle in a stage's parallel arm
/// passes it; a particle in one of its in arms leaves by either out arm.
std::vector<Trajectory> enumerate_trajectories(const Network &net);

/// True when consecutive arms are equal (parallel pass) or joined by a stage.
bool is_connected(const Trajectory &t, const Network &net);

/// Number of routes from each input, counted by dynamic programming over slices.
std::map<PathLabel, uint64_t> count_routes(const Network &net);

struct TrajectoryReport {
    std::vector<Trajectory> all_trajectories;
    std::vector<Trajectory> via_f_same_port;  // IN_k -> OUT_k routes through F
    bool claim_holds;                         // each via-F route visits D1 or D2
};

/// Checks the route-counting premise behind P(f) <= P(D1) + P(D2): every
/// same-port route through F also visits D1 or D2. Assumes hidden-variable
/// particles always exit from the port matching their input.
TrajectoryReport verify_classical_claim(const Network &net);

/// Arm occupation probabilities of a weighted mixture of trajectories.
std::map<PathLabel, double> arm_marginals(std::span<const Trajectory> trajectories,
                                          std::span<const double> weights);

}  // namespace ctxflow

#endif
