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

#include "ctxflow/classical.h"

#include <algorithm>

#include "ctxflow/errors.h"

namespace ctxflow {

namespace {

void extend(const Network &net, Trajectory &current, std::vector<Trajectory> &out) {
    size_t t = current.arms.size() - 1;
    if (t == static_cast<size_t>(net.stage_count())) {
        current.output = current.arms.back();
        out.push_back(current);
        return;
    }
    const auto &s = net.stages()[t];
    PathLabel here = current.arms.back();
    if (here == s.in_a || here == s.in_b) {
        ++current.branchings;
        for (PathLabel next : {s.out_a, s.out_b}) {
            current.arms.push_back(next);
            extend(net, current, out);
            current.arms.pop_back();
        }
        --current.branchings;
    } else {
        current.arms.push_back(here);
        extend(net, current, out);
        current.arms.pop_back();
    }
}

}  // namespace

bool Trajectory::visits(PathLabel label) const {
    return std::find(arms.begin(), arms.end(), label) != arms.end();
}

bool Trajectory::same_port() const {
    auto a = port_index(input);
    auto b = port_index(output);
    return a && b && *a == *b;
}

std::string Trajectory::route() const {
    std::string out;
    for (size_t t = 0; t < arms.size(); ++t) {
        if (t > 0 && arms[t] == arms[t - 1]) {
            continue;
        }
        if (!out.empty()) {
            out += '-';
        }
        if (auto port = port_index(arms[t])) {
            out += std::to_string(*port);
        } else {
            out += display_name(arms[t]);
        }
    }
    return out;
}

std::vector<Trajectory> enumerate_trajectories(const Network &net) {
    std::vector<Trajectory> out;
    for (int k = 1; k <= 3; ++k) {
        Trajectory t{input_port(k), {input_port(k)}, input_port(k), 0};
        extend(net, t, out);
    }
    return out;
}

bool is_connected(const Trajectory &t, const Network &net) {
    const auto &slices = net.slices();
    if (t.arms.size() != slices.size() || t.arms.front() != t.input || t.arms.back() != t.output) {
        return false;
    }
    for (size_t k = 0; k < t.arms.size(); ++k) {
        const auto &live = slices[k];
        if (std::find(live.begin(), live.end(), t.arms[k]) == live.end()) {
            return false;
        }
    }
    for (size_t k = 0; k + 1 < t.arms.size(); ++k) {
        const auto &s = net.stages()[k];
        PathLabel a = t.arms[k];
        PathLabel b = t.arms[k + 1];
        bool mixes = a == s.in_a || a == s.in_b;
        if (mixes ? (b != s.out_a && b != s.out_b) : (a != b)) {
            return false;
        }
    }
    return true;
}

std::map<PathLabel, uint64_t> count_routes(const Network &net) {
    std::map<PathLabel, uint64_t> out;
    for (int k = 1; k <= 3; ++k) {
        std::map<PathLabel, uint64_t> ways{{input_port(k), 1}};
        for (const auto &s : net.stages()) {
            std::map<PathLabel, uint64_t> next;
            for (const auto &[arm, n] : ways) {
                if (arm == s.in_a || arm == s.in_b) {
                    next[s.out_a] += n;
                    next[s.out_b] += n;
                } else {
                    next[arm] += n;
                }
            }
            ways = std::move(next);
        }
        uint64_t total = 0;
        for (const auto &[arm, n] : ways) {
            total += n;
        }
        out[input_port(k)] = total;
    }
    return out;
}

TrajectoryReport verify_classical_claim(const Network &net) {
    TrajectoryReport report{enumerate_trajectories(net), {}, true};
    for (const auto &t : report.all_trajectories) {
        if (t.same_port() && t.visits(PathLabel::F)) {
            report.via_f_same_port.push_back(t);
            if (!t.visits(PathLabel::D1) && !t.visits(PathLabel::D2)) {
                report.claim_holds = false;
            }
        }
    }
    return report;
}

std::map<PathLabel, double> arm_marginals(std::span<const Trajectory> trajectories,
                                          std::span<const double> weights) {
    if (trajectories.size() != weights.size()) {
        throw Error("one weight per trajectory is required");
    }
    double total = 0;
    for (double w : weights) {
        if (w < 0) {
            throw Error("trajectory weights must be nonnegative");
        }
        total += w;
    }
    if (!(total > 0)) {
        throw Error("trajectory weights sum to zero");
    }
    std::map<PathLabel, double> out;
    for (size_t k = 0; k < trajectories.size(); ++k) {
        auto arms = trajectories[k].arms;
        std::sort(arms.begin(), arms.end());
        arms.erase(std::unique(arms.begin(), arms.end()), arms.end());
        for (PathLabel a : arms) {
            out[a] += weights[k] / total;
        }
    }
    return out;
}

}  // namespace ctxflow
