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

#include "cli/report.h"

#include "cli/format.h"
#include "ctxflow/network_json.h"

namespace ctxflow::cli {

namespace {

std::string name(PathLabel label) {
    return std::string(to_string(label));
}

}  // namespace

json number(double x) {
    return round12(x);
}

json complex_pair(Complex z) {
    return json::array({number(z.real()), number(z.imag())});
}

json state_json(const StateVector &v) {
    json out = json::array();
    for (const auto &a : v.amplitudes()) {
        out.push_back(complex_pair(a));
    }
    return out;
}

json paths_json(const Network &net) {
    json arms = json::array();
    for (PathLabel arm : net.arms()) {
        arms.push_back({
            {"arm", name(arm)},
            {"slice", net.creation_slice(arm)},
            {"state", state_json(path_state(net, arm))},
        });
    }
    json stages = json::array();
    for (const auto &s : net.stages()) {
        stages.push_back({
            {"stage", s.stage_index},
            {"in", {name(s.in_a), name(s.in_b)}},
            {"out", {name(s.out_a), name(s.out_b)}},
            {"R", number(s.reflectivity)},
        });
    }
    json phases = json::object();
    for (const auto &[arm, phi] : net.phases()) {
        phases[name(arm)] = number(phi);
    }
    return {{"arms", arms}, {"phases", phases}, {"stages", stages}};
}

json probabilities_json(const StateVector &state, const Network &net, const std::vector<Context> &ctxs) {
    json out = json::array();
    for (const auto &c : ctxs) {
        auto probs = context_probabilities(state, net, c);
        json members = json::array();
        for (PathLabel m : c.members) {
            members.push_back({{"arm", name(m)}, {"probability", number(probs.at(m))}});
        }
        out.push_back({{"name", c.name}, {"members", members}});
    }
    return {{"contexts", out}};
}

json weak_values_json(const StateVector &state, const Network &net) {
    json outcomes = json::array();
    std::vector<bool> defined;
    for (int k = 1; k <= 3; ++k) {
        PathLabel o = output_port(k);
        outcomes.push_back(name(o));
        defined.push_back(path_probability(state, net, o) > TOL_ZERO);
    }
    json rows = json::array();
    for (PathLabel i : net.arms()) {
        json values = json::array();
        for (int k = 1; k <= 3; ++k) {
            values.push_back(defined[k - 1] ? complex_pair(weak_value(state, net, i, output_port(k))) : json());
        }
        rows.push_back({{"arm", name(i)}, {"values", values}});
    }
    return {{"outcomes", outcomes}, {"rows", rows}};
}

json inequality_json(const InequalityReport &r) {
    return {
        {"p_f", number(r.p_f)},
        {"p_d1", number(r.p_d1)},
        {"p_d2", number(r.p_d2)},
        {"violation", number(r.violation)},
        {"violated", r.violated},
    };
}

json continuity_json(const ContinuityReport &report) {
    json entries = json::array();
    for (const auto &e : report.entries) {
        entries.push_back({
            {"stage", e.stage_index},
            {"outcome", name(e.outcome)},
            {"input_sum", complex_pair(e.input_sum)},
            {"output_sum", complex_pair(e.output_sum)},
            {"residual", number(e.residual)},
        });
    }
    return {{"entries", entries}, {"max_residual", number(report.max_residual())}};
}

json trajectories_json(const TrajectoryReport &report) {
    json all = json::array();
    for (const auto &t : report.all_trajectories) {
        json arms = json::array();
        for (PathLabel a : t.arms) {
            arms.push_back(name(a));
        }
        all.push_back({
            {"input", name(t.input)},
            {"output", name(t.output)},
            {"arms", arms},
            {"route", t.route()},
            {"branchings", t.branchings},
        });
    }
    json via = json::array();
    for (const auto &t : report.via_f_same_port) {
        via.push_back(t.route());
    }
    return {
        {"trajectories", all},
        {"via_f_same_port", via},
        {"claim_holds", report.claim_holds},
        {"assumption", "hidden-variable particles exit from the port matching their input"},
    };
}

json sample_json(const DetectionSample &sample, const StateVector &state, const Network &net) {
    auto probs = context_probabilities(state, net, sample.context);
    json counts = json::object();
    json freqs = json::object();
    json born = json::object();
    for (PathLabel m : sample.context.members) {
        uint64_t n = sample.counts.at(m);
        counts[name(m)] = n;
        freqs[name(m)] = number(static_cast<double>(n) / static_cast<double>(sample.shots));
        born[name(m)] = number(probs.at(m));
    }
    return {
        {"context", sample.context.name},
        {"shots", sample.shots},
        {"seed", sample.seed},
        {"counts", counts},
        {"frequencies", freqs},
        {"probabilities", born},
    };
}

json verify_json(const std::vector<CheckResult> &results) {
    json checks = json::array();
    for (const auto &r : results) {
        checks.push_back({{"name", r.name}, {"status", std::string(to_string(r.status))}, {"detail", r.detail}});
    }
    return {{"checks", checks}, {"passed", all_passed(results)}};
}

json envelope(const std::string &command, const std::optional<StateVector> &state, const Network &net,
              json result) {
    return {
        {"command", command},
        {"state", state ? state_json(*state) : json()},
        {"network_hash", network_hash(net)},
        {"result", std::move(result)},
    };
}

std::string dump_report(const json &report) {
    return report.dump(2) + "\n";
}

}  // namespace ctxflow::cli
