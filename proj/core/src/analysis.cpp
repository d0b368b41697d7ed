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

#include "ctxflow/analysis.h"

#include <algorithm>
#include <cmath>

#include "ctxflow/errors.h"
#include "ctxflow/random.h"

namespace ctxflow {

StateVector nx_state() {
    return StateVector(2.0 / 3, 2.0 / 3, 1.0 / 3);
}

StateVector symmetric_state() {
    double a = 1 / std::sqrt(3.0);
    return StateVector(a, a, a);
}

double path_probability(const StateVector &state, const Network &net, PathLabel label) {
    require_normalized(state);
    return std::norm(inner_product(path_state(net, label), state));
}

std::map<PathLabel, double> context_probabilities(const StateVector &state, const Network &net,
                                                  const Context &ctx) {
    std::map<PathLabel, double> out;
    for (PathLabel m : ctx.members) {
        out[m] = path_probability(state, net, m);
    }
    return out;
}

std::vector<StateVector> propagate(const StateVector &state, const Network &net) {
    require_normalized(state);
    std::array<Complex, 3> initial{};
    for (size_t j = 0; j < 3; ++j) {
        initial[j] = std::polar(1.0, net.phase(input_port(static_cast<int>(j) + 1))) * state[j];
    }
    std::vector<StateVector> slices{StateVector(initial)};
    for (int k = 1; k <= net.stage_count(); ++k) {
        slices.push_back(apply(stage_unitary(net, k), slices.back()));
    }
    return slices;
}

double propagated_probability(const StateVector &state, const Network &net, PathLabel label) {
    int t = net.creation_slice(label);
    auto slices = propagate(state, net);
    return std::norm(slices[static_cast<size_t>(t)][net.slot_of(label, t)]);
}

Complex weak_value(const StateVector &state, const Network &net, PathLabel intermediate, PathLabel outcome) {
    require_normalized(state);
    const StateVector &o = path_state(net, outcome);
    const StateVector &i = path_state(net, intermediate);
    Complex post = inner_product(o, state);
    if (std::norm(post) <= TOL_ZERO) {
        throw UndefinedPostselectionError("outcome " + std::string(to_string(outcome)) +
                                          " has zero probability for this state");
    }
    return inner_product(o, i) * inner_product(i, state) / post;
}

std::vector<WeakValueRecord> weak_value_table(const StateVector &state, const Network &net) {
    std::vector<WeakValueRecord> out;
    for (PathLabel i : net.arms()) {
        for (int k = 1; k <= 3; ++k) {
            PathLabel o = output_port(k);
            if (path_probability(state, net, o) <= TOL_ZERO) {
                continue;
            }
            out.push_back({i, o, weak_value(state, net, i, o), state});
        }
    }
    return out;
}

double CurrentDecomposition::residual() const {
    return std::abs(reconstructed - direct);
}

CurrentDecomposition current_decomposition(const StateVector &state, const Network &net, PathLabel intermediate,
                                           const Context &ctx) {
    CurrentDecomposition d{intermediate, {}, 0.0, path_probability(state, net, intermediate)};
    for (PathLabel o : ctx.members) {
        double p = path_probability(state, net, o);
        if (p <= TOL_ZERO) {
            continue;
        }
        Complex w = weak_value(state, net, intermediate, o);
        d.terms.push_back({o, w, p});
        d.reconstructed += w * p;
    }
    return d;
}

double ContinuityReport::max_residual() const {
    double worst = 0;
    for (const auto &e : entries) {
        worst = std::max(worst, e.residual);
    }
    return worst;
}

ContinuityReport continuity_check(const StateVector &state, const Network &net) {
    require_normalized(state);
    ContinuityReport report;
    for (const auto &s : net.stages()) {
        for (int k = 1; k <= 3; ++k) {
            PathLabel o = output_port(k);
            if (path_probability(state, net, o) <= TOL_ZERO) {
                continue;
            }
            Complex in = weak_value(state, net, s.in_a, o) + weak_value(state, net, s.in_b, o);
            Complex out = weak_value(state, net, s.out_a, o) + weak_value(state, net, s.out_b, o);
            report.entries.push_back({s.stage_index, o, in, out, std::abs(in - out)});
        }
    }
    return report;
}

InequalityReport ks_inequality(const StateVector &state, const Network &net) {
    InequalityReport r{};
    r.p_f = path_probability(state, net, PathLabel::F);
    r.p_d1 = path_probability(state, net, PathLabel::D1);
    r.p_d2 = path_probability(state, net, PathLabel::D2);
    r.violation = r.p_f - r.p_d1 - r.p_d2;
    r.violated = r.violation > TOL_ZERO;
    return r;
}

DetectionSample sample_detections(const StateVector &state, const Network &net, const Context &ctx,
                                  uint64_t shots, uint64_t seed) {
    if (shots == 0) {
        throw Error("shots must be positive");
    }
    auto probs = context_probabilities(state, net, ctx);
    std::array<double, 3> cdf{};
    double running = 0;
    size_t last_possible = 0;
    for (size_t j = 0; j < 3; ++j) {
        double p = probs.at(ctx.members[j]);
        running += p;
        cdf[j] = running;
        if (p > 0) {
            last_possible = j;
        }
    }

    std::array<uint64_t, 3> counts{};
    CounterRng rng(seed);
    for (uint64_t n = 0; n < shots; ++n) {
        double u = rng.uniform_at(n) * running;
        size_t j = 0;
        while (j < last_possible && u >= cdf[j]) {
            ++j;
        }
        ++counts[j];
    }

    DetectionSample sample{ctx, shots, seed, {}};
    for (size_t j = 0; j < 3; ++j) {
        sample.counts[ctx.members[j]] = counts[j];
    }
    return sample;
}

}  // namespace ctxflow
