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

#ifndef CTXFLOW_ANALYSIS_H
#define CTXFLOW_ANALYSIS_H

#include <cstdint>
#include <map>
#include <vector>

#include "ctxflow/hilbert.h"
#include "ctxflow/network.h"

namespace ctxflow {

inline constexpr double TOL_CONTINUITY = 1e-9;

/// (2|1> + 2|2> + |3>) / 3
StateVector nx_state();

/// (|1> + |2> + |3>) / sqrt(3), the state with P(D1) = P(D2) = 0.
StateVector symmetric_state();

/// |<label|state>|^2. Throws NotNormalizedError, UnknownPathError.
double path_probability(const StateVector &state, const Network &net, PathLabel label);

/// Born probabilities of the three members, in member order.
std::map<PathLabel, double> context_probabilities(const StateVector &state, const Network &net,
                                                  const Context &ctx);

/// Amplitudes over the slots of every slice, obtained by pushing the state
/// through the stage operators one at a time. Entry t has slice t's slot order.
std::vector<StateVector> propagate(const StateVector &state, const Network &net);

/// Probability of an arm read off the propagated slice amplitudes.
double propagated_probability(const StateVector &state, const Network &net, PathLabel label);

/// W(i|o) = <o|i><i|psi> / <o|psi>.
///
/// Throws UndefinedPostselectionError when |<o|psi>|^2 <= TOL_ZERO.
Complex weak_value(const StateVector &state, const Network &net, PathLabel intermediate,
                   PathLabel outcome);

struct WeakValueRecord {
    PathLabel intermediate;
    PathLabel outcome;
    Complex value;
    StateVector input_state;
};

/// Every arm against every output port. Outcomes with P(o) <= TOL_ZERO are skipped.
std::vector<WeakValueRecord> weak_value_table(const StateVector &state, const Network &net);

struct DecompositionTerm {
    PathLabel outcome;
    Complex weak_value;
    double probability;
};

struct CurrentDecomposition {
    PathLabel intermediate;
    std::vector<DecompositionTerm> terms;
    Complex reconstructed;  // sum of weak_value * probability
    double direct;          // path_probability(state, intermediate)

    double residual() const;
};

/// Splits P(i) into conditional currents over the members of `ctx`.
CurrentDecomposition current_decomposition(const StateVector &state, const Network &net,
                                           PathLabel intermediate, const Context &ctx);

struct ContinuityEntry {
    int stage_index;
    PathLabel outcome;
    Complex input_sum;   // W(in_a|o) + W(in_b|o)
    Complex output_sum;  // W(out_a|o) + W(out_b|o)
    double residual;
};

struct ContinuityReport {
    std::vector<ContinuityEntry> entries;

    double max_residual() const;
    bool holds(double tol = TOL_CONTINUITY) const {
        return max_residual() < tol;
    }
};

/// Conditional currents into and out of every stage, for every output port
/// with P(o) > TOL_ZERO.
ContinuityReport continuity_check(const StateVector &state, const Network &net);

struct InequalityReport {
    double p_f;
    double p_d1;
    double p_d2;
    double violation;  // p_f - p_d1 - p_d2
    bool violated;     // violation > TOL_ZERO
};

/// P(f) <= P(D1) + P(D2) for the given state.
InequalityReport ks_inequality(const StateVector &state, const Network &net);

struct DetectionSample {
    Context context;
    uint64_t shots;
    uint64_t seed;
    std::map<PathLabel, uint64_t> counts;  // one entry per member, sums to shots
};

/// `shots` independent detections in `ctx` by inverse CDF over the Born
/// probabilities. Draw n uses CounterRng(seed).uniform_at(n), so identical
/// inputs give identical counts.
DetectionSample sample_detections(const StateVector &state, const Network &net, const Context &ctx,
                                  uint64_t shots, uint64_t seed);

}  // namespace ctxflow

#endif
