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

#ifndef CTXFLOW_NETWORK_H
#define CTXFLOW_NETWORK_H

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctxflow/hilbert.h"

namespace ctxflow {

/// Arms of the three-path interferometer.
enum class PathLabel : uint8_t {
    IN1,
    IN2,
    IN3,
    S1,
    D1,
    F,
    P1,
    S2,
    P2,
    D2,
    OUT1,
    OUT2,
    OUT3,
};

inline constexpr std::array<PathLabel, 13> ALL_PATH_LABELS{
    PathLabel::IN1, PathLabel::IN2, PathLabel::IN3, PathLabel::S1, PathLabel::D1,
    PathLabel::F,   PathLabel::P1,  PathLabel::S2,  PathLabel::P2, PathLabel::D2,
    PathLabel::OUT1, PathLabel::OUT2, PathLabel::OUT3,
};

/// Internal name ("IN1", "F", ...).
std::string_view to_string(PathLabel label);

/// Name used in tables: the internal name, except F which reads "f".
std::string_view display_name(PathLabel label);

/// Accepts the internal names plus the lowercase "f". Throws UnknownPathError otherwise.
PathLabel parse_path_label(std::string_view text);

bool is_input(PathLabel label);
bool is_output(PathLabel label);

/// 1..3 for IN/OUT arms, nullopt for intermediate arms.
std::optional<int> port_index(PathLabel label);

PathLabel input_port(int index);
PathLabel output_port(int index);

/// A beam splitter mixing two live arms into two new arms.
///
/// Amplitude convention (all real, R = reflectivity):
///   out_a <- sqrt(R) * in_a + sqrt(1-R) * in_b
///   out_b <- sqrt(1-R) * in_a - sqrt(R) * in_b
struct BeamSplitterStage {
    PathLabel in_a;
    PathLabel in_b;
    PathLabel out_a;
    PathLabel out_b;
    double reflectivity;
    int stage_index = 0;  // 1-based; assigned by Network

    bool operator==(const BeamSplitterStage &) const = default;
};

/// The three arms live between two stages, in slot order.
using Slice = std::array<PathLabel, 3>;

/// A jointly measurable triple of arms.
struct Context {
    std::string name;
    Slice members;

    bool contains(PathLabel label) const;
};

/// Immutable description of the interferometer.
///
/// The constructor validates the stage list and derives the arm layout and the
/// path kets. Slot layout: the input slice is (IN1, IN2, IN3); each stage puts
/// its out arms into the slots of its in arms; the final slice is reordered to
/// (OUT1, OUT2, OUT3).
///
/// Phases are per-arm angles in radians, applied to the amplitude of an arm at
/// the slice where it is created. Zero entries are dropped.
class Network {
   public:
    explicit Network(std::vector<BeamSplitterStage> stages, std::map<PathLabel, double> phases = {});

    const std::vector<BeamSplitterStage> &stages() const {
        return stages_;
    }
    int stage_count() const {
        return static_cast<int>(stages_.size());
    }
    /// Throws BadStageError outside 1..stage_count().
    const BeamSplitterStage &stage(int stage_index) const;

    /// stage_count() + 1 slices; slice t is the layout after stage t.
    const std::vector<Slice> &slices() const {
        return slices_;
    }

    const std::map<PathLabel, double> &phases() const {
        return phases_;
    }
    double phase(PathLabel label) const;
    bool has_phases() const {
        return !phases_.empty();
    }

    bool has_arm(PathLabel label) const;

    /// Index of the slice in which the arm is created (0 for inputs).
    int creation_slice(PathLabel label) const;

    /// Slot (0..2) of the arm within slice t. Throws UnknownPathError if absent.
    std::size_t slot_of(PathLabel label, int slice) const;

    /// The arm that passes a stage untouched.
    PathLabel parallel_arm(int stage_index) const;

    /// All arms in creation order.
    const std::vector<PathLabel> &arms() const {
        return arms_;
    }

    /// Ket of an arm in the computational basis.
    const StateVector &ket(PathLabel label) const;

    bool operator==(const Network &other) const {
        return stages_ == other.stages_ && phases_ == other.phases_;
    }

   private:
    std::vector<BeamSplitterStage> stages_;
    std::map<PathLabel, double> phases_;
    std::vector<Slice> slices_;
    std::vector<PathLabel> arms_;
    std::array<int, ALL_PATH_LABELS.size()> creation_{};
    std::array<std::optional<StateVector>, ALL_PATH_LABELS.size()> kets_{};
};

/// The five-stage interferometer with reflectivities 1/2, 1/3, 1/4, 1/3, 1/2
/// and no phase shifts.
Network canonical_network();

/// Same topology as canonical_network() with the given reflectivities.
Network canonical_network_with(const std::array<double, 5> &reflectivities,
                               std::map<PathLabel, double> phases = {});

/// Ket of `label` in the computational basis {1,2,3}. Throws UnknownPathError.
StateVector path_state(const Network &net, PathLabel label);

/// Stage operator in slice coordinates: maps amplitudes over the slots of
/// slice stage_index-1 to amplitudes over the slots of slice stage_index.
/// Throws BadStageError.
Operator3 stage_unitary(const Network &net, int stage_index);

/// Product of all stage operators (last stage leftmost).
Operator3 network_unitary(const Network &net);

/// One context per slice: "input", "ctx1".."ctxN-1", "output".
std::vector<Context> contexts(const Network &net);

/// Looks a context up by name, by slice index ("0".."N"), or by a comma
/// separated member list in any order ("S1,f,P1"). Throws UnknownPathError.
Context find_context(const Network &net, std::string_view key);

}  // namespace ctxflow

#endif
