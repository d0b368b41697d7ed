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

#include "ctxflow/network.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "ctxflow/errors.h"

namespace ctxflow {

namespace {

constexpr std::array<std::string_view, 13> LABEL_NAMES{
    "IN1", "IN2", "IN3", "S1", "D1", "F", "P1", "S2", "P2", "D2", "OUT1", "OUT2", "OUT3",
};

size_t idx(PathLabel label) {
    return static_cast<size_t>(label);
}

Complex phase_factor(double angle) {
    return std::polar(1.0, angle);
}

}  // namespace

std::string_view to_string(PathLabel label) {
    return LABEL_NAMES[idx(label)];
}

std::string_view display_name(PathLabel label) {
    return label == PathLabel::F ? "f" : to_string(label);
}

PathLabel parse_path_label(std::string_view text) {
    for (size_t k = 0; k < LABEL_NAMES.size(); ++k) {
        if (text == LABEL_NAMES[k]) {
            return ALL_PATH_LABELS[k];
        }
    }
    if (text == "f") {
        return PathLabel::F;
    }
    throw UnknownPathError("unknown path label '" + std::string(text) + "'");
}

bool is_input(PathLabel label) {
    return label == PathLabel::IN1 || label == PathLabel::IN2 || label == PathLabel::IN3;
}

bool is_output(PathLabel label) {
    return label == PathLabel::OUT1 || label == PathLabel::OUT2 || label == PathLabel::OUT3;
}

std::optional<int> port_index(PathLabel label) {
    if (is_input(label)) {
        return static_cast<int>(idx(label) - idx(PathLabel::IN1)) + 1;
    }
    if (is_output(label)) {
        return static_cast<int>(idx(label) - idx(PathLabel::OUT1)) + 1;
    }
    return std::nullopt;
}

PathLabel input_port(int index) {
    if (index < 1 || index > 3) {
        throw UnknownPathError("input port index must be 1..3");
    }
    return ALL_PATH_LABELS[idx(PathLabel::IN1) + index - 1];
}

PathLabel output_port(int index) {
    if (index < 1 || index > 3) {
        throw UnknownPathError("output port index must be 1..3");
    }
    return ALL_PATH_LABELS[idx(PathLabel::OUT1) + index - 1];
}

bool Context::contains(PathLabel label) const {
    return std::find(members.begin(), members.end(), label) != members.end();
}

Network::Network(std::vector<BeamSplitterStage> stages, std::map<PathLabel, double> phases)
    : stages_(std::move(stages)) {
    creation_.fill(-1);
    if (stages_.empty()) {
        throw InvalidNetworkError("network has no stages");
    }

    Slice live{PathLabel::IN1, PathLabel::IN2, PathLabel::IN3};
    slices_.push_back(live);
    for (PathLabel in : live) {
        creation_[idx(in)] = 0;
        arms_.push_back(in);
    }

    for (size_t k = 0; k < stages_.size(); ++k) {
        auto &s = stages_[k];
        s.stage_index = static_cast<int>(k) + 1;
        std::string where = "stage " + std::to_string(s.stage_index) + ": ";
        if (!std::isfinite(s.reflectivity) || s.reflectivity <= 0 || s.reflectivity >= 1) {
            throw InvalidNetworkError(where + "reflectivity must lie strictly between 0 and 1");
        }
        if (s.in_a == s.in_b) {
            throw InvalidNetworkError(where + "in arms must differ");
        }
        if (s.out_a == s.out_b) {
            throw InvalidNetworkError(where + "out arms must differ");
        }
        for (PathLabel in : {s.in_a, s.in_b}) {
            if (std::find(live.begin(), live.end(), in) == live.end()) {
                throw InvalidNetworkError(where + "in arm " + std::string(to_string(in)) + " is not live");
            }
            if (is_output(in)) {
                throw InvalidNetworkError(where + "output port " + std::string(to_string(in)) +
                                          " cannot feed a beam splitter");
            }
        }
        for (PathLabel out : {s.out_a, s.out_b}) {
            if (creation_[idx(out)] >= 0 || is_input(out)) {
                throw InvalidNetworkError(where + "out arm " + std::string(to_string(out)) +
                                          " already exists");
            }
        }
        for (auto &slot : live) {
            if (slot == s.in_a) {
                slot = s.out_a;
            } else if (slot == s.in_b) {
                slot = s.out_b;
            }
        }
        for (PathLabel out : {s.out_a, s.out_b}) {
            creation_[idx(out)] = s.stage_index;
            arms_.push_back(out);
        }
        slices_.push_back(live);
    }

    Slice last = slices_.back();
    std::sort(last.begin(), last.end());
    if (last != Slice{PathLabel::OUT1, PathLabel::OUT2, PathLabel::OUT3}) {
        throw InvalidNetworkError("the final slice must be exactly OUT1, OUT2, OUT3");
    }
    slices_.back() = last;

    for (const auto &[label, angle] : phases) {
        if (!has_arm(label)) {
            throw InvalidNetworkError("phase given for arm " + std::string(to_string(label)) +
                                      " that is not in the network");
        }
        if (!std::isfinite(angle)) {
            throw InvalidNetworkError("phase for arm " + std::string(to_string(label)) + " is not finite");
        }
        if (angle != 0) {
            phases_[label] = angle;
        }
    }

    // Arm kets follow from the amplitude convention: <out|psi> picks up the
    // phase factor, so the ket carries its conjugate.
    for (int k = 1; k <= 3; ++k) {
        PathLabel in = input_port(k);
        kets_[idx(in)] = StateVector::basis(k) * std::conj(phase_factor(phase(in)));
    }
    for (const auto &s : stages_) {
        double ra = std::sqrt(s.reflectivity);
        double rb = std::sqrt(1 - s.reflectivity);
        const StateVector &a = *kets_[idx(s.in_a)];
        const StateVector &b = *kets_[idx(s.in_b)];
        kets_[idx(s.out_a)] = (a * ra + b * rb) * std::conj(phase_factor(phase(s.out_a)));
        kets_[idx(s.out_b)] = (a * rb - b * ra) * std::conj(phase_factor(phase(s.out_b)));
    }
}

const BeamSplitterStage &Network::stage(int stage_index) const {
    if (stage_index < 1 || stage_index > stage_count()) {
        throw BadStageError("stage index " + std::to_string(stage_index) + " is outside 1.." +
                            std::to_string(stage_count()));
    }
    return stages_[stage_index - 1];
}

double Network::phase(PathLabel label) const {
    auto it = phases_.find(label);
    return it == phases_.end() ? 0.0 : it->second;
}

bool Network::has_arm(PathLabel label) const {
    return creation_[idx(label)] >= 0;
}

int Network::creation_slice(PathLabel label) const {
    if (!has_arm(label)) {
        throw UnknownPathError("arm " + std::string(to_string(label)) + " is not in the network");
    }
    return creation_[idx(label)];
}

std::size_t Network::slot_of(PathLabel label, int slice) const {
    const Slice &s = slices_.at(static_cast<size_t>(slice));
    auto it = std::find(s.begin(), s.end(), label);
    if (it == s.end()) {
        throw UnknownPathError("arm " + std::string(to_string(label)) + " is not live in slice " +
                               std::to_string(slice));
    }
    return static_cast<std::size_t>(it - s.begin());
}

PathLabel Network::parallel_arm(int stage_index) const {
    const auto &s = stage(stage_index);
    for (PathLabel arm : slices_[stage_index - 1]) {
        if (arm != s.in_a && arm != s.in_b) {
            return arm;
        }
    }
    throw InvalidNetworkError("stage has no parallel arm");
}

const StateVector &Network::ket(PathLabel label) const {
    const auto &k = kets_[idx(label)];
    if (!k) {
        throw UnknownPathError("arm " + std::string(to_string(label)) + " is not in the network");
    }
    return *k;
}

Network canonical_network_with(const std::array<double, 5> &r, std::map<PathLabel, double> phases) {
    using enum PathLabel;
    return Network(
        {
            {IN2, IN3, S1, D1, r[0]},
            {IN1, D1, F, P1, r[1]},
            {S1, P1, S2, P2, r[2]},
            {F, P2, OUT2, D2, r[3]},
            {S2, D2, OUT1, OUT3, r[4]},
        },
        std::move(phases));
}

Network canonical_network() {
    return canonical_network_with({1.0 / 2, 1.0 / 3, 1.0 / 4, 1.0 / 3, 1.0 / 2});
}

StateVector path_state(const Network &net, PathLabel label) {
    return net.ket(label);
}

Operator3 stage_unitary(const Network &net, int stage_index) {
    const auto &s = net.stage(stage_index);
    int before = stage_index - 1;
    int after = stage_index;
    double ra = std::sqrt(s.reflectivity);
    double rb = std::sqrt(1 - s.reflectivity);
    Complex pa = phase_factor(net.phase(s.out_a));
    Complex pb = phase_factor(net.phase(s.out_b));

    size_t ia = net.slot_of(s.in_a, before);
    size_t ib = net.slot_of(s.in_b, before);
    size_t oa = net.slot_of(s.out_a, after);
    size_t ob = net.slot_of(s.out_b, after);
    PathLabel par = net.parallel_arm(stage_index);

    Operator3 u;
    u(oa, ia) = pa * ra;
    u(oa, ib) = pa * rb;
    u(ob, ia) = pb * rb;
    u(ob, ib) = -pb * ra;
    u(net.slot_of(par, after), net.slot_of(par, before)) = 1.0;
    return u;
}

Operator3 network_unitary(const Network &net) {
    Operator3 total = Operator3::identity();
    for (int k = 1; k <= net.stage_count(); ++k) {
        total = compose(stage_unitary(net, k), total);
    }
    return total;
}

std::vector<Context> contexts(const Network &net) {
    std::vector<Context> out;
    const auto &slices = net.slices();
    for (size_t t = 0; t < slices.size(); ++t) {
        std::string name;
        if (t == 0) {
            name = "input";
        } else if (t + 1 == slices.size()) {
            name = "output";
        } else {
            name = "ctx" + std::to_string(t);
        }
        out.push_back({std::move(name), slices[t]});
    }
    return out;
}

Context find_context(const Network &net, std::string_view key) {
    auto all = contexts(net);
    for (const auto &c : all) {
        if (c.name == key) {
            return c;
        }
    }
    if (!key.empty() && std::all_of(key.begin(), key.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        size_t t = std::stoul(std::string(key));
        if (t < all.size()) {
            return all[t];
        }
    }
    if (key.find(',') != std::string_view::npos) {
        std::set<PathLabel> wanted;
        std::string text(key);
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            item.erase(0, item.find_first_not_of(' '));
            item.erase(item.find_last_not_of(' ') + 1);
            wanted.insert(parse_path_label(item));
        }
        for (const auto &c : all) {
            if (std::set<PathLabel>(c.members.begin(), c.members.end()) == wanted) {
                return c;
            }
        }
    }
    throw UnknownPathError("no context matches '" + std::string(key) + "'");
}

}  // namespace ctxflow
