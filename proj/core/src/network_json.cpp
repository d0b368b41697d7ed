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

#include "ctxflow/network_json.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ctxflow/errors.h"
#include "json.hpp"

namespace ctxflow {

namespace {

using nlohmann::json;

double parse_number_text(const std::string &text) {
    double value = 0;
    const char *begin = text.data();
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("malformed number '" + text + "'");
    }
    return value;
}

double parse_reflectivity(const json &value) {
    if (value.is_number()) {
        return value.get<double>();
    }
    if (value.is_string()) {
        auto text = value.get<std::string>();
        auto slash = text.find('/');
        if (slash == std::string::npos) {
            return parse_number_text(text);
        }
        double num = parse_number_text(text.substr(0, slash));
        double den = parse_number_text(text.substr(slash + 1));
        if (den == 0) {
            throw ParseError("zero denominator in '" + text + "'");
        }
        return num / den;
    }
    throw ParseError("reflectivity \"R\" must be a number or a fraction string");
}

std::pair<PathLabel, PathLabel> parse_pair(const json &stage, const char *key) {
    if (!stage.contains(key) || !stage[key].is_array() || stage[key].size() != 2 ||
        !stage[key][0].is_string() || !stage[key][1].is_string()) {
        throw ParseError(std::string("stage field \"") + key + "\" must be an array of two labels");
    }
    return {parse_path_label(stage[key][0].get<std::string>()),
            parse_path_label(stage[key][1].get<std::string>())};
}

}  // namespace

Network network_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("network document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("stages") || !doc["stages"].is_array()) {
        throw ParseError("network document needs a \"stages\" array");
    }

    std::vector<BeamSplitterStage> stages;
    try {
        for (const auto &s : doc["stages"]) {
            if (!s.is_object() || !s.contains("R")) {
                throw ParseError("each stage needs \"in\", \"out\" and \"R\"");
            }
            auto [in_a, in_b] = parse_pair(s, "in");
            auto [out_a, out_b] = parse_pair(s, "out");
            stages.push_back({in_a, in_b, out_a, out_b, parse_reflectivity(s["R"])});
        }
    } catch (const UnknownPathError &e) {
        throw ParseError(e.what());
    }

    std::map<PathLabel, double> phases;
    if (doc.contains("phases")) {
        if (!doc["phases"].is_object()) {
            throw ParseError("\"phases\" must be an object of label -> radians");
        }
        for (const auto &[key, value] : doc["phases"].items()) {
            if (!value.is_number()) {
                throw ParseError("phase for " + key + " must be a number");
            }
            try {
                phases[parse_path_label(key)] = value.get<double>();
            } catch (const UnknownPathError &e) {
                throw ParseError(e.what());
            }
        }
    }
    return Network(std::move(stages), std::move(phases));
}

Network load_network_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open network file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return network_from_json(buffer.str());
}

std::string network_to_json(const Network &net, int indent) {
    json doc;
    doc["stages"] = json::array();
    for (const auto &s : net.stages()) {
        doc["stages"].push_back({
            {"in", {std::string(to_string(s.in_a)), std::string(to_string(s.in_b))}},
            {"out", {std::string(to_string(s.out_a)), std::string(to_string(s.out_b))}},
            {"R", s.reflectivity},
        });
    }
    doc["phases"] = json::object();
    for (const auto &[label, angle] : net.phases()) {
        doc["phases"][std::string(to_string(label))] = angle;
    }
    return doc.dump(indent);
}

std::string network_hash(const Network &net) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : network_to_json(net)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace ctxflow
