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

#include "cli/state_parser.h"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ctxflow/analysis.h"
#include "ctxflow/errors.h"
#include "json.hpp"

namespace ctxflow::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_decimal(std::string_view text, std::string_view whole) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw ParseError("malformed number in literal '" + std::string(whole) + "'");
    }
    return value;
}

// A real component: decimal or p/q. An empty or bare sign stands for a unit
// coefficient (used by "i" and "-i").
double parse_component(std::string_view text, std::string_view whole) {
    text = trim(text);
    if (text.empty() || text == "+") {
        return 1.0;
    }
    if (text == "-") {
        return -1.0;
    }
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return parse_decimal(text, whole);
    }
    double num = parse_decimal(trim(text.substr(0, slash)), whole);
    double den = parse_decimal(trim(text.substr(slash + 1)), whole);
    if (den == 0) {
        throw ParseError("zero denominator in literal '" + std::string(whole) + "'");
    }
    return num / den;
}

StateVector finish(const std::array<Complex, 3> &amps, bool normalize_input) {
    StateVector v(amps);
    double n2 = norm_squared(v);
    if (!(n2 > TOL_ZERO)) {
        throw ZeroVectorError("state has zero norm");
    }
    if (!normalize_input && std::abs(std::sqrt(n2) - 1) > INPUT_NORM_TOLERANCE) {
        throw NotNormalizedError("state norm is " + std::to_string(std::sqrt(n2)) +
                                 "; pass --normalize to rescale it");
    }
    return normalize(v);
}

Complex parse_json_amplitude(const nlohmann::json &a) {
    if (a.is_number()) {
        return a.get<double>();
    }
    if (a.is_string()) {
        return parse_complex(a.get<std::string>());
    }
    if (a.is_array() && a.size() == 2 && a[0].is_number() && a[1].is_number()) {
        return {a[0].get<double>(), a[1].get<double>()};
    }
    throw ParseError("amplitude must be a number, a literal string or a [re, im] pair");
}

StateVector parse_state_file(const std::string &path, bool normalize_input) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open state file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError("state file '" + path + "' is not valid JSON");
    }
    if (doc.is_object() && doc.contains("amplitudes")) {
        doc = doc["amplitudes"];
    }
    if (!doc.is_array() || doc.size() != 3) {
        throw ParseError("state file must hold three amplitudes");
    }
    return finish({parse_json_amplitude(doc[0]), parse_json_amplitude(doc[1]), parse_json_amplitude(doc[2])},
                  normalize_input);
}

}  // namespace

Complex parse_complex(std::string_view text) {
    std::string_view whole = text;
    text = trim(text);
    if (text.empty()) {
        throw ParseError("empty complex literal");
    }
    bool imaginary = text.back() == 'i';
    if (imaginary) {
        text.remove_suffix(1);
    }
    if (text.find('i') != std::string_view::npos) {
        throw ParseError("malformed complex literal '" + std::string(whole) + "'");
    }
    // The split between real and imaginary parts is the last sign that is not
    // at the start and not part of an exponent.
    size_t split = std::string_view::npos;
    for (size_t k = 1; k < text.size(); ++k) {
        char prev = text[k - 1];
        if ((text[k] == '+' || text[k] == '-') && prev != 'e' && prev != 'E' && prev != '/') {
            split = k;
        }
    }
    if (!imaginary) {
        if (split != std::string_view::npos) {
            throw ParseError("malformed complex literal '" + std::string(whole) + "' (missing 'i')");
        }
        return {parse_component(text, whole), 0.0};
    }
    if (split == std::string_view::npos) {
        return {0.0, parse_component(text, whole)};
    }
    std::string_view re = trim(text.substr(0, split));
    if (re.empty()) {
        throw ParseError("malformed complex literal '" + std::string(whole) + "'");
    }
    return {parse_component(re, whole), parse_component(text.substr(split), whole)};
}

StateVector parse_state(std::string_view spec, bool normalize_input) {
    spec = trim(spec);
    if (spec == "nx") {
        return nx_state();
    }
    if (spec == "symmetric") {
        return symmetric_state();
    }
    if (spec.find(',') != std::string_view::npos) {
        std::vector<std::string> items;
        std::stringstream in{std::string(spec)};
        std::string item;
        while (std::getline(in, item, ',')) {
            items.push_back(item);
        }
        if (spec.back() == ',') {
            items.emplace_back();
        }
        if (items.size() != 3) {
            throw ParseError("inline state needs exactly three amplitudes, got " + std::to_string(items.size()));
        }
        return finish({parse_complex(items[0]), parse_complex(items[1]), parse_complex(items[2])}, normalize_input);
    }
    std::string path(spec);
    if (std::filesystem::is_regular_file(path)) {
        return parse_state_file(path, normalize_input);
    }
    throw ParseError("'" + path + "' is not a preset (nx, symmetric), an amplitude list or a readable file");
}

}  // namespace ctxflow::cli
