/*
 * Copyright 2026 The trifermion contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <fstream>
#include <set>

#include "cli.hpp"

namespace trifermion::cli {

namespace {

using nlohmann::json;

const json& require(const json& obj, const std::string& key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key)) {
        throw InputError("missing field " + where + key);
    }
    return obj.at(key);
}

std::string number_text(const json& value, const std::string& field)
{
    if (value.is_string()) {
        return value.get<std::string>();
    }
    if (value.is_number_integer()) {
        return std::to_string(value.get<long long>());
    }
    throw InputError("field " + field + " must be a string");
}

Scalar parse_amplitude(const json& entry, Mode mode, const std::string& field)
{
    const std::string re = number_text(require(entry, "re", field + "."), field + ".re");
    const std::string im = entry.contains("im") ? number_text(entry.at("im"), field + ".im") : "0";
    try {
        return Scalar::parse(re, im, mode);
    } catch (const std::exception& e) {
        throw InputError("field " + field + " is not a valid number: " + e.what());
    }
}

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + " is not valid JSON: " + e.what());
    }
}

}  // namespace

std::string mode_name(Mode mode) { return mode == Mode::exact ? "rational" : "float"; }

StateFile parse_state(const json& doc)
{
    if (!doc.is_object()) {
        throw InputError("state file must be a JSON object");
    }
    const json& format = require(doc, "format", "");
    if (!format.is_number_integer() || format.get<int>() != 1) {
        throw InputError("field format must be 1");
    }
    StateFile file;
    const json& dim = require(doc, "dimension", "");
    if (!dim.is_number_integer() || dim.get<int>() < 6 || dim.get<int>() > 9) {
        throw InputError("field dimension must be an integer in 6..9");
    }
    file.dimension = dim.get<int>();
    const json& degree = require(doc, "degree", "");
    if (!degree.is_number_integer() || degree.get<int>() != 3) {
        throw InputError("field degree must be 3");
    }
    const json& mode = require(doc, "scalar_mode", "");
    if (mode == "rational") {
        file.mode = Mode::exact;
    } else if (mode == "float") {
        file.mode = Mode::floating;
    } else {
        throw InputError("field scalar_mode must be \"rational\" or \"float\"");
    }
    const json& amps = require(doc, "amplitudes", "");
    if (!amps.is_array()) {
        throw InputError("field amplitudes must be a list");
    }
    file.state = AltTensor(file.dimension, 3, file.mode);
    std::set<Mask> seen;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const std::string field = "amplitudes[" + std::to_string(i) + "]";
        const json& idx = require(amps[i], "indices", field + ".");
        if (!idx.is_array() || idx.size() != 3) {
            throw InputError("field " + field + ".indices must list three indices");
        }
        std::vector<int> indices;
        for (const auto& v : idx) {
            if (!v.is_number_integer() || v.get<int>() < 1 || v.get<int>() > file.dimension) {
                throw InputError("field " + field + ".indices must lie in 1.." + std::to_string(file.dimension));
            }
            indices.push_back(v.get<int>());
        }
        if (permutation_sign(indices) == 0) {
            throw InputError("field " + field + ".indices must be pairwise distinct");
        }
        if (!seen.insert(mask_of(indices)).second) {
            throw InputError("field " + field + ".indices repeats an earlier index set");
        }
        file.state.set(indices, parse_amplitude(amps[i], file.mode, field));
    }
    return file;
}

StateFile load_state(const std::string& path) { return parse_state(read_json(path)); }

json state_to_json(const AltTensor& state)
{
    json amps = json::array();
    for (const auto& [indices, value] : state.terms()) {
        amps.push_back({{"indices", indices}, {"re", value.re_string()}, {"im", value.im_string()}});
    }
    return {{"format", 1},
            {"dimension", state.dimension()},
            {"degree", state.degree()},
            {"scalar_mode", mode_name(state.mode())},
            {"amplitudes", amps}};
}

std::vector<Scalar> load_amplitudes(const std::string& path)
{
    const json doc = read_json(path);
    Mode mode = Mode::exact;
    if (doc.is_object() && doc.contains("scalar_mode")) {
        if (doc.at("scalar_mode") == "float") {
            mode = Mode::floating;
        } else if (doc.at("scalar_mode") != "rational") {
            throw InputError("field scalar_mode must be \"rational\" or \"float\"");
        }
    }
    const json& amps = require(doc, "amplitudes", "");
    if (!amps.is_array()) {
        throw InputError("field amplitudes must be a list");
    }
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const std::string field = "amplitudes[" + std::to_string(i) + "]";
        if (amps[i].is_object()) {
            out.push_back(parse_amplitude(amps[i], mode, field));
        } else {
            out.push_back(parse_amplitude(json{{"re", amps[i]}}, mode, field));
        }
    }
    return out;
}

}  // namespace trifermion::cli
