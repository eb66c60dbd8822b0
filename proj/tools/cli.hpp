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

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "trifermion/exterior.hpp"

namespace trifermion::cli {

inline constexpr const char* tool_version = "0.1.0";

enum ExitCode { exit_ok = 0, exit_input_error = 2, exit_unclassified = 3 };

// Malformed input; the message names the offending field.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct StateFile {
    int dimension = 0;
    int degree = 3;
    Mode mode = Mode::exact;
    AltTensor state{6, 3, Mode::exact};
};

StateFile parse_state(const nlohmann::json& doc);
StateFile load_state(const std::string& path);
nlohmann::json state_to_json(const AltTensor& state);

// Amplitudes of a qudit file, in the order given.
std::vector<Scalar> load_amplitudes(const std::string& path);

std::string mode_name(Mode mode);

nlohmann::json classify_report(const AltTensor& state, bool real, const std::string& source);
nlohmann::json pinning_report(const AltTensor& state);

// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trifermion::cli
