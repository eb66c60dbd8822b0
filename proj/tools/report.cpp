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

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>

#include "cli.hpp"
#include "trifermion/classify.hpp"
#include "trifermion/invariants.hpp"
#include "trifermion/spectra.hpp"

namespace trifermion::cli {

namespace {

using nlohmann::json;

std::string decimal(double v)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
}

json scalar_json(const Scalar& s) { return s.to_string(); }

json invariants_json(const AltTensor& p, const std::map<std::string, Scalar>& known)
{
    const InvariantSet set = invariant_set(p, known);
    const bool exact = p.mode() == Mode::exact;
    std::optional<NineDeltas> deltas;
    if (p.dimension() == 9 && !exact) {
        deltas = nine_deltas(nine_js(p));
    }
    const std::map<std::string, std::size_t> delta_slot = {
        {"Delta132", 0}, {"Delta48", 1}, {"Delta48prime", 2}, {"Delta24", 3}};
    json out = json::object();
    for (const auto& [name, value] : set.values) {
        const int degree = set.degrees.at(name);
        json entry = {{"degree", degree}, {"value", scalar_json(value)}};
        if (exact) {
            entry["vanishes"] = value.is_zero();
        } else if (deltas && delta_slot.count(name)) {
            entry["vanishes"] = delta_vanishes(value, deltas->magnitudes[delta_slot.at(name)]);
        } else {
            entry["vanishes"] = invariant_vanishes(value, degree, p.max_abs());
        }
        out[name] = entry;
    }
    return out;
}

json class_json(const ClassLabel& c)
{
    json signature = json::object();
    for (const auto& [name, rank] : c.signature) {
        signature[name] = rank;
    }
    json data = json::object();
    for (const auto& [name, value] : c.invariants) {
        data[name] = scalar_json(value);
    }
    json out = {{"label", c.label},
                {"dimension", c.dimension},
                {"support_dimension", c.support_dimension},
                {"signature", signature},
                {"data", data}};
    if (!c.diagnostic.empty()) {
        out["diagnostic"] = c.diagnostic;
    }
    return out;
}

std::string ordering_name(Ordering o) { return o == Ordering::descending ? "descending" : "ascending"; }

}  // namespace

json pinning_report(const AltTensor& p)
{
    const PinningReport r = pinning_analysis(p);
    json eigen = json::array();
    for (double v : r.spectrum.eigenvalues) {
        eigen.push_back(decimal(v));
    }
    json spectrum = {{"ordering", ordering_name(r.spectrum.ordering)},
                     {"trace", decimal(r.spectrum.trace)},
                     {"eigenvalues", eigen}};
    if (r.spectrum.exact) {
        json exact = json::array();
        for (const auto& q : *r.spectrum.exact) {
            exact.push_back(q.get_str());
        }
        spectrum["exact"] = exact;
    }
    json constraints = json::array();
    for (const auto& c : r.klyachko.constraints) {
        json entry = {{"description", c.description}, {"slack", decimal(c.slack)}, {"saturated", c.saturated}};
        if (c.exact_slack) {
            entry["exact_slack"] = c.exact_slack->get_str();
        }
        constraints.push_back(entry);
    }
    json out = {{"spectrum", spectrum},
                {"constraints", constraints},
                {"saturated_count", r.klyachko.saturated_count()},
                {"support_patterns", r.support_patterns},
                {"natural_orbital_class", r.class_label.label},
                {"consistent", r.consistent}};
    if (!r.diagnostic.empty()) {
        out["diagnostic"] = r.diagnostic;
    }
    return out;
}

json classify_report(const AltTensor& p, bool real, const std::string& source)
{
    const ClassLabel label = classify(p, real);
    json report = {{"tool_version", tool_version},
                   {"arithmetic", mode_name(p.mode())},
                   {"input",
                    {{"source", source},
                     {"dimension", p.dimension()},
                     {"degree", p.degree()},
                     {"scalar_mode", mode_name(p.mode())},
                     {"terms", p.nonzero_count()},
                     {"real", real}}},
                   {"class", class_json(label)},
                   {"invariants", invariants_json(p, label.invariants)}};
    const double norm_squared = p.norm_squared();
    report["norm"] = decimal(std::sqrt(norm_squared));
    if (p.mode() == Mode::exact) {
        Scalar exact = Scalar::zero(Mode::exact);
        for (const auto& c : p.coefficients()) {
            exact.add_product(c, c.conj());
        }
        report["norm_squared"] = scalar_json(exact);
    } else {
        report["norm_squared"] = decimal(norm_squared);
    }
    if ((p.dimension() == 6 || p.dimension() == 7) && !p.is_zero()) {
        report["pinning"] = pinning_report(p);
    }
    return report;
}

}  // namespace trifermion::cli
