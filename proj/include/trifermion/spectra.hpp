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

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "trifermion/classify.hpp"
#include "trifermion/exterior.hpp"
#include "trifermion/matrix.hpp"

namespace trifermion {

enum class Ordering { ascending, descending };

struct OccupationSpectrum {
    int dimension = 0;
    Ordering ordering = Ordering::descending;
    double trace = 3.0;
    std::vector<double> eigenvalues;
    // Present when the one-matrix is exactly diagonal.
    std::optional<std::vector<mpq_class>> exact;

    OccupationSpectrum sorted(Ordering order) const;
};

struct KlyachkoConstraint {
    std::string description;
    double slack = 0.0;
    std::optional<mpq_class> exact_slack;
    bool saturated = false;
};

struct KlyachkoReport {
    int dimension = 0;
    Ordering ordering = Ordering::descending;
    std::vector<KlyachkoConstraint> constraints;

    std::size_t saturated_count() const;
};

// Hermitian one-particle reduced density matrix normalized to trace 3.
DenseMatrix one_matrix(const AltTensor& p);

OccupationSpectrum occupation_spectrum(const AltTensor& p, Ordering order = Ordering::descending);

// Six modes: lambda5 + lambda6 - lambda4. Seven modes: the four slacks 2 - (sum of four occupations).
KlyachkoReport klyachko_check(const OccupationSpectrum& spectrum, Ordering order = Ordering::descending,
                              double saturation_tolerance = 1e-9);

struct PinningReport {
    OccupationSpectrum spectrum;
    KlyachkoReport klyachko;
    GroupElement rotation;
    AltTensor natural_orbital_state;
    std::vector<std::string> support_patterns;
    ClassLabel class_label;
    bool consistent = true;
    std::string diagnostic;
};

// Support patterns the natural-orbital state is checked against.
inline constexpr const char* borland_dennis_form = "e123+e145+e246";
inline constexpr const char* pair_times_triple_form = "wedge2(1,2,4,7)*(3,5,6)";
inline constexpr const char* triple_pinned_form = "e123+e145+e167+e246";

PinningReport pinning_analysis(const AltTensor& p, const TolerancePolicy& tol = {});

}  // namespace trifermion
