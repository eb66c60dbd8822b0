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

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trifermion/exterior.hpp"

namespace trifermion {

struct ClassLabel {
    static constexpr const char* unclassified = "Unclassified";

    int dimension = 0;
    std::string label = unclassified;
    // Rank tuple, in table column order, that justified the label.
    std::vector<std::pair<std::string, std::size_t>> signature;
    std::map<std::string, Scalar> invariants;
    // Dimension of the subspace the state was reduced to before lookup.
    int support_dimension = 0;
    std::string diagnostic;

    bool classified() const { return label != unclassified; }
};

ClassLabel classify6(const AltTensor& p, const TolerancePolicy& tol = {});
ClassLabel classify6_real(const AltTensor& p, const TolerancePolicy& tol = {});
ClassLabel classify7(const AltTensor& p, const TolerancePolicy& tol = {});
ClassLabel classify8(const AltTensor& p, const TolerancePolicy& tol = {});
ClassLabel classify9_family(const AltTensor& p, const TolerancePolicy& tol = {});

// Dispatch on the dimension; states on fewer than six modes are padded to six.
ClassLabel classify(const AltTensor& p, bool real = false, const TolerancePolicy& tol = {});

// Residual of every quadratic Pluecker relation, pairs of (k-1)- and (k+1)-subsets in colex order.
std::vector<Scalar> plucker_residuals(const AltTensor& p);
bool is_separable(const AltTensor& p, const TolerancePolicy& tol = {});

// Block form of the six-mode relations; all entries vanish exactly for separable states.
std::vector<Scalar> block_plucker_residuals(const AltTensor& p);

struct SupportReduction {
    int support_dimension = 0;
    GroupElement transform;  // maps the state onto the first support_dimension modes
    AltTensor reduced;       // the transformed state restricted to those modes
};

// Smallest coordinate subspace carrying the state after an exact change of basis.
SupportReduction reduce_support(const AltTensor& p, const TolerancePolicy& tol = {});

}  // namespace trifermion
