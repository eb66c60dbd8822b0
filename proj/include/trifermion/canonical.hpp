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

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "trifermion/exterior.hpp"

namespace trifermion {

class ConstraintViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct FamilyConstraint {
    std::string description;
    mpq_class value;
};

// Labels accepted by canonical_state for a given dimension.
std::vector<std::string> canonical_labels(int dimension);

// Label classify(state, real) reports for canonical_state(dimension, label); eight-mode
// states supported on six modes carry the six-mode label, and the real GHZ classes
// merge into GHZ over the complex numbers.
std::string classified_label(int dimension, const std::string& label, bool real = false);

// Whether the label names a class of the real classification only.
bool is_real_label(const std::string& label);

// Number of parameters a nine-mode family label expects.
int family_parameter_count(int family);

// Exact constraint values for a family sample; the sample is valid when all are nonzero.
std::vector<FamilyConstraint> family_constraints(int family, const std::vector<mpq_class>& params);

AltTensor canonical_state(int dimension, const std::string& label, const std::vector<mpq_class>& params = {});

// The four nine-mode building blocks e123+e456+e789, e147+e258+e369, e159+e267+e348, e168+e249+e357.
AltTensor nine_block(int which);

// a*q1 + b*q2 + c*q3 + d*q4.
AltTensor semisimple_state(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& d);

// Eight-mode state with coefficients on e123, e567, e154, e264, e374, e278, e368.
AltTensor eight_mode_state(const std::vector<mpq_class>& coefficients);

// Coefficient pattern of an eight-mode class XI..XXIII.
std::vector<mpq_class> eight_class_coefficients(const std::string& label);

// Complex seven-mode basis: 1..3 holomorphic, 4..6 conjugate, 7 the extra mode.
AltTensor complex_seven_monomial(const std::vector<int>& slots);

}  // namespace trifermion
