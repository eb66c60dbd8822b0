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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "trifermion/covariants.hpp"
#include "trifermion/exterior.hpp"
#include "trifermion/matrix.hpp"
#include "trifermion/polynomial.hpp"

namespace trifermion {

enum class QuarticRoute { trace, freudenthal_block, pairing };

// Quartic six-mode invariant, one sixth of the trace of the squared quadratic covariant.
Scalar quartic_d(const AltTensor& p, QuarticRoute route = QuarticRoute::trace);

// Four times the modulus of the quartic invariant of the normalized state.
double fermionic_tangle(const AltTensor& p);

// psi indexed as psi_{000}, psi_{001}, ..., psi_{111}.
Scalar cayley_hyperdeterminant(const std::vector<Scalar>& psi);
double three_tangle(const std::vector<Scalar>& psi);

Scalar seven_j(const AltTensor& p);
Scalar eight_i(const AltTensor& p);

struct NineJs {
    Scalar j12;
    Scalar j18;
    Scalar j24;
    Scalar j30;
};

NineJs nine_js(const AltTensor& p);
// Same invariants from an already computed cubic covariant of a nine-mode state.
NineJs nine_js(const ExtLinearMap& t);

struct NineDeltas {
    Scalar d132;
    Scalar d48;
    Scalar d48_prime;
    Scalar d24;
    // Set when the degree 132 combination was evaluated in floating point.
    bool low_confidence = false;
    // Sum of absolute term values of each combination, in the order above.
    std::array<double, 4> magnitudes{};
};

NineDeltas nine_deltas(const NineJs& js);

// Zero test for a combination evaluated from the four basic invariants.
bool delta_vanishes(const Scalar& value, double magnitude, const TolerancePolicy& tol = {});

// Degree 132, 48, 48 and 24 combinations as polynomials in J12, J18, J24, J30.
const std::vector<Polynomial>& delta_polynomials();

struct QutritInvariants {
    Scalar i6;
    Scalar i9;
    Scalar i12;
    Scalar hyperdeterminant;
    Scalar d36;
    Scalar d24;
    Scalar d21;
};

// Fundamental invariants on the normal form a|X1> - b|X2> + c|X3>.
QutritInvariants qutrit_normal_form_invariants(const Scalar& a, const Scalar& b, const Scalar& c);

// Normal form amplitudes, index 9*(m1-1) + 3*(m2-1) + (m3-1).
std::vector<Scalar> qutrit_normal_form(const Scalar& a, const Scalar& b, const Scalar& c);

struct QutritVerdicts {
    bool d36_nonzero = false;
    bool d24_nonzero = false;
    bool d21_nonzero = false;
    bool all_invariants_zero = false;
    int family = 0;
    NineJs js;
    NineDeltas deltas;
};

// Family data of a general three-qutrit state read off the invariants of its fermionic image.
QutritVerdicts qutrit_verdicts(const std::vector<Scalar>& psi, const TolerancePolicy& tol = {});

// Residuals of the qutrit/fermion invariant relations on a normal form; all vanish when they hold.
std::vector<Scalar> qutrit_relation_residuals(const Scalar& a, const Scalar& b, const Scalar& c);

struct JacobianResult {
    DenseMatrix matrix;  // row i: gradient of the i-th invariant with respect to (a, b, c, d)
    std::size_t rank = 0;
    Scalar determinant;
};

JacobianResult jacobian_rank(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);

// Factored closed form of the Jacobian determinant.
Scalar jacobian_determinant_closed_form(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);

struct InvariantSet {
    int dimension = 0;
    std::map<std::string, Scalar> values;
    std::map<std::string, int> degrees;
};

// Every scalar invariant defined for the dimension of p.
InvariantSet invariant_set(const AltTensor& p);
// As above, taking values already computed for p from known instead of recomputing them.
InvariantSet invariant_set(const AltTensor& p, const std::map<std::string, Scalar>& known);

// Zero test scaled by the homogeneous degree of the value in the amplitudes of p.
bool invariant_vanishes(const Scalar& value, int degree, double amplitude_scale, const TolerancePolicy& tol = {});

}  // namespace trifermion
