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

#include <cstdint>
#include <vector>

#include "trifermion/exterior.hpp"
#include "trifermion/invariants.hpp"
#include "trifermion/polynomial.hpp"

namespace trifermion {

// Every component of an antisymmetric tensor stored explicitly, index tuple
// (i1, ..., ik) at position sum (i_t - 1) * n^(k - t).
class FullTensor {
public:
    static constexpr int max_brute_dimension = 6;

    FullTensor(int n, int k, std::vector<Scalar> components, Variance variance = Variance::form);

    static FullTensor from_alt(const AltTensor& p);
    AltTensor to_alt() const;

    int dimension() const { return n_; }
    int degree() const { return k_; }
    Variance variance() const { return variance_; }
    const Scalar& at(const std::vector<int>& indices) const;

private:
    int n_;
    int k_;
    Variance variance_;
    std::vector<Scalar> components_;
};

// Literal contraction (1/m!) alpha^{i1..im} P_{i1..im j1..}.
FullTensor brute_interior(const FullTensor& alpha, const FullTensor& p);

// Literal (1/(k! l!)) sum over permutations of sgn * a * b.
FullTensor brute_wedge(const FullTensor& a, const FullTensor& b);

// Literal (1/k!) epsilon^{i1..i(n-k) j1..jk} R_{j1..jk}.
FullTensor brute_star(const FullTensor& r);

// Closed-form nine-mode invariants on a q1 + b q2 + c q3 + d q4.
const std::vector<Polynomial>& closed_form_polynomials();
NineJs closed_form_js(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& d);

// Deterministic samplers built on std::mt19937_64.
GroupElement random_unimodular(int n, std::uint64_t seed, Mode mode = Mode::exact);
GroupElement random_invertible(int n, std::uint64_t seed, Mode mode = Mode::exact);

// Integer coefficients drawn uniformly from [-range, range].
AltTensor random_state(int n, int k, std::uint64_t seed, int range = 3, Mode mode = Mode::exact);

// Random seven-mode state whose split into three-form and two-form is primitive.
AltTensor random_primitive_seven(std::uint64_t seed, int range = 3);

}  // namespace trifermion
