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

#include "trifermion/exterior.hpp"
#include "trifermion/matrix.hpp"

namespace trifermion {

struct ExtLinearMap {
    std::string name;
    int dimension = 0;
    // Exterior degrees of the composite row and column index spaces.
    std::vector<int> row_degrees;
    std::vector<int> col_degrees;
    int det_weight = 0;
    DenseMatrix matrix;
    // Polynomial degree of the entries in the state, and the largest state amplitude;
    // together they set the noise scale of floating-point rank decisions.
    int state_degree = 1;
    double amplitude = 1.0;

    std::size_t rank(const TolerancePolicy& tol = {}) const;
};

// alpha -> interior(alpha, p) for alpha of degree l; rows are (k-l)-subsets, columns l-subsets.
ExtLinearMap first_order_map(const AltTensor& p, int l);

// Degree n+1 covariant built from n contractions of p; columns run over tuples of subsets.
ExtLinearMap kappa_map(const AltTensor& p, const std::vector<int>& degrees);

// Traceless 6x6 matrix of the quadratic covariant, entry (a, b).
ExtLinearMap k_matrix_6(const AltTensor& p);

AltTensor dual_trivector(const AltTensor& p);
AltTensor freudenthal_dual(const AltTensor& p);

// Square root of an exact Gaussian rational when it has one, principal branch.
std::optional<Scalar> exact_sqrt(const Scalar& z);

struct SevenCovariants {
    ExtLinearMap M;  // row 7*A+B, column C: (M^A)^B_C
    ExtLinearMap N;
    ExtLinearMap L;
    ExtLinearMap B;
};

SevenCovariants seven_covariants(const AltTensor& p);

struct EightCovariants {
    ExtLinearMap F;   // row a, column 8*b1+b2
    ExtLinearMap E;   // row canonical triple, column b
    ExtLinearMap G;
    ExtLinearMap H;
    ExtLinearMap FE;  // row canonical pair (k,l), column i: sum over a,c of (F^a)_ci (E^ckl)_a
    ExtLinearMap FE_literal;  // row (a, canonical pair), column 8*i+j: sum over c of (F^a)_ci (E^ckl)_j
};

EightCovariants eight_covariants(const AltTensor& p);

// 84x84 matrix of the nine-mode cubic covariant on canonical triples.
ExtLinearMap t_map(const AltTensor& p);
Scalar t_power_trace(const AltTensor& p, int n);

}  // namespace trifermion
