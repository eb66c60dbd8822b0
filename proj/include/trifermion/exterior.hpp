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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trifermion/matrix.hpp"
#include "trifermion/scalar.hpp"

namespace trifermion {

using Mask = std::uint32_t;

constexpr int max_dimension = 9;

class SubsetIndexer {
public:
    SubsetIndexer(int n, int k);

    int dimension() const { return n_; }
    int degree() const { return k_; }
    std::size_t size() const { return masks_.size(); }

    Mask mask(std::size_t rank) const { return masks_[rank]; }
    std::size_t rank(Mask mask) const;
    std::vector<int> tuple(std::size_t rank) const;
    std::size_t rank_of(const std::vector<int>& increasing) const;

private:
    int n_;
    int k_;
    std::vector<Mask> masks_;
    std::vector<std::int32_t> ranks_;
};

// Shared colexicographic enumeration of the k-subsets of {1..n}.
const SubsetIndexer& subsets(int n, int k);

Mask mask_of(const std::vector<int>& indices);
std::vector<int> indices_of(Mask mask);
int popcount(Mask mask);

// Sign of the shuffle that sorts the concatenation of two disjoint sorted blocks.
int merge_sign(Mask first, Mask second);

// Sign of the permutation sorting distinct values, 0 when a value repeats.
int permutation_sign(const std::vector<int>& values);

enum class Variance { form, vector };

class AltTensor {
public:
    AltTensor(int n, int k, Mode mode, Variance variance = Variance::form, int weight = 0);

    static AltTensor monomial(int n, const std::vector<int>& indices, const Scalar& coefficient,
                              Variance variance = Variance::form);

    int dimension() const { return n_; }
    int degree() const { return k_; }
    Mode mode() const { return mode_; }
    Variance variance() const { return variance_; }
    int weight() const { return weight_; }
    std::size_t size() const { return coefficients_.size(); }

    const std::vector<Scalar>& coefficients() const { return coefficients_; }
    const Scalar& coefficient(std::size_t rank) const { return coefficients_[rank]; }
    Scalar& coefficient(std::size_t rank) { return coefficients_[rank]; }
    const Scalar& at(Mask mask) const;
    Scalar& at(Mask mask);

    // Any ordering of distinct indices; the stored value is signed accordingly.
    Scalar get(const std::vector<int>& indices) const;
    void set(const std::vector<int>& indices, const Scalar& value);
    void add(const std::vector<int>& indices, const Scalar& value);

    bool is_zero() const;
    bool is_real() const;
    double max_abs() const;
    double norm_squared() const;
    std::size_t nonzero_count() const;
    std::vector<std::pair<std::vector<int>, Scalar>> terms() const;

    AltTensor as_mode(Mode mode) const;
    AltTensor conj() const;
    AltTensor with_weight(int weight) const;
    AltTensor with_variance(Variance variance) const;

    AltTensor operator-() const;
    AltTensor& operator+=(const AltTensor& o);
    AltTensor& operator-=(const AltTensor& o);
    AltTensor& operator*=(const Scalar& s);

    friend AltTensor operator+(AltTensor a, const AltTensor& b) { return a += b; }
    friend AltTensor operator-(AltTensor a, const AltTensor& b) { return a -= b; }
    friend AltTensor operator*(AltTensor a, const Scalar& s) { return a *= s; }
    friend AltTensor operator*(const Scalar& s, AltTensor a) { return a *= s; }

    bool operator==(const AltTensor& o) const;
    bool operator!=(const AltTensor& o) const { return !(*this == o); }

private:
    void require_compatible(const AltTensor& o) const;

    int n_;
    int k_;
    Mode mode_;
    Variance variance_;
    int weight_;
    std::vector<Scalar> coefficients_;
};

class GroupElement {
public:
    explicit GroupElement(const DenseMatrix& g);

    static GroupElement from_dual(const DenseMatrix& g_dual);
    static GroupElement identity(int n, Mode mode);

    int dimension() const { return static_cast<int>(g_.rows()); }
    Mode mode() const { return g_.mode(); }
    const DenseMatrix& matrix() const { return g_; }
    const DenseMatrix& dual() const { return dual_; }
    const Scalar& det() const { return det_; }
    Scalar dual_det() const { return det_.inverse(); }

    // (a * b) acts as b followed by a.
    friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

private:
    GroupElement(DenseMatrix g, DenseMatrix dual, Scalar det);

    DenseMatrix g_;
    DenseMatrix dual_;
    Scalar det_;
};

AltTensor wedge(const AltTensor& a, const AltTensor& b);

// Contraction of a form with a multivector of lower or equal degree.
AltTensor interior(const AltTensor& alpha, const AltTensor& p);

// Metric-free dual of a form into a multivector of complementary degree.
AltTensor star(const AltTensor& r);

// Natural pairing of a form with a multivector of equal degree.
Scalar natural_pairing(const AltTensor& form, const AltTensor& multivector);

// Antisymmetric pairing of two three-forms in six dimensions.
Scalar symplectic_pairing(const AltTensor& p, const AltTensor& q);

AltTensor slocc_apply(const GroupElement& g, const AltTensor& p);

// psi is indexed with the first subsystem most significant.
AltTensor embed_qudits(const std::vector<Scalar>& psi, int d, int k);

// Three qubits placed on the six-mode basis so that amplitudes land on
// (P123, P126, P153, P423, P456, P453, P426, P156) = (psi000, ..., psi011).
AltTensor embed_three_qubits(const std::vector<Scalar>& psi);

struct SevenSplit {
    AltTensor three_form;
    AltTensor two_form;
};

SevenSplit split_seven(const AltTensor& p);
AltTensor join_seven(const AltTensor& three_form, const AltTensor& two_form);
bool is_primitive(const AltTensor& three_form, const AltTensor& two_form, const TolerancePolicy& tol = {});

// Coefficient matrix (i, j) -> omega_ij of a two-form.
DenseMatrix two_form_matrix(const AltTensor& omega);

// Drops the trailing modes; every coefficient touching them must vanish.
AltTensor restrict_dimension(const AltTensor& p, int n);

// Embedding of a lower dimensional state into n modes using the first indices.
AltTensor extend_dimension(const AltTensor& p, int n);

}  // namespace trifermion
