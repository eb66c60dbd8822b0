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

#include "trifermion/exterior.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace trifermion {

namespace {

std::vector<std::vector<SubsetIndexer>> build_indexers()
{
    std::vector<std::vector<SubsetIndexer>> table;
    for (int n = 0; n <= max_dimension; ++n) {
        std::vector<SubsetIndexer> row;
        for (int k = 0; k <= n; ++k) {
            row.emplace_back(n, k);
        }
        table.push_back(std::move(row));
    }
    return table;
}

void check_index(int n, int index)
{
    if (index < 1 || index > n) {
        throw std::out_of_range("index " + std::to_string(index) + " outside 1.." + std::to_string(n));
    }
}

Mask full_mask(int n) { return (Mask{1} << n) - 1; }

Scalar det_power(const GroupElement& g, int weight)
{
    if (weight == 0) {
        return Scalar::one(g.mode());
    }
    if (weight > 0) {
        return g.dual_det().pow(static_cast<unsigned>(weight));
    }
    return g.det().pow(static_cast<unsigned>(-weight));
}

AltTensor transform_by_minors(const DenseMatrix& m, const AltTensor& p)
{
    const auto& idx = subsets(p.dimension(), p.degree());
    AltTensor out(p.dimension(), p.degree(), p.mode(), p.variance(), p.weight());
    for (std::size_t r = 0; r < idx.size(); ++r) {
        auto rows = idx.tuple(r);
        Scalar acc = Scalar::zero(p.mode());
        for (std::size_t c = 0; c < idx.size(); ++c) {
            if (p.coefficient(c).is_zero()) {
                continue;
            }
            auto cols = idx.tuple(c);
            DenseMatrix sub(rows.size(), cols.size(), p.mode());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                for (std::size_t j = 0; j < cols.size(); ++j) {
                    sub(i, j) = m(static_cast<std::size_t>(rows[i] - 1), static_cast<std::size_t>(cols[j] - 1));
                }
            }
            acc.add_product(determinant(sub), p.coefficient(c));
        }
        out.coefficient(r) = acc;
    }
    return out;
}

AltTensor transform_by_passes(const DenseMatrix& m, const AltTensor& p)
{
    int n = p.dimension();
    int k = p.degree();
    std::size_t total = 1;
    for (int t = 0; t < k; ++t) {
        total *= static_cast<std::size_t>(n);
    }
    std::vector<Scalar> full(total, Scalar::zero(p.mode()));
    std::vector<int> digits(static_cast<std::size_t>(k));
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (int t = k - 1; t >= 0; --t) {
            digits[static_cast<std::size_t>(t)] = static_cast<int>(rest % static_cast<std::size_t>(n)) + 1;
            rest /= static_cast<std::size_t>(n);
        }
        full[flat] = p.get(digits);
    }
    std::size_t stride = total;
    for (int t = 0; t < k; ++t) {
        stride /= static_cast<std::size_t>(n);
        std::vector<Scalar> next(total, Scalar::zero(p.mode()));
        for (std::size_t flat = 0; flat < total; ++flat) {
            if (full[flat].is_zero()) {
                continue;
            }
            std::size_t a = (flat / stride) % static_cast<std::size_t>(n);
            std::size_t base = flat - a * stride;
            for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
                const Scalar& coefficient = m(i, a);
                if (!coefficient.is_zero()) {
                    next[base + i * stride].add_product(coefficient, full[flat]);
                }
            }
        }
        full.swap(next);
    }
    AltTensor out(n, k, p.mode(), p.variance(), p.weight());
    const auto& idx = subsets(n, k);
    for (std::size_t r = 0; r < idx.size(); ++r) {
        auto tuple = idx.tuple(r);
        std::size_t flat = 0;
        for (int v : tuple) {
            flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(v - 1);
        }
        out.coefficient(r) = full[flat];
    }
    return out;
}

}  // namespace

SubsetIndexer::SubsetIndexer(int n, int k) : n_(n), k_(k), ranks_(std::size_t{1} << n, -1)
{
    if (n < 0 || n > max_dimension || k < 0 || k > n) {
        throw std::out_of_range("subset enumeration out of range");
    }
    for (Mask m = 0; m <= full_mask(n); ++m) {
        if (std::popcount(m) == k) {
            ranks_[m] = static_cast<std::int32_t>(masks_.size());
            masks_.push_back(m);
        }
    }
}

std::size_t SubsetIndexer::rank(Mask mask) const
{
    if (mask >= ranks_.size() || ranks_[mask] < 0) {
        throw std::out_of_range("subset does not belong to this enumeration");
    }
    return static_cast<std::size_t>(ranks_[mask]);
}

std::vector<int> SubsetIndexer::tuple(std::size_t rank) const { return indices_of(masks_.at(rank)); }

std::size_t SubsetIndexer::rank_of(const std::vector<int>& increasing) const
{
    for (std::size_t i = 1; i < increasing.size(); ++i) {
        if (increasing[i] <= increasing[i - 1]) {
            throw std::invalid_argument("indices must be strictly increasing");
        }
    }
    return rank(mask_of(increasing));
}

const SubsetIndexer& subsets(int n, int k)
{
    static const std::vector<std::vector<SubsetIndexer>> table = build_indexers();
    if (n < 0 || n > max_dimension || k < 0 || k > n) {
        throw std::out_of_range("subset enumeration out of range");
    }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Mask mask_of(const std::vector<int>& indices)
{
    Mask m = 0;
    for (int i : indices) {
        if (i < 1 || i > max_dimension) {
            throw std::out_of_range("index out of range");
        }
        Mask bit = Mask{1} << (i - 1);
        if (m & bit) {
            throw std::invalid_argument("repeated index " + std::to_string(i));
        }
        m |= bit;
    }
    return m;
}

std::vector<int> indices_of(Mask mask)
{
    std::vector<int> out;
    for (int i = 0; mask != 0; ++i, mask >>= 1) {
        if (mask & 1u) {
            out.push_back(i + 1);
        }
    }
    return out;
}

int popcount(Mask mask) { return std::popcount(mask); }

int merge_sign(Mask first, Mask second)
{
    int count = 0;
    while (second != 0) {
        int j = std::countr_zero(second);
        second &= second - 1;
        count += std::popcount(first >> (j + 1));
    }
    return (count & 1) ? -1 : 1;
}

int permutation_sign(const std::vector<int>& values)
{
    int count = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (values[i] == values[j]) {
                return 0;
            }
            if (values[i] > values[j]) {
                ++count;
            }
        }
    }
    return (count & 1) ? -1 : 1;
}

AltTensor::AltTensor(int n, int k, Mode mode, Variance variance, int weight)
    : n_(n), k_(k), mode_(mode), variance_(variance), weight_(weight),
      coefficients_(subsets(n, k).size(), Scalar::zero(mode))
{
}

AltTensor AltTensor::monomial(int n, const std::vector<int>& indices, const Scalar& coefficient, Variance variance)
{
    AltTensor t(n, static_cast<int>(indices.size()), coefficient.mode(), variance);
    t.set(indices, coefficient);
    return t;
}

const Scalar& AltTensor::at(Mask mask) const { return coefficients_[subsets(n_, k_).rank(mask)]; }

Scalar& AltTensor::at(Mask mask) { return coefficients_[subsets(n_, k_).rank(mask)]; }

Scalar AltTensor::get(const std::vector<int>& indices) const
{
    if (static_cast<int>(indices.size()) != k_) {
        throw std::invalid_argument("wrong number of indices");
    }
    for (int i : indices) {
        check_index(n_, i);
    }
    int sign = permutation_sign(indices);
    if (sign == 0) {
        return Scalar::zero(mode_);
    }
    const Scalar& v = at(mask_of(indices));
    return sign > 0 ? v : -v;
}

void AltTensor::set(const std::vector<int>& indices, const Scalar& value)
{
    if (static_cast<int>(indices.size()) != k_) {
        throw std::invalid_argument("wrong number of indices");
    }
    if (value.mode() != mode_) {
        throw ModeMismatch();
    }
    for (int i : indices) {
        check_index(n_, i);
    }
    int sign = permutation_sign(indices);
    if (sign == 0) {
        throw std::invalid_argument("repeated index");
    }
    at(mask_of(indices)) = sign > 0 ? value : -value;
}

void AltTensor::add(const std::vector<int>& indices, const Scalar& value)
{
    if (static_cast<int>(indices.size()) != k_) {
        throw std::invalid_argument("wrong number of indices");
    }
    for (int i : indices) {
        check_index(n_, i);
    }
    int sign = permutation_sign(indices);
    if (sign == 0) {
        throw std::invalid_argument("repeated index");
    }
    if (sign > 0) {
        at(mask_of(indices)) += value;
    } else {
        at(mask_of(indices)) -= value;
    }
}

bool AltTensor::is_zero() const
{
    return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool AltTensor::is_real() const
{
    return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Scalar& s) { return s.is_real(); });
}

double AltTensor::max_abs() const
{
    double m = 0.0;
    for (const auto& c : coefficients_) {
        m = std::max(m, c.abs());
    }
    return m;
}

double AltTensor::norm_squared() const
{
    double s = 0.0;
    for (const auto& c : coefficients_) {
        s += std::norm(c.to_complex());
    }
    return s;
}

std::size_t AltTensor::nonzero_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coefficients_.begin(), coefficients_.end(), [](const Scalar& s) { return !s.is_zero(); }));
}

std::vector<std::pair<std::vector<int>, Scalar>> AltTensor::terms() const
{
    std::vector<std::pair<std::vector<int>, Scalar>> out;
    const auto& idx = subsets(n_, k_);
    for (std::size_t r = 0; r < coefficients_.size(); ++r) {
        if (!coefficients_[r].is_zero()) {
            out.emplace_back(idx.tuple(r), coefficients_[r]);
        }
    }
    return out;
}

AltTensor AltTensor::as_mode(Mode mode) const
{
    AltTensor t(n_, k_, mode, variance_, weight_);
    for (std::size_t r = 0; r < coefficients_.size(); ++r) {
        t.coefficients_[r] = coefficients_[r].as_mode(mode);
    }
    return t;
}

AltTensor AltTensor::conj() const
{
    AltTensor t = *this;
    for (auto& c : t.coefficients_) {
        c = c.conj();
    }
    return t;
}

AltTensor AltTensor::with_weight(int weight) const
{
    AltTensor t = *this;
    t.weight_ = weight;
    return t;
}

AltTensor AltTensor::with_variance(Variance variance) const
{
    AltTensor t = *this;
    t.variance_ = variance;
    return t;
}

AltTensor AltTensor::operator-() const
{
    AltTensor t = *this;
    for (auto& c : t.coefficients_) {
        c = -c;
    }
    return t;
}

void AltTensor::require_compatible(const AltTensor& o) const
{
    if (n_ != o.n_ || k_ != o.k_) {
        throw std::invalid_argument("tensor shape mismatch");
    }
    if (mode_ != o.mode_) {
        throw ModeMismatch();
    }
    if (variance_ != o.variance_ || weight_ != o.weight_) {
        throw std::invalid_argument("tensor type mismatch");
    }
}

AltTensor& AltTensor::operator+=(const AltTensor& o)
{
    require_compatible(o);
    for (std::size_t r = 0; r < coefficients_.size(); ++r) {
        coefficients_[r] += o.coefficients_[r];
    }
    return *this;
}

AltTensor& AltTensor::operator-=(const AltTensor& o)
{
    require_compatible(o);
    for (std::size_t r = 0; r < coefficients_.size(); ++r) {
        coefficients_[r] -= o.coefficients_[r];
    }
    return *this;
}

AltTensor& AltTensor::operator*=(const Scalar& s)
{
    for (auto& c : coefficients_) {
        c *= s;
    }
    return *this;
}

bool AltTensor::operator==(const AltTensor& o) const
{
    if (n_ != o.n_ || k_ != o.k_ || mode_ != o.mode_ || variance_ != o.variance_ || weight_ != o.weight_) {
        return false;
    }
    return coefficients_ == o.coefficients_;
}

GroupElement::GroupElement(const DenseMatrix& g) : g_(g)
{
    if (!g.is_square()) {
        throw std::invalid_argument("group element must be square");
    }
    det_ = determinant(g);
    if (g.mode() == Mode::exact ? det_.is_zero() : det_.abs() <= 1e-300) {
        throw std::domain_error("group element is singular");
    }
    dual_ = inverse(g).transpose();
}

GroupElement::GroupElement(DenseMatrix g, DenseMatrix dual, Scalar det)
    : g_(std::move(g)), dual_(std::move(dual)), det_(std::move(det))
{
}

GroupElement GroupElement::from_dual(const DenseMatrix& g_dual)
{
    return GroupElement(inverse(g_dual).transpose());
}

GroupElement GroupElement::identity(int n, Mode mode)
{
    auto id = DenseMatrix::identity(static_cast<std::size_t>(n), mode);
    return GroupElement(id, id, Scalar::one(mode));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b)
{
    return GroupElement(a.g_ * b.g_, a.dual_ * b.dual_, a.det_ * b.det_);
}

AltTensor wedge(const AltTensor& a, const AltTensor& b)
{
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("wedge of tensors over different spaces");
    }
    if (a.variance() != b.variance()) {
        throw std::invalid_argument("wedge of a form with a multivector");
    }
    if (a.mode() != b.mode()) {
        throw ModeMismatch();
    }
    int n = a.dimension();
    if (a.degree() + b.degree() > n) {
        throw std::invalid_argument("wedge degree exceeds dimension");
    }
    AltTensor out(n, a.degree() + b.degree(), a.mode(), a.variance(), a.weight() + b.weight());
    const auto& ia = subsets(n, a.degree());
    const auto& ib = subsets(n, b.degree());
    for (std::size_t r = 0; r < ia.size(); ++r) {
        const Scalar& x = a.coefficient(r);
        if (x.is_zero()) {
            continue;
        }
        Mask ma = ia.mask(r);
        for (std::size_t s = 0; s < ib.size(); ++s) {
            Mask mb = ib.mask(s);
            const Scalar& y = b.coefficient(s);
            if ((ma & mb) != 0 || y.is_zero()) {
                continue;
            }
            if (merge_sign(ma, mb) > 0) {
                out.at(ma | mb).add_product(x, y);
            } else {
                out.at(ma | mb).add_product(-x, y);
            }
        }
    }
    return out;
}

AltTensor interior(const AltTensor& alpha, const AltTensor& p)
{
    if (alpha.dimension() != p.dimension()) {
        throw std::invalid_argument("interior product over different spaces");
    }
    if (alpha.variance() == p.variance()) {
        throw std::invalid_argument("interior product needs a multivector and a form");
    }
    if (alpha.degree() > p.degree()) {
        throw std::invalid_argument("interior product degree exceeds form degree");
    }
    if (alpha.mode() != p.mode()) {
        throw ModeMismatch();
    }
    int n = p.dimension();
    int rest = p.degree() - alpha.degree();
    AltTensor out(n, rest, p.mode(), p.variance(), alpha.weight() + p.weight());
    const auto& ia = subsets(n, alpha.degree());
    const auto& ij = subsets(n, rest);
    for (std::size_t r = 0; r < ia.size(); ++r) {
        const Scalar& x = alpha.coefficient(r);
        if (x.is_zero()) {
            continue;
        }
        Mask mb = ia.mask(r);
        for (std::size_t s = 0; s < ij.size(); ++s) {
            Mask mj = ij.mask(s);
            if ((mb & mj) != 0) {
                continue;
            }
            const Scalar& y = p.at(mb | mj);
            if (y.is_zero()) {
                continue;
            }
            if (merge_sign(mb, mj) > 0) {
                out.coefficient(s).add_product(x, y);
            } else {
                out.coefficient(s).add_product(-x, y);
            }
        }
    }
    return out;
}

AltTensor star(const AltTensor& r)
{
    int n = r.dimension();
    bool form = r.variance() == Variance::form;
    AltTensor out(n, n - r.degree(), r.mode(), form ? Variance::vector : Variance::form,
                  r.weight() + (form ? 1 : -1));
    const auto& idx = subsets(n, n - r.degree());
    Mask all = full_mask(n);
    for (std::size_t s = 0; s < idx.size(); ++s) {
        Mask mi = idx.mask(s);
        Mask mj = all & ~mi;
        const Scalar& v = r.at(mj);
        out.coefficient(s) = merge_sign(mi, mj) > 0 ? v : -v;
    }
    return out;
}

Scalar natural_pairing(const AltTensor& form, const AltTensor& multivector)
{
    if (form.dimension() != multivector.dimension() || form.degree() != multivector.degree()) {
        throw std::invalid_argument("pairing of tensors with different shapes");
    }
    if (form.variance() != Variance::form || multivector.variance() != Variance::vector) {
        throw std::invalid_argument("pairing needs a form and a multivector");
    }
    Scalar total = Scalar::zero(form.mode());
    for (std::size_t r = 0; r < form.size(); ++r) {
        total.add_product(form.coefficient(r), multivector.coefficient(r));
    }
    return total;
}

Scalar symplectic_pairing(const AltTensor& p, const AltTensor& q)
{
    if (p.dimension() != 6 || q.dimension() != 6 || p.degree() != 3 || q.degree() != 3) {
        throw std::invalid_argument("symplectic pairing needs two three-forms in six dimensions");
    }
    if (p.mode() != q.mode()) {
        throw ModeMismatch();
    }
    const auto& idx = subsets(6, 3);
    Mask all = full_mask(6);
    Scalar total = Scalar::zero(p.mode());
    for (std::size_t r = 0; r < idx.size(); ++r) {
        Mask mi = idx.mask(r);
        Mask mj = all & ~mi;
        const Scalar& x = p.coefficient(r);
        const Scalar& y = q.at(mj);
        if (x.is_zero() || y.is_zero()) {
            continue;
        }
        if (merge_sign(mi, mj) > 0) {
            total.add_product(x, y);
        } else {
            total.add_product(-x, y);
        }
    }
    return total;
}

AltTensor slocc_apply(const GroupElement& g, const AltTensor& p)
{
    if (g.dimension() != p.dimension()) {
        throw std::invalid_argument("group element and tensor dimensions differ");
    }
    if (g.mode() != p.mode()) {
        throw ModeMismatch();
    }
    const DenseMatrix& m = p.variance() == Variance::form ? g.dual() : g.matrix();
    double cost = static_cast<double>(p.degree());
    for (int t = 0; t <= p.degree(); ++t) {
        cost *= p.dimension();
    }
    AltTensor out = cost <= 4.0e5 ? transform_by_passes(m, p) : transform_by_minors(m, p);
    if (p.weight() != 0) {
        out *= det_power(g, p.weight());
    }
    return out;
}

AltTensor embed_qudits(const std::vector<Scalar>& psi, int d, int k)
{
    if (d < 1 || k < 1 || d * k > max_dimension) {
        throw std::invalid_argument("qudit embedding needs d*k <= 9");
    }
    std::size_t count = 1;
    for (int t = 0; t < k; ++t) {
        count *= static_cast<std::size_t>(d);
    }
    if (psi.size() != count) {
        throw std::invalid_argument("expected " + std::to_string(count) + " amplitudes");
    }
    Mode mode = psi.front().mode();
    AltTensor out(d * k, k, mode);
    std::vector<int> indices(static_cast<std::size_t>(k));
    for (std::size_t flat = 0; flat < count; ++flat) {
        std::size_t rest = flat;
        for (int t = k - 1; t >= 0; --t) {
            indices[static_cast<std::size_t>(t)] = static_cast<int>(rest % static_cast<std::size_t>(d)) + t * d + 1;
            rest /= static_cast<std::size_t>(d);
        }
        out.set(indices, psi[flat]);
    }
    return out;
}

AltTensor embed_three_qubits(const std::vector<Scalar>& psi)
{
    if (psi.size() != 8) {
        throw std::invalid_argument("expected 8 amplitudes");
    }
    static const std::vector<std::vector<int>> slots = {
        {1, 2, 3}, {1, 2, 6}, {1, 5, 3}, {1, 5, 6}, {4, 2, 3}, {4, 2, 6}, {4, 5, 3}, {4, 5, 6},
    };
    AltTensor out(6, 3, psi.front().mode());
    for (std::size_t i = 0; i < 8; ++i) {
        out.set(slots[i], psi[i]);
    }
    return out;
}

SevenSplit split_seven(const AltTensor& p)
{
    if (p.dimension() != 7 || p.degree() != 3) {
        throw std::invalid_argument("split needs a three-form in seven dimensions");
    }
    SevenSplit s{AltTensor(6, 3, p.mode()), AltTensor(6, 2, p.mode())};
    for (const auto& [idx, value] : p.terms()) {
        if (idx[2] == 7) {
            s.two_form.set({idx[0], idx[1]}, value);
        } else {
            s.three_form.set(idx, value);
        }
    }
    return s;
}

AltTensor join_seven(const AltTensor& three_form, const AltTensor& two_form)
{
    if (three_form.dimension() != 6 || three_form.degree() != 3 || two_form.dimension() != 6 ||
        two_form.degree() != 2) {
        throw std::invalid_argument("join needs a three-form and a two-form in six dimensions");
    }
    AltTensor p(7, 3, three_form.mode());
    for (const auto& [idx, value] : three_form.terms()) {
        p.set(idx, value);
    }
    for (const auto& [idx, value] : two_form.terms()) {
        p.set({idx[0], idx[1], 7}, value);
    }
    return p;
}

bool is_primitive(const AltTensor& three_form, const AltTensor& two_form, const TolerancePolicy& tol)
{
    AltTensor five = wedge(three_form, two_form);
    if (five.mode() == Mode::exact) {
        return five.is_zero();
    }
    double scale = three_form.max_abs() * two_form.max_abs();
    return std::all_of(five.coefficients().begin(), five.coefficients().end(),
                       [&](const Scalar& s) { return approx_zero(s, scale, tol); });
}

DenseMatrix two_form_matrix(const AltTensor& omega)
{
    if (omega.degree() != 2) {
        throw std::invalid_argument("expected a two-form");
    }
    auto n = static_cast<std::size_t>(omega.dimension());
    DenseMatrix m(n, n, omega.mode());
    for (const auto& [idx, value] : omega.terms()) {
        auto i = static_cast<std::size_t>(idx[0] - 1);
        auto j = static_cast<std::size_t>(idx[1] - 1);
        m(i, j) = value;
        m(j, i) = -value;
    }
    return m;
}

AltTensor restrict_dimension(const AltTensor& p, int n)
{
    AltTensor out(n, p.degree(), p.mode(), p.variance(), p.weight());
    for (const auto& [idx, value] : p.terms()) {
        if (idx.back() > n) {
            throw std::invalid_argument("tensor has support outside the first " + std::to_string(n) + " modes");
        }
        out.set(idx, value);
    }
    return out;
}

AltTensor extend_dimension(const AltTensor& p, int n)
{
    if (n < p.dimension()) {
        throw std::invalid_argument("cannot extend to a smaller dimension");
    }
    AltTensor out(n, p.degree(), p.mode(), p.variance(), p.weight());
    for (const auto& [idx, value] : p.terms()) {
        out.set(idx, value);
    }
    return out;
}

}  // namespace trifermion
