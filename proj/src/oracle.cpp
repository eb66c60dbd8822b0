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

#include "trifermion/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace trifermion {

namespace {

#include "closed_form_js.inc"

std::size_t power(int n, int k)
{
    std::size_t out = 1;
    for (int i = 0; i < k; ++i) {
        out *= static_cast<std::size_t>(n);
    }
    return out;
}

std::vector<int> unflatten(std::size_t pos, int n, int k)
{
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int t = k - 1; t >= 0; --t) {
        idx[static_cast<std::size_t>(t)] = static_cast<int>(pos % static_cast<std::size_t>(n)) + 1;
        pos /= static_cast<std::size_t>(n);
    }
    return idx;
}

std::size_t flatten(const std::vector<int>& idx, int n)
{
    std::size_t pos = 0;
    for (int i : idx) {
        pos = pos * static_cast<std::size_t>(n) + static_cast<std::size_t>(i - 1);
    }
    return pos;
}

long factorial(int k)
{
    long f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

Scalar inverse_factorial(int k, Mode mode)
{
    if (mode == Mode::exact) {
        return Scalar(mpq_class(1, factorial(k)));
    }
    return Scalar(std::complex<double>(1.0 / static_cast<double>(factorial(k)), 0.0));
}

void require_brute(int n)
{
    if (n > FullTensor::max_brute_dimension) {
        throw std::invalid_argument("brute-force tensors are limited to six dimensions");
    }
}

Mode mode_of(const std::vector<Scalar>& v) { return v.empty() ? Mode::exact : v.front().mode(); }

Scalar integer(long v, Mode mode) { return Scalar(v, mode); }

}  // namespace

FullTensor::FullTensor(int n, int k, std::vector<Scalar> components, Variance variance)
    : n_(n), k_(k), variance_(variance), components_(std::move(components))
{
    require_brute(n);
    if (components_.size() != power(n, k)) {
        throw std::invalid_argument("component count must be n^k");
    }
    for (std::size_t pos = 0; pos < components_.size(); ++pos) {
        auto idx = unflatten(pos, n, k);
        for (int t = 0; t + 1 < k; ++t) {
            auto swapped = idx;
            std::swap(swapped[static_cast<std::size_t>(t)], swapped[static_cast<std::size_t>(t + 1)]);
            if (components_[flatten(swapped, n)] != -components_[pos]) {
                throw std::invalid_argument("components are not antisymmetric");
            }
        }
    }
}

FullTensor FullTensor::from_alt(const AltTensor& p)
{
    const int n = p.dimension();
    const int k = p.degree();
    require_brute(n);
    std::vector<Scalar> comps(power(n, k), Scalar::zero(p.mode()));
    for (std::size_t pos = 0; pos < comps.size(); ++pos) {
        auto idx = unflatten(pos, n, k);
        if (permutation_sign(idx) != 0) {
            comps[pos] = p.get(idx);
        }
    }
    return FullTensor(n, k, std::move(comps), p.variance());
}

AltTensor FullTensor::to_alt() const
{
    const Mode mode = mode_of(components_);
    AltTensor out(n_, k_, mode, variance_);
    const auto& idx = subsets(n_, k_);
    for (std::size_t r = 0; r < idx.size(); ++r) {
        out.coefficient(r) = at(idx.tuple(r));
    }
    return out;
}

const Scalar& FullTensor::at(const std::vector<int>& indices) const { return components_.at(flatten(indices, n_)); }

FullTensor brute_interior(const FullTensor& alpha, const FullTensor& p)
{
    const int n = p.dimension();
    const int m = alpha.degree();
    const int rest = p.degree() - m;
    if (alpha.dimension() != n || rest < 0 || alpha.variance() == p.variance()) {
        throw std::invalid_argument("brute interior needs a multivector and a form of higher degree");
    }
    const Mode mode = mode_of({p.at(std::vector<int>(static_cast<std::size_t>(p.degree()), 1))});
    std::vector<Scalar> out(power(n, rest), Scalar::zero(mode));
    const std::size_t inner = power(n, m);
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
        auto j = unflatten(pos, n, rest);
        Scalar acc = Scalar::zero(mode);
        for (std::size_t ipos = 0; ipos < inner; ++ipos) {
            auto i = unflatten(ipos, n, m);
            std::vector<int> full = i;
            full.insert(full.end(), j.begin(), j.end());
            acc += alpha.at(i) * p.at(full);
        }
        out[pos] = acc * inverse_factorial(m, mode);
    }
    return FullTensor(n, rest, std::move(out), p.variance());
}

FullTensor brute_wedge(const FullTensor& a, const FullTensor& b)
{
    const int n = a.dimension();
    const int k = a.degree();
    const int l = b.degree();
    if (b.dimension() != n || a.variance() != b.variance()) {
        throw std::invalid_argument("brute wedge needs tensors of the same kind");
    }
    const Mode mode = mode_of({a.at(std::vector<int>(static_cast<std::size_t>(k), 1))});
    std::vector<Scalar> out(power(n, k + l), Scalar::zero(mode));
    std::vector<int> perm(static_cast<std::size_t>(k + l));
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
        auto idx = unflatten(pos, n, k + l);
        if (permutation_sign(idx) == 0 || !std::is_sorted(idx.begin(), idx.end())) {
            continue;
        }
        std::iota(perm.begin(), perm.end(), 0);
        Scalar acc = Scalar::zero(mode);
        std::vector<int> first(static_cast<std::size_t>(k));
        std::vector<int> second(static_cast<std::size_t>(l));
        do {
            for (int t = 0; t < k + l; ++t) {
                const int v = idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])];
                if (t < k) {
                    first[static_cast<std::size_t>(t)] = v;
                } else {
                    second[static_cast<std::size_t>(t - k)] = v;
                }
            }
            Scalar term = a.at(first) * b.at(second);
            if (permutation_sign(perm) < 0) {
                acc -= term;
            } else {
                acc += term;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        out[pos] = acc * inverse_factorial(k, mode) * inverse_factorial(l, mode);
    }
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
        auto idx = unflatten(pos, n, k + l);
        const int sign = permutation_sign(idx);
        if (sign == 0 || std::is_sorted(idx.begin(), idx.end())) {
            continue;
        }
        auto sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        out[pos] = sign > 0 ? out[flatten(sorted, n)] : -out[flatten(sorted, n)];
    }
    return FullTensor(n, k + l, std::move(out), a.variance());
}

FullTensor brute_star(const FullTensor& r)
{
    const int n = r.dimension();
    const int k = r.degree();
    const Mode mode = mode_of({r.at(std::vector<int>(static_cast<std::size_t>(k), 1))});
    std::vector<Scalar> out(power(n, n - k), Scalar::zero(mode));
    const std::size_t inner = power(n, k);
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
        auto i = unflatten(pos, n, n - k);
        Scalar acc = Scalar::zero(mode);
        for (std::size_t jpos = 0; jpos < inner; ++jpos) {
            auto j = unflatten(jpos, n, k);
            std::vector<int> full = i;
            full.insert(full.end(), j.begin(), j.end());
            int eps = permutation_sign(full);
            if (eps > 0) {
                acc += r.at(j);
            } else if (eps < 0) {
                acc -= r.at(j);
            }
        }
        out[pos] = acc * inverse_factorial(k, mode);
    }
    return FullTensor(n, n - k, std::move(out),
                      r.variance() == Variance::form ? Variance::vector : Variance::form);
}

const std::vector<Polynomial>& closed_form_polynomials()
{
    static const std::vector<Polynomial> polys = [] {
        const std::vector<std::string> vars = {"a", "b", "c", "d"};
        return std::vector<Polynomial>{Polynomial::parse(j12_text, vars), Polynomial::parse(j18_text, vars),
                                       Polynomial::parse(j24_text, vars), Polynomial::parse(j30_text, vars)};
    }();
    return polys;
}

NineJs closed_form_js(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& d)
{
    const auto& polys = closed_form_polynomials();
    const std::vector<mpq_class> args = {a, b, c, d};
    return {Scalar(polys[0].evaluate(args)), Scalar(polys[1].evaluate(args)), Scalar(polys[2].evaluate(args)),
            Scalar(polys[3].evaluate(args))};
}

GroupElement random_unimodular(int n, std::uint64_t seed, Mode mode)
{
    std::mt19937_64 rng(seed);
    DenseMatrix g = DenseMatrix::identity(static_cast<std::size_t>(n), mode);
    for (int step = 0; step < 2 * n; ++step) {
        const std::size_t i = rng() % static_cast<std::size_t>(n);
        std::size_t j = rng() % static_cast<std::size_t>(n - 1);
        if (j >= i) {
            ++j;
        }
        long c = static_cast<long>(rng() % 4) - 2;
        if (c >= 0) {
            ++c;
        }
        // Row operation: row i += c * row j.
        for (std::size_t col = 0; col < static_cast<std::size_t>(n); ++col) {
            g(i, col) += integer(c, mode) * g(j, col);
        }
    }
    return GroupElement(g);
}

GroupElement random_invertible(int n, std::uint64_t seed, Mode mode)
{
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    DenseMatrix diag = DenseMatrix::identity(static_cast<std::size_t>(n), mode);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        long v = static_cast<long>(rng() % 3) + 1;
        if (rng() % 2) {
            v = -v;
        }
        diag(i, i) = integer(v, mode);
    }
    return random_unimodular(n, seed, mode) * GroupElement(diag);
}

AltTensor random_state(int n, int k, std::uint64_t seed, int range, Mode mode)
{
    std::mt19937_64 rng(seed);
    AltTensor p(n, k, mode);
    const auto width = static_cast<std::uint64_t>(2 * range + 1);
    for (std::size_t r = 0; r < p.size(); ++r) {
        p.coefficient(r) = integer(static_cast<long>(rng() % width) - range, mode);
    }
    return p;
}

AltTensor random_primitive_seven(std::uint64_t seed, int range)
{
    for (std::uint64_t attempt = 0;; ++attempt) {
        const std::uint64_t s = seed * 1000003ULL + attempt;
        AltTensor p = random_state(6, 3, s, range);
        AltTensor omega = random_state(6, 2, s ^ 0x5bd1e995ULL, range);
        if (pfaffian(two_form_matrix(omega)).is_zero()) {
            continue;
        }
        // Remove the part omega ^ beta so that the remainder wedges to zero with omega.
        const AltTensor omega2 = wedge(omega, omega);
        DenseMatrix a(6, 6, Mode::exact);
        for (int i = 1; i <= 6; ++i) {
            AltTensor five = wedge(omega2, AltTensor::monomial(6, {i}, Scalar::one(Mode::exact)));
            for (std::size_t r = 0; r < 6; ++r) {
                a(r, static_cast<std::size_t>(i - 1)) = five.coefficient(r);
            }
        }
        const AltTensor target = wedge(p, omega);
        DenseMatrix rhs(6, 1, Mode::exact);
        for (std::size_t r = 0; r < 6; ++r) {
            rhs(r, 0) = target.coefficient(r);
        }
        const DenseMatrix beta = inverse(a) * rhs;
        AltTensor b(6, 1, Mode::exact);
        for (std::size_t r = 0; r < 6; ++r) {
            b.coefficient(r) = beta(r, 0);
        }
        AltTensor prim = p - wedge(omega, b);
        if (prim.is_zero()) {
            continue;
        }
        return join_seven(prim, omega);
    }
}

}  // namespace trifermion
