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

#include "trifermion/covariants.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace trifermion {

namespace {

void require_shape(const AltTensor& p, int n, int k, const char* what)
{
    if ((n > 0 && p.dimension() != n) || p.degree() != k) {
        throw std::invalid_argument(std::string(what) + " expects a degree " + std::to_string(k) + " state" +
                                    (n > 0 ? " on " + std::to_string(n) + " modes" : std::string()));
    }
}

// Calls visit(blocks) for every ordered partition of `rest` into blocks of the given sizes.
void for_each_partition(Mask rest, const std::vector<int>& sizes, std::vector<Mask>& blocks, std::size_t level,
                        const std::function<void(const std::vector<Mask>&)>& visit)
{
    if (level == sizes.size()) {
        if (rest == 0) {
            visit(blocks);
        }
        return;
    }
    if (level + 1 == sizes.size()) {
        if (popcount(rest) == sizes[level]) {
            blocks[level] = rest;
            visit(blocks);
        }
        return;
    }
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
        if (popcount(sub) == sizes[level]) {
            blocks[level] = sub;
            for_each_partition(rest & ~sub, sizes, blocks, level + 1, visit);
        }
        if (sub == 0) {
            break;
        }
    }
}

int block_sign(Mask head, const std::vector<Mask>& blocks)
{
    int sign = 1;
    Mask seen = head;
    for (Mask b : blocks) {
        sign *= merge_sign(seen, b);
        seen |= b;
    }
    return sign;
}

Scalar signed_entry(const AltTensor& p, Mask first, Mask second)
{
    if (first & second) {
        return Scalar::zero(p.mode());
    }
    const Scalar& v = p.at(first | second);
    return merge_sign(first, second) > 0 ? v : -v;
}

// Least common multiple of the denominators of an exact state, absent when it is already integral.
std::optional<mpz_class> clearing_factor(const AltTensor& p)
{
    if (p.mode() != Mode::exact) {
        return std::nullopt;
    }
    mpz_class l = 1;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
    }
    if (l == 1) {
        return std::nullopt;
    }
    return l;
}

// Undoes the scaling of the state by the factor on a map homogeneous of its state degree.
void unscale(ExtLinearMap& m, const mpz_class& factor, double amplitude)
{
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), factor.get_mpz_t(), static_cast<unsigned long>(m.state_degree));
    m.matrix *= Scalar(mpq_class(mpz_class(1), power));
    m.amplitude = amplitude;
}

}  // namespace

std::size_t ExtLinearMap::rank(const TolerancePolicy& tol) const
{
    return trifermion::rank(matrix, tol, std::pow(amplitude, state_degree));
}

ExtLinearMap first_order_map(const AltTensor& p, int l)
{
    const int n = p.dimension();
    const int k = p.degree();
    if (l < 0 || l > k) {
        throw std::invalid_argument("first order map degree " + std::to_string(l) + " outside 0.." + std::to_string(k));
    }
    const auto& rows = subsets(n, k - l);
    const auto& cols = subsets(n, l);
    ExtLinearMap out{"P" + std::to_string(l), n, {k - l}, {l}, 0, DenseMatrix(rows.size(), cols.size(), p.mode())};
    out.state_degree = 1;
    out.amplitude = p.max_abs();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out.matrix(r, c) = signed_entry(p, cols.mask(c), rows.mask(r));
        }
    }
    return out;
}

namespace {

ExtLinearMap build_kappa_map(const AltTensor& p, const std::vector<int>& degrees)
{
    const int n = p.dimension();
    const int k = p.degree();
    if (degrees.empty()) {
        throw std::invalid_argument("kappa map needs at least one contraction degree");
    }
    int total = 0;
    for (int l : degrees) {
        if (l < 0 || l > k) {
            throw std::invalid_argument("contraction degree " + std::to_string(l) + " outside 0.." + std::to_string(k));
        }
        total += l;
    }
    const int m = n - (static_cast<int>(degrees.size()) + 1) * k + total;
    if (m < 0 || m > n) {
        throw std::invalid_argument("contraction degrees violate 0 <= (n+1)k - sum(l) <= N");
    }

    const auto& rows = subsets(n, m);
    std::vector<const SubsetIndexer*> factors;
    std::size_t ncols = 1;
    for (int l : degrees) {
        factors.push_back(&subsets(n, l));
        ncols *= factors.back()->size();
    }
    std::string name = "kappa(";
    for (std::size_t j = 0; j < degrees.size(); ++j) {
        name += (j ? "," : "") + std::to_string(degrees[j]);
    }
    name += ")";
    ExtLinearMap out{name, n, {m}, degrees, 1, DenseMatrix(rows.size(), ncols, p.mode())};
    out.state_degree = static_cast<int>(degrees.size()) + 1;
    out.amplitude = p.max_abs();
    if (p.is_zero()) {
        return out;
    }

    std::vector<int> sizes;
    for (int l : degrees) {
        sizes.push_back(k - l);
    }
    sizes.push_back(k);
    std::vector<Mask> blocks(sizes.size());
    const Mask full = (Mask{1} << n) - 1;
    const std::size_t nf = degrees.size();

    std::vector<std::vector<Scalar>> factor_values(nf);
    std::vector<std::size_t> strides(nf, 1);
    for (std::size_t j = nf; j-- > 1;) {
        strides[j - 1] = strides[j] * factors[j]->size();
    }

    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Mask a = rows.mask(r);
        for_each_partition(full & ~a, sizes, blocks, 0, [&](const std::vector<Mask>& parts) {
            const Scalar& tail = p.at(parts[nf]);
            if (tail.is_zero()) {
                return;
            }
            for (std::size_t j = 0; j < nf; ++j) {
                auto& values = factor_values[j];
                values.assign(factors[j]->size(), Scalar::zero(p.mode()));
                bool any = false;
                for (std::size_t b = 0; b < values.size(); ++b) {
                    values[b] = signed_entry(p, factors[j]->mask(b), parts[j]);
                    any = any || !values[b].is_zero();
                }
                if (!any) {
                    return;
                }
            }
            Scalar base = tail;
            if (block_sign(a, parts) < 0) {
                base = -base;
            }
            std::function<void(std::size_t, std::size_t, const Scalar&)> spread = [&](std::size_t j, std::size_t col,
                                                                                    const Scalar& acc) {
                const auto& values = factor_values[j];
                if (j + 1 == nf) {
                    for (std::size_t b = 0; b < values.size(); ++b) {
                        if (!values[b].is_zero()) {
                            out.matrix(r, col + b * strides[j]).add_product(acc, values[b]);
                        }
                    }
                    return;
                }
                for (std::size_t b = 0; b < values.size(); ++b) {
                    if (!values[b].is_zero()) {
                        spread(j + 1, col + b * strides[j], acc * values[b]);
                    }
                }
            };
            spread(0, 0, base);
        });
    }
    return out;
}

}  // namespace

ExtLinearMap kappa_map(const AltTensor& p, const std::vector<int>& degrees)
{
    const auto scale = clearing_factor(p);
    if (!scale) {
        return build_kappa_map(p, degrees);
    }
    ExtLinearMap m = build_kappa_map(p * Scalar(mpq_class(*scale)), degrees);
    unscale(m, *scale, p.max_abs());
    return m;
}

ExtLinearMap k_matrix_6(const AltTensor& p)
{
    require_shape(p, 6, 3, "six-mode quadratic covariant");
    ExtLinearMap out = kappa_map(p, {1});
    out.name = "K";
    return out;
}

AltTensor dual_trivector(const AltTensor& p)
{
    require_shape(p, 6, 3, "dual three-form");
    const DenseMatrix k = k_matrix_6(p).matrix;
    AltTensor out(6, 3, p.mode(), Variance::form, p.weight() + 1);
    const auto& idx = subsets(6, 3);
    for (std::size_t r = 0; r < idx.size(); ++r) {
        auto t = idx.tuple(r);
        Scalar acc = Scalar::zero(p.mode());
        // Antisymmetrized over the three slots of the output.
        for (int d = 1; d <= 6; ++d) {
            const Scalar& kda = k(static_cast<std::size_t>(d - 1), static_cast<std::size_t>(t[0] - 1));
            if (!kda.is_zero()) {
                acc.add_product(p.get({t[1], t[2], d}), kda);
            }
        }
        out.coefficient(r) = acc;
    }
    return out;
}

std::optional<Scalar> exact_sqrt(const Scalar& z)
{
    if (!z.is_exact()) {
        return Scalar(std::sqrt(z.to_complex()));
    }
    auto rational_sqrt = [](const mpq_class& q) -> std::optional<mpq_class> {
        if (q < 0) {
            return std::nullopt;
        }
        mpz_class num = q.get_num();
        mpz_class den = q.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
            return std::nullopt;
        }
        mpz_class rn;
        mpz_class rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return mpq_class(rn, rd);
    };
    const mpq_class& x = z.re();
    const mpq_class& y = z.im();
    if (y == 0) {
        if (x >= 0) {
            if (auto r = rational_sqrt(x)) {
                return Scalar(*r, 0);
            }
            return std::nullopt;
        }
        if (auto r = rational_sqrt(-x)) {
            return Scalar(0, *r);
        }
        return std::nullopt;
    }
    auto modulus = rational_sqrt(x * x + y * y);
    if (!modulus) {
        return std::nullopt;
    }
    auto u = rational_sqrt((*modulus + x) / 2);
    if (!u || *u == 0) {
        return std::nullopt;
    }
    mpq_class v = y / (2 * *u);
    return Scalar(*u, v);
}

AltTensor freudenthal_dual(const AltTensor& p)
{
    require_shape(p, 6, 3, "Freudenthal dual");
    const DenseMatrix k = k_matrix_6(p).matrix;
    Scalar d = trace_of_product(k, k) * mpq_class(1, 6);
    if (d.is_zero() || (!d.is_exact() && d.abs() <= TolerancePolicy{}.zero_test * std::pow(p.max_abs(), 4))) {
        throw std::domain_error("Freudenthal dual needs a nonzero quartic invariant");
    }
    auto root = exact_sqrt(d);
    if (!root) {
        throw std::domain_error("quartic invariant " + d.to_string() + " has no exact square root");
    }
    Scalar factor = -Scalar::imaginary_unit(p.mode()) / *root;
    return dual_trivector(p) * factor;
}

SevenCovariants seven_covariants(const AltTensor& p)
{
    require_shape(p, 7, 3, "seven-mode covariants");
    const Mode mode = p.mode();
    const ExtLinearMap first = kappa_map(p, {1});
    const ExtLinearMap second = kappa_map(p, {1, 1});
    const auto& pairs = subsets(7, 2);

    ExtLinearMap m{"M", 7, {1, 1}, {1}, 1, DenseMatrix(49, 7, mode)};
    m.state_degree = 2;
    m.amplitude = p.max_abs();
    for (int a = 0; a < 7; ++a) {
        for (int b = 0; b < 7; ++b) {
            if (a == b) {
                continue;
            }
            const Mask pair = (Mask{1} << a) | (Mask{1} << b);
            const std::size_t r = pairs.rank(pair);
            for (std::size_t c = 0; c < 7; ++c) {
                const Scalar& v = first.matrix(r, c);
                m.matrix(static_cast<std::size_t>(7 * a + b), c) = a < b ? v : -v;
            }
        }
    }

    ExtLinearMap nmap{"N", 7, {}, {1, 1}, 1, DenseMatrix(7, 7, mode)};
    nmap.state_degree = 3;
    nmap.amplitude = p.max_abs();
    for (std::size_t a = 0; a < 7; ++a) {
        for (std::size_t b = 0; b < 7; ++b) {
            nmap.matrix(a, b) = second.matrix(0, 7 * a + b);
        }
    }

    ExtLinearMap lmap{"L", 7, {1, 1}, {}, 2, DenseMatrix(7, 7, mode)};
    lmap.state_degree = 4;
    lmap.amplitude = p.max_abs();
    std::vector<DenseMatrix> slices;
    for (std::size_t a = 0; a < 7; ++a) {
        slices.push_back(m.matrix.block(7 * a, 0, 7, 7));
    }
    for (std::size_t a = 0; a < 7; ++a) {
        for (std::size_t b = a; b < 7; ++b) {
            Scalar v = trace_of_product(slices[a], slices[b]);
            lmap.matrix(a, b) = v;
            lmap.matrix(b, a) = v;
        }
    }

    ExtLinearMap bmap{"B", 7, {}, {1, 1}, 1, nmap.matrix * Scalar(mpq_class(-1, 6)).as_mode(mode)};
    bmap.state_degree = 3;
    bmap.amplitude = p.max_abs();
    return {std::move(m), std::move(nmap), std::move(lmap), std::move(bmap)};
}

namespace {

EightCovariants build_eight_covariants(const AltTensor& p)
{
    require_shape(p, 8, 3, "eight-mode covariants");
    const Mode mode = p.mode();
    const ExtLinearMap fk = kappa_map(p, {1, 1});
    const ExtLinearMap ek = kappa_map(p, {1});
    const auto& triples = subsets(8, 3);
    const auto& pairs = subsets(8, 2);

    ExtLinearMap f{"F", 8, {1}, {1, 1}, 1, fk.matrix};
    f.state_degree = 3;
    f.amplitude = p.max_abs();
    ExtLinearMap e{"E", 8, {3}, {1}, 1, ek.matrix};
    e.state_degree = 2;
    e.amplitude = p.max_abs();

    auto fval = [&](std::size_t a, std::size_t b, std::size_t c) -> const Scalar& { return f.matrix(a, 8 * b + c); };
    auto eval = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t j, int& sign) -> const Scalar* {
        if (a == b || b == c || a == c) {
            return nullptr;
        }
        const Mask mk = (Mask{1} << a) | (Mask{1} << b) | (Mask{1} << c);
        sign = permutation_sign({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
        return &e.matrix(triples.rank(mk), j);
    };

    ExtLinearMap g{"G", 8, {}, {1, 1}, 2, DenseMatrix(8, 8, mode)};
    g.state_degree = 6;
    g.amplitude = p.max_abs();
    {
        for (std::size_t a = 0; a < 8; ++a) {
            for (std::size_t b = a; b < 8; ++b) {
                Scalar acc = Scalar::zero(mode);
                for (std::size_t c = 0; c < 8; ++c) {
                    for (std::size_t d = 0; d < 8; ++d) {
                        const Scalar& x = fval(c, a, d);
                        if (x.is_zero()) {
                            continue;
                        }
                        const Scalar& y = fval(d, b, c);
                        if (!y.is_zero()) {
                            acc.add_product(x, y);
                        }
                    }
                }
                g.matrix(a, b) = acc;
                g.matrix(b, a) = acc;
            }
        }
    }

    // W^a_{(k,l),(i,j)} = sum_c (F^a)_ci (E^ckl)_j, the uncontracted composite.
    ExtLinearMap fe_full{"FE literal", 8, {1, 2}, {1, 1}, 2, DenseMatrix(8 * pairs.size(), 64, mode)};
    fe_full.state_degree = 5;
    fe_full.amplitude = p.max_abs();
    for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t kl = 0; kl < pairs.size(); ++kl) {
            auto t = pairs.tuple(kl);
            const std::size_t k = static_cast<std::size_t>(t[0] - 1);
            const std::size_t l = static_cast<std::size_t>(t[1] - 1);
            for (std::size_t i = 0; i < 8; ++i) {
                for (std::size_t j = 0; j < 8; ++j) {
                    Scalar plus = Scalar::zero(mode);
                    Scalar minus = Scalar::zero(mode);
                    for (std::size_t c = 0; c < 8; ++c) {
                        const Scalar& x = fval(a, c, i);
                        if (x.is_zero()) {
                            continue;
                        }
                        int sign = 0;
                        const Scalar* y = eval(c, k, l, j, sign);
                        if (y != nullptr && !y->is_zero()) {
                            (sign > 0 ? plus : minus).add_product(x, *y);
                        }
                    }
                    fe_full.matrix(a * pairs.size() + kl, 8 * i + j) = plus - minus;
                }
            }
        }
    }

    ExtLinearMap fe{"FE", 8, {2}, {1}, 2, DenseMatrix(pairs.size(), 8, mode)};
    fe.state_degree = 5;
    fe.amplitude = p.max_abs();
    for (std::size_t kl = 0; kl < pairs.size(); ++kl) {
        for (std::size_t i = 0; i < 8; ++i) {
            Scalar acc = Scalar::zero(mode);
            for (std::size_t a = 0; a < 8; ++a) {
                acc += fe_full.matrix(a * pairs.size() + kl, 8 * i + a);
            }
            fe.matrix(kl, i) = acc;
        }
    }

    // H^{ab} = W^a_{(k,l),(i,j)} W^b_{(i,j),(k,l)} with both pairs running over all orderings.
    ExtLinearMap h{"H", 8, {1, 1}, {}, 4, DenseMatrix(8, 8, mode)};
    h.state_degree = 10;
    h.amplitude = p.max_abs();
    {
        auto wval = [&](std::size_t a, std::size_t k, std::size_t l, std::size_t i, std::size_t j, int& sign) -> const Scalar* {
            if (k == l) {
                return nullptr;
            }
            const Mask mk = (Mask{1} << k) | (Mask{1} << l);
            sign = k < l ? 1 : -1;
            return &fe_full.matrix(a * pairs.size() + pairs.rank(mk), 8 * i + j);
        };
        for (std::size_t a = 0; a < 8; ++a) {
            for (std::size_t b = 0; b < 8; ++b) {
                Scalar plus = Scalar::zero(mode);
                Scalar minus = Scalar::zero(mode);
                for (std::size_t kl = 0; kl < pairs.size(); ++kl) {
                    auto t = pairs.tuple(kl);
                    const std::size_t k = static_cast<std::size_t>(t[0] - 1);
                    const std::size_t l = static_cast<std::size_t>(t[1] - 1);
                    for (std::size_t i = 0; i < 8; ++i) {
                        for (std::size_t j = 0; j < 8; ++j) {
                            const Scalar& x = fe_full.matrix(a * pairs.size() + kl, 8 * i + j);
                            if (x.is_zero()) {
                                continue;
                            }
                            // Both orderings of (k,l) contribute, the second with the opposite sign.
                            for (int swap = 0; swap < 2; ++swap) {
                                int sign = 0;
                                const Scalar* y = swap == 0 ? wval(b, i, j, k, l, sign) : wval(b, i, j, l, k, sign);
                                if (y == nullptr || y->is_zero()) {
                                    continue;
                                }
                                if (swap == 1) {
                                    sign = -sign;
                                }
                                (sign > 0 ? plus : minus).add_product(x, *y);
                            }
                        }
                    }
                }
                const Scalar acc = plus - minus;
                h.matrix(a, b) = acc;
            }
        }
    }
    return {std::move(f), std::move(e), std::move(g), std::move(h), std::move(fe), std::move(fe_full)};
}

}  // namespace

EightCovariants eight_covariants(const AltTensor& p)
{
    require_shape(p, 8, 3, "eight-mode covariants");
    const auto scale = clearing_factor(p);
    if (!scale) {
        return build_eight_covariants(p);
    }
    EightCovariants c = build_eight_covariants(p * Scalar(mpq_class(*scale)));
    const double amplitude = p.max_abs();
    for (ExtLinearMap* m : {&c.F, &c.E, &c.G, &c.H, &c.FE, &c.FE_literal}) {
        unscale(*m, *scale, amplitude);
    }
    return c;
}

namespace {

ExtLinearMap build_t_map(const AltTensor& p)
{
    require_shape(p, 9, 3, "nine-mode cubic covariant");
    const Mode mode = p.mode();
    const auto& triples = subsets(9, 3);
    const auto& pairs = subsets(9, 2);
    const Mask full = 0x1FF;
    ExtLinearMap out{"T", 9, {3}, {3}, 1, DenseMatrix(triples.size(), triples.size(), mode)};
    out.state_degree = 3;
    out.amplitude = p.max_abs();
    if (p.is_zero()) {
        return out;
    }
    std::vector<Mask> blocks(2);
    std::vector<Scalar> w_plus(9);
    std::vector<Scalar> w_minus(9);
    std::vector<Scalar> w(9);
    std::vector<const Scalar*> u(pairs.size());
    std::vector<int> u_sign(pairs.size());
    auto pair_rank = [&](std::size_t x, std::size_t y) { return pairs.rank((Mask{1} << x) | (Mask{1} << y)); };
    for (std::size_t r = 0; r < triples.size(); ++r) {
        const Mask a = triples.mask(r);
        for (int pi = 0; pi < 9; ++pi) {
            const Mask pm = Mask{1} << pi;
            if (a & pm) {
                continue;
            }
            std::fill(w_plus.begin(), w_plus.end(), Scalar::zero(mode));
            std::fill(w_minus.begin(), w_minus.end(), Scalar::zero(mode));
            bool any = false;
            const Mask head = a | pm;
            const int head_sign = merge_sign(a, pm);
            for_each_partition(full & ~head, {2, 3}, blocks, 0, [&](const std::vector<Mask>& parts) {
                const Scalar& tail = p.at(parts[1]);
                if (tail.is_zero()) {
                    return;
                }
                const int base_sign = head_sign * block_sign(head, parts);
                for (int f = 0; f < 9; ++f) {
                    const Mask fm = Mask{1} << f;
                    if (fm & parts[0]) {
                        continue;
                    }
                    const Scalar& x = p.at(fm | parts[0]);
                    if (!x.is_zero()) {
                        const std::size_t fi = static_cast<std::size_t>(f);
                        (base_sign * merge_sign(fm, parts[0]) > 0 ? w_plus[fi] : w_minus[fi]).add_product(tail, x);
                        any = true;
                    }
                }
            });
            if (!any) {
                continue;
            }
            for (std::size_t f = 0; f < 9; ++f) {
                w[f] = w_plus[f] - w_minus[f];
            }
            for (std::size_t de = 0; de < pairs.size(); ++de) {
                const Mask dm = pairs.mask(de);
                if (dm & pm) {
                    u[de] = nullptr;
                    continue;
                }
                u[de] = &p.at(dm | pm);
                u_sign[de] = merge_sign(dm, pm);
            }
            for (std::size_t c = 0; c < triples.size(); ++c) {
                auto t = triples.tuple(c);
                const std::size_t d[3] = {static_cast<std::size_t>(t[0] - 1), static_cast<std::size_t>(t[1] - 1),
                                          static_cast<std::size_t>(t[2] - 1)};
                Scalar plus = Scalar::zero(mode);
                Scalar minus = Scalar::zero(mode);
                const int term_sign[3] = {1, -1, 1};
                for (int omit = 2; omit >= 0; --omit) {
                    const std::size_t x = d[omit == 0 ? 1 : 0];
                    const std::size_t y = d[omit == 2 ? 1 : 2];
                    const std::size_t de = pair_rank(x, y);
                    const Scalar& wv = w[d[omit]];
                    if (u[de] == nullptr || u[de]->is_zero() || wv.is_zero()) {
                        continue;
                    }
                    (term_sign[2 - omit] * u_sign[de] > 0 ? plus : minus).add_product(*u[de], wv);
                }
                if (!plus.is_zero() || !minus.is_zero()) {
                    Scalar acc = plus - minus;
                    out.matrix(r, c) += acc + acc;
                }
            }
        }
    }
    return out;
}

}  // namespace

ExtLinearMap t_map(const AltTensor& p)
{
    require_shape(p, 9, 3, "nine-mode cubic covariant");
    const auto scale = clearing_factor(p);
    if (!scale) {
        return build_t_map(p);
    }
    ExtLinearMap t = build_t_map(p * Scalar(mpq_class(*scale)));
    unscale(t, *scale, p.max_abs());
    return t;
}

Scalar t_power_trace(const AltTensor& p, int n)
{
    if (n < 1) {
        throw std::invalid_argument("power must be positive");
    }
    const DenseMatrix t = t_map(p).matrix;
    DenseMatrix result = t;
    DenseMatrix power = t;
    bool have = false;
    for (int remaining = n; remaining > 0; remaining >>= 1) {
        if (remaining & 1) {
            result = have ? result * power : power;
            have = true;
        }
        if (remaining > 1) {
            power = power * power;
        }
    }
    return result.trace();
}

}  // namespace trifermion
