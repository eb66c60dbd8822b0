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

#include "trifermion/classify.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "trifermion/covariants.hpp"
#include "trifermion/invariants.hpp"

namespace trifermion {

namespace {

using Signature = std::vector<std::pair<std::string, std::size_t>>;

void require_shape(const AltTensor& p, int n, const char* what)
{
    if (p.dimension() != n || p.degree() != 3) {
        throw std::invalid_argument(std::string(what) + " expects a three-form on " + std::to_string(n) + " modes");
    }
}

bool vanishes(const Scalar& value, int degree, double amplitude, const TolerancePolicy& tol)
{
    return invariant_vanishes(value, degree, amplitude, tol);
}

bool all_vanish(const std::vector<Scalar>& values, int degree, double amplitude, const TolerancePolicy& tol)
{
    for (const auto& v : values) {
        if (!vanishes(v, degree, amplitude, tol)) {
            return false;
        }
    }
    return true;
}

std::string describe(const Signature& s)
{
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "," : "") + std::to_string(s[i].second);
    }
    return out + ")";
}

std::vector<std::size_t> values_of(const Signature& s)
{
    std::vector<std::size_t> out;
    for (const auto& [name, v] : s) {
        out.push_back(v);
    }
    return out;
}

template <std::size_t K>
std::string lookup(const std::vector<std::pair<std::string, std::array<std::size_t, K>>>& table,
                   const std::vector<std::size_t>& key)
{
    for (const auto& [label, row] : table) {
        if (std::equal(row.begin(), row.end(), key.begin(), key.end())) {
            return label;
        }
    }
    return ClassLabel::unclassified;
}

const std::vector<std::pair<std::string, std::array<std::size_t, 3>>>& six_table()
{
    static const std::vector<std::pair<std::string, std::array<std::size_t, 3>>> table = {
        {"Null", {0, 0, 0}}, {"Sep", {3, 0, 0}}, {"Bisep", {5, 1, 4}}, {"W", {6, 3, 6}}, {"GHZ", {6, 6, 6}}};
    return table;
}

const std::vector<std::pair<std::string, std::array<std::size_t, 3>>>& seven_table()
{
    static const std::vector<std::pair<std::string, std::array<std::size_t, 3>>> table = {
        {"I", {0, 0, 0}},  {"II", {0, 3, 0}},  {"III", {0, 5, 1}},  {"IV", {0, 6, 3}}, {"V", {0, 6, 6}},
        {"VI", {1, 7, 1}}, {"VII", {1, 7, 4}}, {"VIII", {2, 7, 6}}, {"IX", {4, 7, 7}}, {"X", {7, 7, 7}}};
    return table;
}

const std::vector<std::pair<std::string, std::array<std::size_t, 4>>>& eight_table()
{
    static const std::vector<std::pair<std::string, std::array<std::size_t, 4>>> table = {
        {"XI", {0, 3, 6, 0}},  {"XII", {0, 4, 7, 0}},  {"XIII", {0, 4, 8, 0}}, {"XIV", {0, 5, 8, 1}},
        {"XV", {0, 6, 8, 2}},  {"XVI", {1, 8, 8, 1}},  {"XVII", {1, 8, 8, 2}}, {"XVIII", {1, 8, 8, 4}},
        {"XIX", {2, 8, 8, 2}}, {"XX", {2, 8, 8, 5}},   {"XXI", {3, 8, 8, 7}},  {"XXII", {5, 8, 8, 8}},
        {"XXIII", {8, 8, 8, 8}}};
    return table;
}

Signature six_signature(const AltTensor& p, const TolerancePolicy& tol)
{
    return {{"rank P2", first_order_map(p, 2).rank(tol)},
            {"rank kappa1", kappa_map(p, {1}).rank(tol)},
            {"rank kappa2", kappa_map(p, {2}).rank(tol)}};
}

DenseMatrix adjugate3(const DenseMatrix& m)
{
    DenseMatrix out(3, 3, m.mode());
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t r0 = (j + 1) % 3;
            const std::size_t r1 = (j + 2) % 3;
            const std::size_t c0 = (i + 1) % 3;
            const std::size_t c1 = (i + 2) % 3;
            out(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        }
    }
    return out;
}

}  // namespace

std::vector<Scalar> plucker_residuals(const AltTensor& p)
{
    if (p.degree() != 3) {
        throw std::invalid_argument("Pluecker relations are implemented for three-forms");
    }
    const int n = p.dimension();
    std::vector<Scalar> out;
    if (n < 4) {
        return out;
    }
    const auto& lows = subsets(n, 2);
    const auto& highs = subsets(n, 4);
    for (std::size_t a = 0; a < lows.size(); ++a) {
        auto i = lows.tuple(a);
        for (std::size_t b = 0; b < highs.size(); ++b) {
            auto j = highs.tuple(b);
            Scalar acc = Scalar::zero(p.mode());
            for (std::size_t t = 0; t < 4; ++t) {
                std::vector<int> rest;
                for (std::size_t s = 0; s < 4; ++s) {
                    if (s != t) {
                        rest.push_back(j[s]);
                    }
                }
                Scalar term = p.get({i[0], i[1], j[t]}) * p.get(rest);
                if (t % 2 == 0) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            out.push_back(acc);
        }
    }
    return out;
}

std::vector<Scalar> block_plucker_residuals(const AltTensor& p)
{
    require_shape(p, 6, "block Pluecker relations");
    const Mode mode = p.mode();
    const Scalar eta = p.get({1, 2, 3});
    const Scalar xi = p.get({4, 5, 6});
    DenseMatrix x(3, 3, mode);
    DenseMatrix y(3, 3, mode);
    const int high[3][2] = {{5, 6}, {6, 4}, {4, 5}};
    const int low[3][2] = {{2, 3}, {3, 1}, {1, 2}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            x(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = p.get({i + 1, high[j][0], high[j][1]});
            y(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = p.get({i + 4, low[j][0], low[j][1]});
        }
    }
    const DenseMatrix r1 = x * eta - adjugate3(y);
    const DenseMatrix r2 = y * xi - adjugate3(x);
    const DenseMatrix r3 = DenseMatrix::identity(3, mode) * (eta * xi) - x * y;
    std::vector<Scalar> out;
    for (const DenseMatrix* m : {&r1, &r2, &r3}) {
        out.insert(out.end(), m->entries().begin(), m->entries().end());
    }
    return out;
}

bool is_separable(const AltTensor& p, const TolerancePolicy& tol)
{
    return all_vanish(plucker_residuals(p), 2, p.max_abs(), tol);
}

ClassLabel classify6(const AltTensor& p, const TolerancePolicy& tol)
{
    require_shape(p, 6, "six-mode classification");
    ClassLabel out;
    out.dimension = 6;
    out.support_dimension = 6;
    const double amp = p.max_abs();
    const Scalar d = quartic_d(p);
    out.invariants["D"] = d;
    std::string chain;
    if (!vanishes(d, 4, amp, tol)) {
        chain = "GHZ";
    } else if (!all_vanish(dual_trivector(p).coefficients(), 3, amp, tol)) {
        chain = "W";
    } else if (!is_separable(p, tol)) {
        chain = "Bisep";
    } else if (!vanishes(Scalar(std::complex<double>(amp, 0.0)), 1, 1.0, tol) && !p.is_zero()) {
        chain = "Sep";
    } else {
        chain = "Null";
    }
    out.signature = six_signature(p, tol);
    const std::string table = lookup(six_table(), values_of(out.signature));
    if (table != chain) {
        out.diagnostic = "invariant chain gives " + chain + " but rank signature " + describe(out.signature) +
                         " gives " + table;
        return out;
    }
    out.label = chain;
    return out;
}

ClassLabel classify6_real(const AltTensor& p, const TolerancePolicy& tol)
{
    if (!p.is_real()) {
        throw std::invalid_argument("real classification needs real amplitudes");
    }
    ClassLabel out = classify6(p, tol);
    if (out.label != "GHZ") {
        return out;
    }
    const Scalar& d = out.invariants.at("D");
    const double value = d.is_exact() ? d.re().get_d() : d.to_complex().real();
    if (value > 0) {
        out.label = "GHZ+";
        return out;
    }
    out.label = "GHZ-";
    // K / sqrt(-D) must square to minus the identity.
    DenseMatrix k = k_matrix_6(p.as_mode(Mode::floating)).matrix;
    k *= Scalar(std::complex<double>(1.0 / std::sqrt(-value), 0.0));
    const DenseMatrix square = k * k + DenseMatrix::identity(6, Mode::floating);
    if (square.max_abs() > 1e-9) {
        out.diagnostic = "complex structure check failed";
        out.label = ClassLabel::unclassified;
    }
    return out;
}

ClassLabel classify7(const AltTensor& p, const TolerancePolicy& tol)
{
    require_shape(p, 7, "seven-mode classification");
    ClassLabel out;
    out.dimension = 7;
    out.support_dimension = 7;
    auto cov = seven_covariants(p);
    out.signature = {{"rank kappa11", cov.N.rank(tol)},
                     {"rank P2", first_order_map(p, 2).rank(tol)},
                     {"rank kappa1", kappa_map(p, {1}).rank(tol)}};
    out.invariants["J"] = trace_of_product(cov.L.matrix, cov.N.matrix) *
                          (p.mode() == Mode::exact ? Scalar(mpq_class(1, 1008))
                                                   : Scalar(std::complex<double>(1.0 / 1008.0, 0.0)));
    out.label = lookup(seven_table(), values_of(out.signature));
    if (!out.classified()) {
        out.diagnostic = "rank signature " + describe(out.signature) + " matches no class";
    }
    return out;
}

SupportReduction reduce_support(const AltTensor& p, const TolerancePolicy& tol)
{
    const int n = p.dimension();
    const Mode mode = p.mode();
    const DenseMatrix image = first_order_map(p, 2).matrix;
    std::vector<std::vector<Scalar>> basis;
    auto try_add = [&](const std::vector<Scalar>& column) {
        DenseMatrix m(static_cast<std::size_t>(n), basis.size() + 1, mode);
        for (std::size_t c = 0; c < basis.size(); ++c) {
            for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) {
                m(r, c) = basis[c][r];
            }
        }
        for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) {
            m(r, basis.size()) = column[r];
        }
        if (rank(m, tol, p.max_abs()) == basis.size() + 1) {
            basis.push_back(column);
        }
    };
    for (std::size_t c = 0; c < image.cols() && basis.size() < static_cast<std::size_t>(n); ++c) {
        std::vector<Scalar> column;
        for (std::size_t r = 0; r < image.rows(); ++r) {
            column.push_back(image(r, c));
        }
        try_add(column);
    }
    const int support = static_cast<int>(basis.size());
    for (int i = 0; i < n && basis.size() < static_cast<std::size_t>(n); ++i) {
        std::vector<Scalar> unit(static_cast<std::size_t>(n), Scalar::zero(mode));
        unit[static_cast<std::size_t>(i)] = Scalar::one(mode);
        try_add(unit);
    }
    DenseMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n), mode);
    for (std::size_t c = 0; c < basis.size(); ++c) {
        for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) {
            a(r, c) = basis[c][r];
        }
    }
    GroupElement g = GroupElement::from_dual(inverse(a));
    AltTensor moved = slocc_apply(g, p);
    const int keep = std::max(support, 3);
    AltTensor reduced(keep, 3, mode);
    const double scale = std::max(p.max_abs(), moved.max_abs());
    for (const auto& [idx, value] : moved.terms()) {
        if (idx.back() <= keep) {
            reduced.set(idx, value);
        } else if (!approx_zero(value, scale, tol)) {
            throw std::logic_error("support reduction left weight outside the support");
        }
    }
    return {support, g, reduced};
}

ClassLabel classify8(const AltTensor& p, const TolerancePolicy& tol)
{
    require_shape(p, 8, "eight-mode classification");
    SupportReduction red = reduce_support(p, tol);
    if (red.support_dimension <= 7) {
        ClassLabel inner;
        if (red.support_dimension == 7) {
            inner = classify7(red.reduced, tol);
        } else {
            inner = classify6(extend_dimension(red.reduced, 6), tol);
        }
        inner.dimension = 8;
        inner.support_dimension = red.support_dimension;
        return inner;
    }
    ClassLabel out;
    out.dimension = 8;
    out.support_dimension = 8;
    auto cov = eight_covariants(p);
    out.signature = {{"rank G", cov.G.rank(tol)},
                     {"rank F", cov.F.rank(tol)},
                     {"rank kappa1", cov.E.rank(tol)},
                     {"rank FE", cov.FE.rank(tol)}};
    out.invariants["I"] = trace_of_product(cov.G.matrix, cov.H.matrix);
    out.label = lookup(eight_table(), values_of(out.signature));
    if (!out.classified()) {
        out.diagnostic = "rank signature " + describe(out.signature) + " matches no class";
    }
    return out;
}

ClassLabel classify9_family(const AltTensor& p, const TolerancePolicy& tol)
{
    require_shape(p, 9, "nine-mode classification");
    ClassLabel out;
    out.dimension = 9;
    out.support_dimension = 9;
    const ExtLinearMap t = t_map(p);
    out.signature = {{"rank T", t.rank(tol)}};
    const NineJs js = nine_js(t);
    const NineDeltas ds = nine_deltas(js);
    out.invariants = {{"J12", js.j12},  {"J18", js.j18},      {"J24", js.j24},            {"J30", js.j30},
                      {"Delta132", ds.d132}, {"Delta48", ds.d48}, {"Delta48prime", ds.d48_prime}, {"Delta24", ds.d24}};
    const double amp = p.max_abs();
    const bool nilpotent = vanishes(js.j12, 12, amp, tol) && vanishes(js.j18, 18, amp, tol) &&
                           vanishes(js.j24, 24, amp, tol) && vanishes(js.j30, 30, amp, tol);
    if (nilpotent) {
        out.label = "family7";
        return out;
    }
    const bool z132 = delta_vanishes(ds.d132, ds.magnitudes[0], tol);
    const bool z48 = delta_vanishes(ds.d48, ds.magnitudes[1], tol);
    const bool z48p = delta_vanishes(ds.d48_prime, ds.magnitudes[2], tol);
    const bool z24 = delta_vanishes(ds.d24, ds.magnitudes[3], tol);
    const std::array<bool, 4> key = {z132, z48, z48p, z24};
    const std::array<std::pair<std::array<bool, 4>, const char*>, 6> table = {{
        {{false, false, false, false}, "family1"},
        {{true, false, false, false}, "family2"},
        {{true, true, false, false}, "family3"},
        {{true, false, true, false}, "family4"},
        {{true, true, true, false}, "family5"},
        {{true, true, true, true}, "family6"},
    }};
    for (const auto& [row, label] : table) {
        if (row == key) {
            out.label = label;
            return out;
        }
    }
    out.diagnostic = std::string("vanishing pattern (") + (z132 ? "0" : "x") + "," + (z48 ? "0" : "x") + "," +
                     (z48p ? "0" : "x") + "," + (z24 ? "0" : "x") + ") matches no family";
    return out;
}

ClassLabel classify(const AltTensor& p, bool real, const TolerancePolicy& tol)
{
    if (p.degree() != 3) {
        throw std::invalid_argument("classification needs a three-form");
    }
    switch (p.dimension()) {
    case 6:
        return real ? classify6_real(p, tol) : classify6(p, tol);
    case 7:
        return classify7(p, tol);
    case 8:
        return classify8(p, tol);
    case 9:
        return classify9_family(p, tol);
    default:
        if (p.dimension() < 6) {
            AltTensor padded = extend_dimension(p, 6);
            ClassLabel out = real ? classify6_real(padded, tol) : classify6(padded, tol);
            out.dimension = p.dimension();
            return out;
        }
        throw std::invalid_argument("classification supports at most nine modes");
    }
}

}  // namespace trifermion
