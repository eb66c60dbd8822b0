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

#include "trifermion/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace trifermion {

namespace {

std::vector<std::size_t> order_indices(const std::vector<double>& values, Ordering order)
{
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return order == Ordering::descending ? values[a] > values[b] : values[a] < values[b];
    });
    return idx;
}

bool is_diagonal(const DenseMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i != j && !m(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

struct RotatedSpectrum {
    OccupationSpectrum spectrum;
    DenseMatrix dual;
};

RotatedSpectrum diagonalize(const AltTensor& p, Ordering order)
{
    const DenseMatrix rho = one_matrix(p);
    const std::size_t n = rho.rows();
    RotatedSpectrum out;
    out.spectrum.dimension = p.dimension();
    out.spectrum.ordering = order;
    if (rho.mode() == Mode::exact && is_diagonal(rho)) {
        std::vector<mpq_class> exact;
        std::vector<double> values;
        for (std::size_t i = 0; i < n; ++i) {
            exact.push_back(rho(i, i).re());
            values.push_back(exact.back().get_d());
        }
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return order == Ordering::descending ? exact[a] > exact[b] : exact[a] < exact[b];
        });
        out.dual = DenseMatrix(n, n, Mode::exact);
        std::vector<mpq_class> sorted_exact;
        for (std::size_t r = 0; r < n; ++r) {
            out.dual(r, idx[r]) = Scalar::one(Mode::exact);
            sorted_exact.push_back(exact[idx[r]]);
            out.spectrum.eigenvalues.push_back(values[idx[r]]);
        }
        out.spectrum.exact = sorted_exact;
        return out;
    }
    DenseMatrix floating(n, n, Mode::floating);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            floating(i, j) = rho(i, j).as_mode(Mode::floating);
        }
    }
    const HermitianEigensystem eig = hermitian_eigensystem(floating);
    const std::vector<std::size_t> idx = order_indices(eig.values, order);
    out.dual = DenseMatrix(n, n, Mode::floating);
    for (std::size_t r = 0; r < n; ++r) {
        out.spectrum.eigenvalues.push_back(eig.values[idx[r]]);
        for (std::size_t c = 0; c < n; ++c) {
            out.dual(r, c) = eig.vectors(c, idx[r]).conj();
        }
    }
    return out;
}

bool subset_of(const std::vector<std::vector<int>>& support, const std::set<std::vector<int>>& allowed)
{
    return std::all_of(support.begin(), support.end(), [&](const auto& t) { return allowed.count(t) > 0; });
}

std::vector<std::string> match_patterns(const AltTensor& q)
{
    std::vector<std::vector<int>> support;
    const double threshold = 1e-10 * q.max_abs();
    for (const auto& [idx, value] : q.terms()) {
        if (value.abs() > threshold) {
            support.push_back(idx);
        }
    }
    std::vector<std::string> out;
    if (q.dimension() < 6 || q.dimension() > 7) {
        return out;
    }
    if (subset_of(support, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}})) {
        out.push_back(borland_dennis_form);
    }
    if (q.dimension() == 7) {
        const std::set<int> pair_side = {1, 2, 4, 7};
        const bool split = std::all_of(support.begin(), support.end(), [&](const auto& t) {
            return std::count_if(t.begin(), t.end(), [&](int i) { return pair_side.count(i) > 0; }) == 2;
        });
        if (split) {
            out.push_back(pair_times_triple_form);
        }
        if (subset_of(support, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}})) {
            out.push_back(triple_pinned_form);
        }
    }
    return out;
}

KlyachkoConstraint make_constraint(const std::string& description, const OccupationSpectrum& s,
                                   const std::vector<int>& plus, const std::vector<int>& minus, long constant,
                                   double tol)
{
    KlyachkoConstraint c;
    c.description = description;
    double slack = static_cast<double>(constant);
    for (int i : plus) {
        slack += s.eigenvalues[static_cast<std::size_t>(i - 1)];
    }
    for (int i : minus) {
        slack -= s.eigenvalues[static_cast<std::size_t>(i - 1)];
    }
    if (s.exact) {
        mpq_class e = constant;
        for (int i : plus) {
            e += (*s.exact)[static_cast<std::size_t>(i - 1)];
        }
        for (int i : minus) {
            e -= (*s.exact)[static_cast<std::size_t>(i - 1)];
        }
        c.exact_slack = e;
        c.slack = e.get_d();
        c.saturated = (e == 0);
        return c;
    }
    c.slack = slack;
    c.saturated = std::abs(slack) <= tol;
    return c;
}

}  // namespace

OccupationSpectrum OccupationSpectrum::sorted(Ordering order) const
{
    OccupationSpectrum out = *this;
    out.ordering = order;
    if (order == ordering) {
        return out;
    }
    std::reverse(out.eigenvalues.begin(), out.eigenvalues.end());
    if (out.exact) {
        std::reverse(out.exact->begin(), out.exact->end());
    }
    return out;
}

std::size_t KlyachkoReport::saturated_count() const
{
    return static_cast<std::size_t>(
        std::count_if(constraints.begin(), constraints.end(), [](const auto& c) { return c.saturated; }));
}

DenseMatrix one_matrix(const AltTensor& p)
{
    if (p.degree() != 3) {
        throw std::invalid_argument("one-matrix needs a three-fermion state");
    }
    if (p.is_zero()) {
        throw std::invalid_argument("one-matrix of the zero state");
    }
    const int n = p.dimension();
    const Mode mode = p.mode();
    Scalar norm = Scalar::zero(mode);
    for (const auto& c : p.coefficients()) {
        norm.add_product(c, c.conj());
    }
    DenseMatrix rho(static_cast<std::size_t>(n), static_cast<std::size_t>(n), mode);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Scalar acc = Scalar::zero(mode);
            for (int a = 1; a <= n; ++a) {
                for (int b = a + 1; b <= n; ++b) {
                    if (a == i || b == i || a == j || b == j) {
                        continue;
                    }
                    acc.add_product(p.get({i, a, b}), p.get({j, a, b}).conj());
                }
            }
            rho(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = acc / norm;
        }
    }
    return rho;
}

OccupationSpectrum occupation_spectrum(const AltTensor& p, Ordering order)
{
    return diagonalize(p, order).spectrum;
}

KlyachkoReport klyachko_check(const OccupationSpectrum& spectrum, Ordering order, double saturation_tolerance)
{
    const OccupationSpectrum s = spectrum.sorted(order);
    KlyachkoReport r;
    r.dimension = s.dimension;
    r.ordering = order;
    const double tol = saturation_tolerance;
    if (s.dimension == 6) {
        r.constraints.push_back(make_constraint("l5+l6-l4>=0", s, {5, 6}, {4}, 0, tol));
    } else if (s.dimension == 7) {
        r.constraints.push_back(make_constraint("l1+l2+l4+l7<=2", s, {}, {1, 2, 4, 7}, 2, tol));
        r.constraints.push_back(make_constraint("l1+l2+l5+l6<=2", s, {}, {1, 2, 5, 6}, 2, tol));
        r.constraints.push_back(make_constraint("l2+l3+l4+l5<=2", s, {}, {2, 3, 4, 5}, 2, tol));
        r.constraints.push_back(make_constraint("l1+l3+l4+l6<=2", s, {}, {1, 3, 4, 6}, 2, tol));
    } else {
        throw std::invalid_argument("occupation constraints are available for six and seven modes only");
    }
    return r;
}

PinningReport pinning_analysis(const AltTensor& p, const TolerancePolicy& tol)
{
    if (p.dimension() != 6 && p.dimension() != 7) {
        throw std::invalid_argument("pinning analysis is available for six and seven modes only");
    }
    RotatedSpectrum d = diagonalize(p, Ordering::descending);
    GroupElement rotation = GroupElement::from_dual(d.dual);
    AltTensor natural = slocc_apply(rotation, d.dual.mode() == p.mode() ? p : p.as_mode(d.dual.mode()));
    PinningReport r{d.spectrum,
                    klyachko_check(d.spectrum),
                    rotation,
                    natural,
                    match_patterns(natural),
                    classify(p, false, tol),
                    true,
                    {}};
    const auto& c = r.klyachko.constraints;
    const std::string& label = r.class_label.label;
    auto flag = [&](const std::string& message) {
        r.consistent = false;
        r.diagnostic = message;
    };
    if (p.dimension() == 6) {
        if (c[0].saturated && label == "GHZ") {
            flag("Borland-Dennis saturated for a state with nonzero quartic invariant");
        }
    } else {
        const bool first = c[0].saturated;
        const bool three = c[0].saturated && c[1].saturated && c[3].saturated;
        const bool all = three && c[2].saturated;
        if (first && label == "X") {
            flag("first seven-mode constraint saturated in class X");
        } else if (three && (label == "V" || label == "VIII" || label == "IX" || label == "X")) {
            flag("three seven-mode constraints saturated in class " + label);
        } else if (all && !(label == "I" || label == "II" || label == "III" || label == "IV")) {
            flag("all seven-mode constraints saturated in class " + label);
        }
    }
    return r;
}

}  // namespace trifermion
