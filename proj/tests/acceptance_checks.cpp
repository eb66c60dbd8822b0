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

#include "acceptance_checks.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "trifermion/canonical.hpp"
#include "trifermion/classify.hpp"
#include "trifermion/covariants.hpp"
#include "trifermion/invariants.hpp"
#include "trifermion/oracle.hpp"
#include "trifermion/spectra.hpp"

namespace trifermion::checks {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

class Recorder {
public:
    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            ++failures_;
            if (first_.empty()) {
                first_ = what;
            }
        }
        ++checks_;
    }

    CheckResult finish(const Timer& timer, const std::string& summary, double time_limit = 0.0)
    {
        CheckResult r;
        r.seconds = timer.seconds();
        r.pass = failures_ == 0;
        std::ostringstream out;
        out << summary << "; " << checks_ - failures_ << "/" << checks_ << " checks";
        if (!r.pass) {
            out << "; first failure: " << first_;
        }
        if (time_limit > 0.0) {
            out << "; " << r.seconds << " s (limit " << time_limit << " s)";
            if (r.seconds >= time_limit) {
                r.pass = false;
            }
        }
        r.detail = out.str();
        return r;
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

Scalar q(long n, long d = 1) { return Scalar(mpq_class(n, d)); }

mpq_class random_rational(std::mt19937_64& rng, bool nonzero = true)
{
    long num = 0;
    do {
        num = static_cast<long>(rng() % 19) - 9;
    } while (nonzero && num == 0);
    const long den = static_cast<long>(rng() % 5) + 1;
    return mpq_class(num, den);
}

std::string triple(const std::vector<std::size_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

bool same_js(const NineJs& a, const NineJs& b)
{
    return a.j12 == b.j12 && a.j18 == b.j18 && a.j24 == b.j24 && a.j30 == b.j30;
}

bool all_zero(const NineJs& a)
{
    return a.j12.is_zero() && a.j18.is_zero() && a.j24.is_zero() && a.j30.is_zero();
}

const std::vector<int> permutation_signs_6 = [] {
    std::vector<int> out;
    std::array<int, 6> perm = {0, 1, 2, 3, 4, 5};
    do {
        out.push_back(permutation_sign(std::vector<int>(perm.begin(), perm.end())));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}();

template <typename F>
void for_each_permutation_6(F&& f)
{
    std::array<int, 6> perm = {0, 1, 2, 3, 4, 5};
    std::size_t i = 0;
    do {
        f(perm, permutation_signs_6[i++]);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

GroupElement random_unitary(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    DenseMatrix h(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Mode::floating);
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = i; j < h.cols(); ++j) {
            const std::complex<double> z(gauss(rng), i == j ? 0.0 : gauss(rng));
            h(i, j) = Scalar(z);
            h(j, i) = Scalar(std::conj(z));
        }
    }
    return GroupElement(hermitian_eigensystem(h).vectors);
}

std::optional<AltTensor> contractible_embedding(const AltTensor& p)
{
    const int n = p.dimension();
    std::vector<std::pair<std::vector<int>, Scalar>> terms;
    for (const auto& [idx, value] : p.terms()) {
        if (!value.is_zero()) {
            terms.emplace_back(idx, value);
        }
    }
    const std::vector<std::array<int, 3>> patterns = {{2, -1, -1}, {1, 0, -1}, {1, 1, -2}, {0, 0, 0}, {3, -1, -2}, {4, 1, -5}};
    for (const auto& b1 : patterns) {
        for (const auto& b2 : patterns) {
            for (const auto& b3 : patterns) {
                std::vector<int> weight;
                for (const auto* b : {&b1, &b2, &b3}) {
                    weight.insert(weight.end(), b->begin(), b->end());
                }
                std::vector<int> slot(static_cast<std::size_t>(n) + 1, -1);
                std::vector<bool> used(9, false);
                std::function<bool(int)> place = [&](int mode) {
                    if (mode > n) {
                        return true;
                    }
                    for (int s = 0; s < 9; ++s) {
                        if (used[static_cast<std::size_t>(s)]) {
                            continue;
                        }
                        slot[static_cast<std::size_t>(mode)] = s;
                        bool ok = true;
                        for (const auto& [idx, value] : terms) {
                            if (idx.back() != mode) {
                                continue;
                            }
                            int w = 0;
                            for (int i : idx) {
                                w += weight[static_cast<std::size_t>(slot[static_cast<std::size_t>(i)])];
                            }
                            if (w <= 0) {
                                ok = false;
                                break;
                            }
                        }
                        if (ok) {
                            used[static_cast<std::size_t>(s)] = true;
                            if (place(mode + 1)) {
                                return true;
                            }
                            used[static_cast<std::size_t>(s)] = false;
                        }
                    }
                    return false;
                };
                if (place(1)) {
                    AltTensor out(9, 3, p.mode());
                    for (const auto& [idx, value] : terms) {
                        std::vector<int> moved;
                        for (int i : idx) {
                            moved.push_back(slot[static_cast<std::size_t>(i)] + 1);
                        }
                        out.add(moved, value);
                    }
                    return out;
                }
            }
        }
    }
    return std::nullopt;
}

CheckResult six_mode_ranks(double time_limit)
{
    Timer timer;
    Recorder rec;
    const std::vector<std::pair<std::string, std::vector<std::size_t>>> table = {
        {"Null", {0, 0, 0}}, {"Sep", {3, 0, 0}}, {"Bisep", {5, 1, 4}}, {"W", {6, 3, 6}}, {"GHZ", {6, 6, 6}}};
    for (const auto& [label, expected] : table) {
        const AltTensor p = canonical_state(6, label);
        const std::vector<std::size_t> got = {first_order_map(p, 2).rank(), kappa_map(p, {1}).rank(),
                                              kappa_map(p, {2}).rank()};
        rec.require(got == expected, label + " gives " + triple(got));
    }
    return rec.finish(timer, "five six-mode representatives", time_limit);
}

CheckResult seven_mode_ranks(double time_limit)
{
    Timer timer;
    Recorder rec;
    const std::vector<std::pair<std::string, std::vector<std::size_t>>> table = {
        {"I", {0, 0, 0}},  {"II", {0, 3, 0}},  {"III", {0, 5, 1}},  {"IV", {0, 6, 3}}, {"V", {0, 6, 6}},
        {"VI", {1, 7, 1}}, {"VII", {1, 7, 4}}, {"VIII", {2, 7, 6}}, {"IX", {4, 7, 7}}, {"X", {7, 7, 7}}};
    for (const auto& [label, expected] : table) {
        const AltTensor p = canonical_state(7, label);
        const std::vector<std::size_t> got = {seven_covariants(p).N.rank(), first_order_map(p, 2).rank(),
                                              kappa_map(p, {1}).rank()};
        rec.require(got == expected, label + " gives " + triple(got));
    }
    return rec.finish(timer, "ten seven-mode representatives", time_limit);
}

CheckResult eight_mode_ranks(double time_limit)
{
    Timer timer;
    Recorder rec;
    const std::vector<std::pair<std::string, std::vector<std::size_t>>> table = {
        {"XI", {0, 3, 6, 0}},  {"XII", {0, 4, 7, 0}}, {"XIII", {0, 4, 8, 0}},  {"XIV", {0, 5, 8, 1}},
        {"XV", {0, 6, 8, 2}},  {"XVI", {1, 8, 8, 1}}, {"XVII", {1, 8, 8, 2}},  {"XVIII", {1, 8, 8, 4}},
        {"XIX", {2, 8, 8, 2}}, {"XX", {2, 8, 8, 5}},  {"XXI", {3, 8, 8, 7}},   {"XXII", {5, 8, 8, 8}},
        {"XXIII", {8, 8, 8, 8}}};
    for (const auto& [label, expected] : table) {
        const auto cov = eight_covariants(canonical_state(8, label));
        const std::vector<std::size_t> got = {cov.G.rank(), cov.F.rank(), cov.E.rank(), cov.FE.rank()};
        rec.require(got == expected, label + " gives " + triple(got));
    }
    return rec.finish(timer, "thirteen eight-mode representatives", time_limit);
}

CheckResult nine_mode_families(double time_limit)
{
    Timer timer;
    Recorder rec;
    struct Row {
        std::vector<mpq_class> params;
        std::array<bool, 4> zero;
        std::size_t rank_t;
    };
    const std::vector<Row> table = {
        {{1, 2, 5, 3}, {false, false, false, false}, 80}, {{1, 2, 5}, {true, false, false, false}, 78},
        {{1, 2}, {true, true, false, false}, 76},         {{1, 2}, {true, false, true, false}, 72},
        {{1}, {true, true, true, false}, 70},             {{1}, {true, true, true, true}, 56}};
    for (std::size_t f = 0; f < table.size(); ++f) {
        const std::string label = "family" + std::to_string(f + 1);
        const AltTensor p = canonical_state(9, label, table[f].params);
        const NineDeltas d = nine_deltas(nine_js(p));
        const std::array<bool, 4> zero = {d.d132.is_zero(), d.d48.is_zero(), d.d48_prime.is_zero(), d.d24.is_zero()};
        rec.require(zero == table[f].zero, label + " vanishing pattern differs");
        const std::size_t r = t_map(p).rank();
        rec.require(r == table[f].rank_t, label + " rank T " + std::to_string(r));
    }
    return rec.finish(timer, "six nine-mode families", time_limit);
}

CheckResult quartic_routes(std::size_t samples)
{
    Timer timer;
    Recorder rec;
    const AltTensor ghz = canonical_state(6, "GHZ");
    for (auto route : {QuarticRoute::trace, QuarticRoute::freudenthal_block, QuarticRoute::pairing}) {
        rec.require(quartic_d(ghz, route) == q(1), "GHZ value differs from 1");
    }
    for (std::size_t s = 1; s <= samples; ++s) {
        const AltTensor p = random_state(6, 3, s);
        const Scalar t = quartic_d(p, QuarticRoute::trace);
        rec.require(quartic_d(p, QuarticRoute::freudenthal_block) == t && quartic_d(p, QuarticRoute::pairing) == t,
                    "routes disagree for seed " + std::to_string(s));
    }
    return rec.finish(timer, "GHZ value and " + std::to_string(samples) + " random states");
}

CheckResult closed_form_invariants(std::size_t samples)
{
    Timer timer;
    Recorder rec;
    const NineJs anchor = closed_form_js(1, 0, 0, 0);
    rec.require(same_js(anchor, NineJs{q(1), q(1), q(111), q(584)}), "closed form at (1,0,0,0)");
    rec.require(same_js(nine_js(semisimple_state(1, 0, 0, 0)), anchor), "direct value at (1,0,0,0)");
    std::mt19937_64 rng(2024);
    for (std::size_t s = 0; s < samples; ++s) {
        std::array<mpq_class, 4> v;
        for (auto& x : v) {
            x = random_rational(rng, false);
        }
        rec.require(same_js(nine_js(semisimple_state(v[0], v[1], v[2], v[3])), closed_form_js(v[0], v[1], v[2], v[3])),
                    "sample " + std::to_string(s));
    }
    return rec.finish(timer, "anchor and " + std::to_string(samples) + " random quadruples");
}

CheckResult jacobian_factorization(std::size_t samples, const mpq_class& constant)
{
    Timer timer;
    Recorder rec;
    std::mt19937_64 rng(77);
    std::set<std::string> ratios;
    for (std::size_t s = 0; s < samples; ++s) {
        std::array<mpq_class, 4> v;
        for (auto& x : v) {
            x = random_rational(rng);
        }
        const auto& [a, b, c, d] = v;
        auto cube = [](const mpq_class& x) { return mpq_class(x * x * x); };
        const mpq_class f1 = cube(cube(a) + cube(b) - cube(c)) + cube(3 * a * b * c);
        const mpq_class f2 = cube(cube(a) - cube(b) + cube(d)) + cube(3 * a * b * d);
        const mpq_class f3 = cube(cube(c) + cube(b) + cube(d)) - cube(3 * c * b * d);
        const mpq_class f4 = cube(cube(c) + cube(a) - cube(d)) + cube(3 * c * a * d);
        const mpq_class abcd = a * b * c * d;
        const mpq_class expected = constant * abcd * abcd * f1 * f1 * f2 * f2 * f3 * f3 * f4 * f4;
        const Scalar det = jacobian_rank(Scalar(a), Scalar(b), Scalar(c), Scalar(d)).determinant;
        rec.require(det == Scalar(expected), "sample " + std::to_string(s));
        if (expected != 0) {
            mpq_class ratio = det.re() / expected;
            ratios.insert(ratio.get_str());
        }
    }
    std::string summary = std::to_string(samples) + " random quadruples, constant " + constant.get_str() +
                          ", determinant/product ratios {";
    for (auto it = ratios.begin(); it != ratios.end(); ++it) {
        summary += (it == ratios.begin() ? "" : ",") + *it;
    }
    return rec.finish(timer, summary + "}");
}

CheckResult qutrit_relations(std::size_t samples)
{
    Timer timer;
    Recorder rec;
    std::mt19937_64 rng(31);
    for (std::size_t s = 0; s < samples; ++s) {
        const Scalar a(random_rational(rng, false)), b(random_rational(rng, false)), c(random_rational(rng, false));
        const auto residuals = qutrit_relation_residuals(a, b, c);
        for (std::size_t i = 0; i < residuals.size(); ++i) {
            rec.require(residuals[i].is_zero(), "relation " + std::to_string(i) + " sample " + std::to_string(s));
        }
    }
    return rec.finish(timer, std::to_string(samples) + " random normal forms");
}

CheckResult covariance(std::size_t transforms)
{
    Timer timer;
    Recorder rec;
    for (int n = 6; n <= 9; ++n) {
        const AltTensor p = random_state(n, 3, 100 + static_cast<std::uint64_t>(n));
        const InvariantSet base = invariant_set(p);
        bool nonzero = false;
        for (const auto& [name, v] : base.values) {
            nonzero = nonzero || !v.is_zero();
        }
        rec.require(nonzero, "all invariants vanish on the base state for " + std::to_string(n) + " modes");
        for (std::size_t t = 1; t <= transforms; ++t) {
            const InvariantSet moved = invariant_set(slocc_apply(random_unimodular(n, t), p));
            rec.require(moved.values == base.values, std::to_string(n) + " modes, unimodular seed " + std::to_string(t));
        }
        auto weighted = [&](const GroupElement& g, const std::string& what) {
            const InvariantSet moved = invariant_set(slocc_apply(g, p));
            for (const auto& [name, value] : base.values) {
                const int degree = base.degrees.at(name);
                rec.require(degree * 3 % n == 0, name + " weight is fractional");
                const Scalar factor = g.dual_det().pow(static_cast<unsigned>(degree * 3 / n));
                rec.require(moved.values.at(name) == value * factor, name + " weight under " + what);
            }
        };
        weighted(GroupElement::from_dual(DenseMatrix::identity(static_cast<std::size_t>(n), Mode::exact) * q(2)),
                 "scalar 2");
        weighted(random_invertible(n, 5), "random invertible");
    }
    std::size_t labels = 0;
    for (int n = 6; n <= 8; ++n) {
        for (const auto& label : canonical_labels(n)) {
            const AltTensor p = canonical_state(n, label);
            const std::string before = classify(p).label;
            const std::string after = classify(slocc_apply(random_invertible(n, 11 + labels), p)).label;
            rec.require(before == after && before != ClassLabel::unclassified, label + " label changed to " + after);
            ++labels;
        }
    }
    const std::vector<std::vector<mpq_class>> params = {{1, 2, 5, 3}, {1, 2, 5}, {1, 2}, {1, 2}, {1}, {1}, {}};
    for (int f = 1; f <= 7; ++f) {
        const std::string label = "family" + std::to_string(f);
        const AltTensor p = canonical_state(9, label, params[static_cast<std::size_t>(f - 1)]);
        const std::string after = classify(slocc_apply(random_invertible(9, 40 + static_cast<std::uint64_t>(f)), p)).label;
        rec.require(after == label, label + " label changed to " + after);
        ++labels;
    }
    return rec.finish(timer, std::to_string(transforms) + " unimodular transforms per dimension, weights, " +
                                 std::to_string(labels) + " dressed labels");
}

CheckResult freudenthal_identities(std::size_t samples)
{
    Timer timer;
    Recorder rec;
    const double tol = 1e-9;
    std::size_t used = 0;
    for (std::uint64_t seed = 1; used < samples; ++seed) {
        AltTensor p = random_state(6, 3, seed, 3, Mode::floating) +
                      random_state(6, 3, seed + 7919, 3, Mode::floating) * Scalar::imaginary_unit(Mode::floating);
        const Scalar d = quartic_d(p);
        if (invariant_vanishes(d, 4, p.max_abs())) {
            continue;
        }
        ++used;
        const AltTensor hat = freudenthal_dual(p).with_weight(p.weight());
        const Scalar dh = quartic_d(hat);
        rec.require((dh - d).abs() <= tol * d.abs(), "quartic invariant of the dual, seed " + std::to_string(seed));
        const AltTensor twice = freudenthal_dual(hat).with_weight(p.weight());
        rec.require((twice + p).max_abs() <= tol * p.max_abs(), "double dual, seed " + std::to_string(seed));
        for (int sign : {1, -1}) {
            const AltTensor u = p + hat * (Scalar::imaginary_unit(Mode::floating) * Scalar(static_cast<long>(sign), Mode::floating));
            double worst = 0.0;
            for (const auto& r : plucker_residuals(u)) {
                worst = std::max(worst, r.abs());
            }
            rec.require(worst <= tol * u.max_abs() * u.max_abs(), "separability of the sum, seed " + std::to_string(seed));
        }
    }
    return rec.finish(timer, std::to_string(samples) + " random floating GHZ-class states");
}

CheckResult primitive_seven_identities(std::size_t samples)
{
    Timer timer;
    Recorder rec;
    const Scalar zero = Scalar::zero(Mode::exact);
    for (std::uint64_t seed = 1; seed <= samples; ++seed) {
        const std::string tag = " seed " + std::to_string(seed);
        const AltTensor full = random_primitive_seven(seed);
        const SevenSplit split = split_seven(full);
        rec.require(is_primitive(split.three_form, split.two_form), "not primitive" + tag);
        const DenseMatrix w = two_form_matrix(split.two_form);
        const DenseMatrix k = k_matrix_6(split.three_form).matrix;
        const auto cov = seven_covariants(full);
        const Scalar pf = pfaffian(w);
        const Scalar d = quartic_d(split.three_form);
        auto m = [&](int a, int b, int c) { return cov.M.matrix(static_cast<std::size_t>(7 * a + b), static_cast<std::size_t>(c)); };
        auto pc = [&](int c, int i, int j) { return (c == i || c == j) ? zero : split.three_form.get({c + 1, i + 1, j + 1}); };

        std::vector<Scalar> m_b7(36, zero), wtilde(36, zero);
        std::vector<Scalar> m_bc(216, zero);
        for_each_permutation_6([&](const std::array<int, 6>& s, int sign) {
            const Scalar ww = w(static_cast<std::size_t>(s[2]), static_cast<std::size_t>(s[3])) *
                              w(static_cast<std::size_t>(s[4]), static_cast<std::size_t>(s[5]));
            const std::size_t ab = static_cast<std::size_t>(6 * s[0] + s[1]);
            m_b7[ab] += ww * mpq_class(sign, 4);
            wtilde[ab] += ww * mpq_class(sign, 8);
            for (int c = 0; c < 6; ++c) {
                m_bc[ab * 6 + static_cast<std::size_t>(c)] +=
                    pc(c, s[2], s[3]) * w(static_cast<std::size_t>(s[4]), static_cast<std::size_t>(s[5])) * mpq_class(sign, 2);
            }
        });

        bool ok = m(6, 6, 6).is_zero();
        for (int c = 0; c < 6; ++c) {
            ok = ok && m(6, 6, c).is_zero() && m(6, c, 6).is_zero() && m(c, 6, 6).is_zero();
        }
        rec.require(ok, "vanishing components of M" + tag);
        for (int a = 0; a < 6; ++a) {
            for (int c = 0; c < 6; ++c) {
                const Scalar& kac = k(static_cast<std::size_t>(a), static_cast<std::size_t>(c));
                rec.require(m(6, a, c) == kac, "M^7 block" + tag);
                rec.require(m(a, 6, c) == -kac, "M^a row 7" + tag);
            }
            for (int b = 0; b < 6; ++b) {
                if (a == b) {
                    continue;
                }
                const std::size_t ab = static_cast<std::size_t>(6 * a + b);
                rec.require(m(a, b, 6) == m_b7[ab], "M^a column 7" + tag);
                for (int c = 0; c < 6; ++c) {
                    rec.require(m(a, b, c) == m_bc[ab * 6 + static_cast<std::size_t>(c)], "M^a block" + tag);
                }
            }
        }
        const DenseMatrix& nm = cov.N.matrix;
        const DenseMatrix& lm = cov.L.matrix;
        rec.require(nm(6, 6) == q(6) * pf, "N77" + tag);
        rec.require(lm(6, 6) == q(6) * d, "L77" + tag);
        for (std::size_t a = 0; a < 6; ++a) {
            rec.require(nm(a, 6).is_zero() && nm(6, a).is_zero() && lm(a, 6).is_zero() && lm(6, a).is_zero(),
                        "mixed entries" + tag);
            for (std::size_t b = 0; b < 6; ++b) {
                Scalar n_expected = zero, l_expected = zero;
                for (std::size_t c = 0; c < 6; ++c) {
                    n_expected += w(a, c) * k(c, b);
                    l_expected += wtilde[6 * a + c] * k(b, c);
                }
                rec.require(nm(a, b) == q(-3) * n_expected, "N factorization" + tag);
                rec.require(lm(a, b) == q(-12) * l_expected, "L factorization" + tag);
            }
        }
        const Scalar nine_pf_d = q(9) * pf * d;
        rec.require(determinant(nm) == q(-6) * nine_pf_d.pow(3), "det N" + tag);
        rec.require(seven_j(full) == q(1, 4) * pf * d, "seven-mode invariant" + tag);
    }
    return rec.finish(timer, std::to_string(samples) + " random primitive pairs");
}

CheckResult pinning(std::size_t samples)
{
    Timer timer;
    Recorder rec;
    std::mt19937_64 rng(12);
    auto positive = [&](long limit) { return static_cast<long>(rng() % static_cast<unsigned long>(limit)) + 1; };
    for (std::size_t s = 0; s < 100; ++s) {
        const long c = positive(4);
        const long b = c + positive(4) - 1;
        const long a2_min = b * b + c * c;
        long a = 1;
        while (a * a < a2_min) {
            ++a;
        }
        a += positive(3) - 1;
        AltTensor p(6, 3, Mode::exact);
        p.set({1, 2, 3}, q(a));
        p.set({1, 4, 5}, q(b));
        p.set({2, 4, 6}, q(c));
        rec.require(quartic_d(p).is_zero(), "quartic invariant of pinnable form");
        const KlyachkoReport exact = klyachko_check(occupation_spectrum(p));
        rec.require(exact.constraints[0].saturated, "exact saturation");
        const AltTensor rotated = slocc_apply(random_unitary(6, s + 1), p.as_mode(Mode::floating));
        const KlyachkoReport r = klyachko_check(occupation_spectrum(rotated));
        rec.require(std::abs(r.constraints[0].slack) <= 1e-9, "rotated saturation");
    }
    for (std::size_t s = 0; s < 20; ++s) {
        AltTensor p(7, 3, Mode::exact);
        const std::vector<std::vector<int>> support = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}};
        for (const auto& t : support) {
            p.set(t, Scalar(random_rational(rng)));
        }
        const auto cov = seven_covariants(p);
        rec.require(cov.N.rank() == 1 && kappa_map(p, {1}).rank() == 4, "triple pinned form ranks");
    }
    const std::vector<int> pair_side = {1, 2, 4, 7};
    for (std::size_t s = 0; s < 20; ++s) {
        AltTensor p(7, 3, Mode::exact);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                for (int t : {3, 5, 6}) {
                    p.add({pair_side[i], pair_side[j], t}, Scalar(random_rational(rng)));
                }
            }
        }
        rec.require(seven_covariants(p).N.rank() == 4 && kappa_map(p, {1}).rank() == 7, "pair-times-triple ranks");
    }
    for (std::uint64_t seed = 1; seed <= samples; ++seed) {
        const AltTensor p = slocc_apply(random_unitary(7, seed), random_state(7, 3, seed, 3, Mode::floating));
        const PinningReport r = pinning_analysis(p);
        rec.require(r.class_label.label == "X", "sample outside class X");
        rec.require(r.klyachko.saturated_count() == 0, "class X sample saturates a constraint");
    }
    return rec.finish(timer, "100 pinnable six-mode states, 40 seven-mode forms, " + std::to_string(samples) +
                                 " class X samples");
}

CheckResult nilpotent_independence()
{
    Timer timer;
    Recorder rec;
    const std::vector<AltTensor> semisimple = {semisimple_state(2, 0, 0, 0), semisimple_state(mpq_class(-3, 2), 0, 0, 0)};
    std::vector<NineJs> base;
    for (const auto& s : semisimple) {
        base.push_back(nine_js(s));
    }
    const std::vector<std::string> seven_labels = canonical_labels(7);
    std::size_t count = 0;
    for (int n = 6; n <= 8; ++n) {
        for (const auto& label : canonical_labels(n)) {
            if (n == 8 && std::find(seven_labels.begin(), seven_labels.end(), label) != seven_labels.end()) {
                continue;
            }
            const AltTensor rep = canonical_state(n, label);
            if (rep.is_zero()) {
                continue;
            }
            ++count;
            rec.require(all_zero(nine_js(extend_dimension(rep, 9))), label + " embedded has nonzero invariants");
            const auto placed = contractible_embedding(rep);
            rec.require(placed.has_value(), label + " has no contractible placement");
            if (!placed) {
                continue;
            }
            rec.require(all_zero(nine_js(*placed)), label + " placed has nonzero invariants");
            const std::size_t which = count % semisimple.size();
            rec.require(same_js(nine_js(semisimple[which] + *placed), base[which]), label + " changes the invariants");
        }
    }
    return rec.finish(timer, std::to_string(count) + " lower-dimensional representatives");
}

}  // namespace trifermion::checks
