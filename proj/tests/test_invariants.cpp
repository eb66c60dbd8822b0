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

#include <array>
#include <string>

#include "doctest.h"
#include "trifermion/canonical.hpp"
#include "trifermion/covariants.hpp"
#include "trifermion/invariants.hpp"
#include "trifermion/oracle.hpp"

using namespace trifermion;

namespace {

Scalar q(long n, long d = 1) { return Scalar(mpq_class(n, d)); }

std::vector<Scalar> qubits(const std::array<long, 8>& v, long den = 1)
{
    std::vector<Scalar> out;
    for (long x : v) {
        out.push_back(q(x, den));
    }
    return out;
}

AltTensor sample(int family)
{
    switch (family) {
    case 1:
        return semisimple_state(1, 2, 5, 3);
    case 2:
        return semisimple_state(1, -2, 0, 5);
    case 3:
        return semisimple_state(1, 0, 0, 2);
    case 4:
        return semisimple_state(1, 2, -2, 0);
    case 5:
        return semisimple_state(0, -1, 1, 0);
    case 6:
        return semisimple_state(1, 0, 0, 0);
    default:
        return AltTensor(9, 3, Mode::exact);
    }
}

}  // namespace

TEST_CASE("quartic invariant anchors")
{
    CHECK(quartic_d(canonical_state(6, "GHZ")) == q(1));
    CHECK(quartic_d(canonical_state(6, "Sep")).is_zero());
    CHECK(quartic_d(canonical_state(6, "W")).is_zero());
    AltTensor ghz_minus = embed_three_qubits(qubits({1, 0, 0, -1, 0, -1, -1, 0}, 2));
    CHECK(quartic_d(ghz_minus) == q(-1, 4));
}

TEST_CASE("quartic invariant routes agree")
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        AltTensor p = random_state(6, 3, seed);
        Scalar d = quartic_d(p, QuarticRoute::trace);
        CHECK(quartic_d(p, QuarticRoute::freudenthal_block) == d);
        CHECK(quartic_d(p, QuarticRoute::pairing) == d);
    }
}

TEST_CASE("quadratic covariant squares to the quartic invariant and is traceless")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        AltTensor p = random_state(6, 3, seed);
        DenseMatrix k = k_matrix_6(p).matrix;
        Scalar d = quartic_d(p);
        CHECK(k.trace().is_zero());
        CHECK(k * k == DenseMatrix::identity(6, Mode::exact) * d);
        CHECK(determinant(k) == -d.pow(3));
    }
}

TEST_CASE("Cayley hyperdeterminant agrees with the embedded quartic invariant")
{
    CHECK(cayley_hyperdeterminant(qubits({1, 0, 0, 0, 0, 0, 0, 1})) == q(1));
    CHECK(three_tangle(qubits({1, 0, 0, 0, 0, 0, 0, 1})) == doctest::Approx(1.0));
    CHECK(cayley_hyperdeterminant(qubits({0, 1, 1, 0, 1, 0, 0, 0})).is_zero());
    CHECK(cayley_hyperdeterminant(qubits({1, 0, 0, 0, 0, 0, 0, 0})).is_zero());
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        AltTensor r = random_state(3, 3, seed);
        std::vector<Scalar> psi;
        AltTensor amp = random_state(8, 1, seed);
        for (std::size_t i = 0; i < 8; ++i) {
            psi.push_back(amp.coefficient(i));
        }
        CHECK(quartic_d(embed_three_qubits(psi)) == cayley_hyperdeterminant(psi));
    }
}

TEST_CASE("seven-mode invariant vanishes below the top class")
{
    for (const std::string label : {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"}) {
        CAPTURE(label);
        CHECK(seven_j(canonical_state(7, label)).is_zero());
    }
    AltTensor top = canonical_state(7, "X");
    auto split = split_seven(top);
    Scalar expected = pfaffian(two_form_matrix(split.two_form)) * quartic_d(split.three_form) * q(1, 4);
    CHECK_FALSE(expected.is_zero());
    CHECK(seven_j(top) == expected);
}

TEST_CASE("eight-mode invariant is nonzero only on the top class")
{
    for (const auto& label : canonical_labels(8)) {
        CAPTURE(label);
        Scalar value = eight_i(canonical_state(8, label));
        CHECK(value.is_zero() == (label != "XXIII"));
    }
}

TEST_CASE("nine-mode invariants of the first block")
{
    NineJs js = nine_js(nine_block(1));
    CHECK(js.j12 == q(1));
    CHECK(js.j18 == q(1));
    CHECK(js.j24 == q(111));
    CHECK(js.j30 == q(584));
    NineJs closed = closed_form_js(1, 0, 0, 0);
    CHECK(closed.j12 == q(1));
    CHECK(closed.j18 == q(1));
    CHECK(closed.j24 == q(111));
    CHECK(closed.j30 == q(584));
    NineJs zero = closed_form_js(0, 0, 0, 0);
    CHECK(zero.j30.is_zero());
}

TEST_CASE("nine-mode invariants match the closed forms")
{
    const std::array<std::array<long, 4>, 4> points = {{{1, 1, 1, 1}, {2, -1, 3, 1}, {1, 2, 5, 3}, {-3, 1, 2, -2}}};
    for (const auto& c : points) {
        NineJs direct = nine_js(semisimple_state(c[0], c[1], c[2], c[3]));
        NineJs closed = closed_form_js(c[0], c[1], c[2], c[3]);
        CHECK(direct.j12 == closed.j12);
        CHECK(direct.j18 == closed.j18);
        CHECK(direct.j24 == closed.j24);
        CHECK(direct.j30 == closed.j30);
    }
}

TEST_CASE("delta invariants separate the semisimple families")
{
    // (d132, d48, d48', d24) nonzero flags.
    const std::array<std::array<bool, 4>, 6> pattern = {{{true, true, true, true},
                                                         {false, true, true, true},
                                                         {false, false, true, true},
                                                         {false, true, false, true},
                                                         {false, false, false, true},
                                                         {false, false, false, false}}};
    for (int f = 1; f <= 6; ++f) {
        CAPTURE(f);
        NineDeltas d = nine_deltas(nine_js(sample(f)));
        CHECK(!d.d132.is_zero() == pattern[f - 1][0]);
        CHECK(!d.d48.is_zero() == pattern[f - 1][1]);
        CHECK(!d.d48_prime.is_zero() == pattern[f - 1][2]);
        CHECK(!d.d24.is_zero() == pattern[f - 1][3]);
    }
    NineDeltas nil = nine_deltas(nine_js(AltTensor(9, 3, Mode::exact)));
    CHECK(nil.d24.is_zero());
}

TEST_CASE("degree 48 invariant on the fourth family has the stated closed form")
{
    for (long a : {1, 2, -3}) {
        for (long b : {1, 3}) {
            mpq_class am(a), bm(b);
            NineDeltas d = nine_deltas(closed_form_js(am, bm, -bm, 0));
            mpq_class a3 = am * am * am, b3 = bm * bm * bm;
            mpq_class base = (a3 - b3);
            mpq_class tail = am * am * am * am + 8 * am * b3;
            mpq_class want = mpq_class(4 * 5 * 121 * 39601) * b3 * b3 * b3;
            for (int i = 0; i < 9; ++i) {
                want *= base;
            }
            want *= tail * tail * tail;
            CHECK(d.d48 == Scalar(want));
        }
    }
}

TEST_CASE("qutrit invariants relate to the fermionic ones")
{
    const std::array<std::array<long, 3>, 4> points = {{{1, 0, 0}, {1, 2, 3}, {2, -1, 1}, {3, 1, -2}}};
    for (const auto& c : points) {
        CAPTURE(c[0]);
        CAPTURE(c[1]);
        CAPTURE(c[2]);
        for (const Scalar& r : qutrit_relation_residuals(q(c[0]), q(c[1]), q(c[2]))) {
            CHECK(r.is_zero());
        }
    }
    QutritInvariants base = qutrit_normal_form_invariants(q(1), q(0), q(0));
    CHECK(base.i6 == q(1));
    CHECK(base.i9.is_zero());
    CHECK(base.i12.is_zero());
    CHECK(base.d21.is_zero());
}

TEST_CASE("Jacobian of the closed forms")
{
    JacobianResult r = jacobian_rank(q(1), q(2), q(5), q(3));
    CHECK(r.rank == 4);
    CHECK(r.determinant == jacobian_determinant_closed_form(q(1), q(2), q(5), q(3)));
    CHECK(jacobian_rank(q(1), q(0), q(0), q(0)).rank == 1);
    CHECK(jacobian_rank(q(1), q(-2), q(0), q(5)).rank == 3);
}

TEST_CASE("invariants scale with their homogeneous degree")
{
    const Scalar lambda = q(2, 3);
    for (int n : {6, 7, 8}) {
        AltTensor p = random_state(n, 3, 11U + static_cast<unsigned>(n));
        InvariantSet base = invariant_set(p);
        InvariantSet scaled = invariant_set(p * lambda);
        for (const auto& [name, value] : base.values) {
            CAPTURE(name);
            CHECK(scaled.values.at(name) == value * lambda.pow(static_cast<unsigned>(base.degrees.at(name))));
        }
    }
}
