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
#include <map>
#include <string>

#include "doctest.h"
#include "trifermion/canonical.hpp"
#include "trifermion/covariants.hpp"
#include "trifermion/oracle.hpp"

using namespace trifermion;

namespace {

Scalar q(long n, long d = 1) { return Scalar(mpq_class(n, d)); }

}  // namespace

TEST_CASE("six-mode representatives have the expected covariant ranks")
{
    const std::map<std::string, std::array<std::size_t, 3>> expected = {
        {"Null", {0, 0, 0}}, {"Sep", {3, 0, 0}}, {"Bisep", {5, 1, 4}}, {"W", {6, 3, 6}}, {"GHZ", {6, 6, 6}}};
    for (const auto& [label, ranks] : expected) {
        CAPTURE(label);
        AltTensor p = canonical_state(6, label);
        CHECK(first_order_map(p, 2).rank() == ranks[0]);
        CHECK(kappa_map(p, {1}).rank() == ranks[1]);
        CHECK(kappa_map(p, {2}).rank() == ranks[2]);
    }
}

TEST_CASE("first order maps obey the transpose identity")
{
    AltTensor p = canonical_state(6, "W");
    for (int l = 0; l <= 3; ++l) {
        CHECK(first_order_map(p, l).rank() == first_order_map(p, 3 - l).rank());
    }
    CHECK_THROWS(first_order_map(p, 4));
}

TEST_CASE("quadratic six-mode covariant of the GHZ state is diagonal")
{
    DenseMatrix k = k_matrix_6(canonical_state(6, "GHZ")).matrix;
    for (std::size_t a = 0; a < 6; ++a) {
        for (std::size_t b = 0; b < 6; ++b) {
            long want = a == b ? (a < 3 ? 1 : -1) : 0;
            CHECK(k(a, b) == Scalar(want, Mode::exact));
        }
    }
}

TEST_CASE("dual trivector and Freudenthal dual of the GHZ state")
{
    AltTensor p = canonical_state(6, "GHZ");
    AltTensor sep = canonical_state(6, "Sep");
    CHECK(dual_trivector(sep).is_zero());
    AltTensor hat = freudenthal_dual(p);
    AltTensor want = AltTensor::monomial(6, {1, 2, 3}, Scalar(0, -1)) + AltTensor::monomial(6, {4, 5, 6}, Scalar(0, 1));
    CHECK(hat.coefficients() == want.coefficients());
    AltTensor twice = freudenthal_dual(hat);
    CHECK(twice.coefficients() == (-p).coefficients());
    CHECK_THROWS(freudenthal_dual(canonical_state(6, "W")));
}

TEST_CASE("exact square roots of Gaussian rationals")
{
    CHECK(*exact_sqrt(q(9, 4)) == q(3, 2));
    CHECK(*exact_sqrt(q(-4)) == Scalar(0, 2));
    CHECK(*exact_sqrt(Scalar(0, 2)) == Scalar(1, 1));
    CHECK_FALSE(exact_sqrt(q(2)).has_value());
}

TEST_CASE("seven-mode representatives have the expected covariant ranks")
{
    const std::map<std::string, std::array<std::size_t, 3>> expected = {
        {"I", {0, 0, 0}}, {"II", {0, 3, 0}}, {"III", {0, 5, 1}}, {"IV", {0, 6, 3}}, {"V", {0, 6, 6}},
        {"VI", {1, 7, 1}}, {"VII", {1, 7, 4}}, {"VIII", {2, 7, 6}}, {"IX", {4, 7, 7}}, {"X", {7, 7, 7}}};
    for (const auto& [label, ranks] : expected) {
        CAPTURE(label);
        AltTensor p = canonical_state(7, label);
        auto cov = seven_covariants(p);
        CHECK(cov.N.rank() == ranks[0]);
        CHECK(first_order_map(p, 2).rank() == ranks[1]);
        CHECK(kappa_map(p, {1}).rank() == ranks[2]);
    }
}

TEST_CASE("seven-mode calibration state")
{
    AltTensor p = AltTensor(7, 3, Mode::exact);
    p.set({1, 2, 3}, q(1));
    p.set({1, 5, 6}, q(-1));
    p.set({2, 4, 6}, q(1));
    p.set({3, 4, 5}, q(-1));
    p.set({1, 4, 7}, q(1));
    p.set({2, 5, 7}, q(1));
    p.set({3, 6, 7}, q(1));
    auto cov = seven_covariants(p);
    CHECK(cov.N.matrix(6, 6) == q(-6));
    for (std::size_t a = 0; a < 6; ++a) {
        CHECK(cov.N.matrix(a, 6).is_zero());
    }
    CHECK(cov.B.matrix == cov.N.matrix * q(-1, 6));
}

TEST_CASE("eight-mode representatives have the expected covariant ranks")
{
    const std::map<std::string, std::array<std::size_t, 4>> expected = {
        {"XI", {0, 3, 6, 0}},   {"XII", {0, 4, 7, 0}},   {"XIII", {0, 4, 8, 0}}, {"XIV", {0, 5, 8, 1}},
        {"XV", {0, 6, 8, 2}},   {"XVI", {1, 8, 8, 1}},   {"XVII", {1, 8, 8, 2}}, {"XVIII", {1, 8, 8, 4}},
        {"XIX", {2, 8, 8, 2}},  {"XX", {2, 8, 8, 5}},    {"XXI", {3, 8, 8, 7}},  {"XXII", {5, 8, 8, 8}},
        {"XXIII", {8, 8, 8, 8}}};
    for (const auto& [label, ranks] : expected) {
        CAPTURE(label);
        auto cov = eight_covariants(canonical_state(8, label));
        CHECK(cov.G.rank() == ranks[0]);
        CHECK(cov.F.rank() == ranks[1]);
        CHECK(cov.E.rank() == ranks[2]);
        CHECK(cov.FE.rank() == ranks[3]);
    }
}

TEST_CASE("nine-mode cubic covariant ranks on semisimple families")
{
    const std::array<std::array<long, 4>, 6> params = {
        {{1, 2, 5, 3}, {1, -2, 0, 5}, {1, 0, 0, 2}, {1, 2, -2, 0}, {0, -1, 1, 0}, {1, 0, 0, 0}}};
    const std::array<std::size_t, 6> ranks = {80, 78, 76, 72, 70, 56};
    for (std::size_t i = 0; i < params.size(); ++i) {
        CAPTURE(i);
        const auto& c = params[i];
        AltTensor p = semisimple_state(c[0], c[1], c[2], c[3]);
        CHECK(t_map(p).rank() == ranks[i]);
    }
}

TEST_CASE("traces of odd powers of the cubic covariant vanish")
{
    AltTensor p = semisimple_state(1, 2, 5, 3);
    CHECK(t_power_trace(p, 1).is_zero());
    CHECK(t_power_trace(p, 2).is_zero());
    CHECK(t_power_trace(p, 3).is_zero());
}

TEST_CASE("covariant maps are homogeneous of their recorded state degree")
{
    auto check = [](const ExtLinearMap& whole, const ExtLinearMap& half) {
        CAPTURE(whole.name);
        mpq_class factor = 1;
        for (int i = 0; i < whole.state_degree; ++i) {
            factor /= 2;
        }
        DenseMatrix expected = whole.matrix;
        expected *= Scalar(factor);
        CHECK(half.matrix == expected);
    };
    const Scalar half = q(1, 2);
    const AltTensor p6 = random_state(6, 3, 21);
    check(k_matrix_6(p6), k_matrix_6(p6 * half));
    check(kappa_map(p6, {2}), kappa_map(p6 * half, {2}));
    const AltTensor p7 = random_state(7, 3, 22);
    const SevenCovariants c7 = seven_covariants(p7);
    const SevenCovariants h7 = seven_covariants(p7 * half);
    for (const auto& [a, b] : {std::pair{&c7.M, &h7.M}, {&c7.N, &h7.N}, {&c7.L, &h7.L}, {&c7.B, &h7.B}}) {
        check(*a, *b);
    }
    const AltTensor p8 = random_state(8, 3, 23);
    const EightCovariants c8 = eight_covariants(p8);
    const EightCovariants h8 = eight_covariants(p8 * half);
    for (const auto& [a, b] : {std::pair{&c8.F, &h8.F}, {&c8.E, &h8.E}, {&c8.G, &h8.G}, {&c8.H, &h8.H},
                               {&c8.FE, &h8.FE}, {&c8.FE_literal, &h8.FE_literal}}) {
        check(*a, *b);
    }
    const AltTensor p9 = random_state(9, 3, 24);
    check(t_map(p9), t_map(p9 * half));
}
