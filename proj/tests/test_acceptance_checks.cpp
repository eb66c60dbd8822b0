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
#include "doctest.h"

using namespace trifermion::checks;

namespace {

void expect(const CheckResult& r)
{
    INFO(r.detail);
    CHECK(r.pass);
}

}  // namespace

TEST_CASE("rank tables")
{
    expect(six_mode_ranks(10.0));
    expect(seven_mode_ranks(10.0));
    expect(eight_mode_ranks(60.0));
    expect(nine_mode_families(120.0));
}

TEST_CASE("quartic routes on a reduced sample") { expect(quartic_routes(20)); }

TEST_CASE("closed-form invariants on a reduced sample") { expect(closed_form_invariants(3)); }

TEST_CASE("Jacobian determinant matches the factored product with constant 61")
{
    expect(jacobian_factorization(3, mpq_class(mpz_class(16384) * 81 * 78125 * 121 * 61 * 199)));
}

TEST_CASE("Jacobian determinant differs from the factored product with constant 6")
{
    CheckResult r = jacobian_factorization(2, mpq_class(mpz_class(16384) * 81 * 78125 * 121 * 6 * 199));
    INFO(r.detail);
    CHECK_FALSE(r.pass);
    CHECK(r.detail.find("{61/6}") != std::string::npos);
}

TEST_CASE("qutrit relations on a reduced sample") { expect(qutrit_relations(5)); }

TEST_CASE("covariance on a reduced sample") { expect(covariance(2)); }

TEST_CASE("Freudenthal identities on a reduced sample") { expect(freudenthal_identities(20)); }

TEST_CASE("primitive seven-mode identities on a reduced sample") { expect(primitive_seven_identities(10)); }

TEST_CASE("pinning on a reduced sample") { expect(pinning(20)); }

TEST_CASE("nilpotent independence") { expect(nilpotent_independence()); }
