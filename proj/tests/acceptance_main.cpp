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

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "acceptance_checks.hpp"

using namespace trifermion::checks;

int main()
{
    const mpq_class stated_constant = mpq_class(mpz_class(16384) * 81 * 78125 * 121 * 6 * 199);
    const std::vector<std::pair<std::string, std::function<CheckResult()>>> criteria = {
        {"six-mode rank triples", [] { return six_mode_ranks(); }},
        {"seven-mode rank triples", [] { return seven_mode_ranks(); }},
        {"eight-mode rank quadruples", [] { return eight_mode_ranks(); }},
        {"nine-mode vanishing patterns and rank T", [] { return nine_mode_families(); }},
        {"quartic invariant routes", [] { return quartic_routes(200); }},
        {"closed-form nine-mode invariants", [] { return closed_form_invariants(50); }},
        {"Jacobian determinant factorization", [&] { return jacobian_factorization(20, stated_constant); }},
        {"qutrit invariant relations", [] { return qutrit_relations(30); }},
        {"covariance and weights", [] { return covariance(50); }},
        {"Freudenthal dual identities", [] { return freudenthal_identities(100); }},
        {"primitive seven-mode identities", [] { return primitive_seven_identities(100); }},
        {"occupation number pinning", [] { return pinning(200); }},
        {"independence of the nilpotent part", [] { return nilpotent_independence(); }},
    };
    // Criteria whose literal statement is known not to hold; see README.
    const std::set<std::size_t> known_unattainable = {7};
    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        CheckResult r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        const std::size_t number = i + 1;
        std::printf("%s %zu %s: %s [%.2f s]%s\n", r.pass ? "PASS" : "FAIL", number, criteria[i].first.c_str(),
                    r.detail.c_str(), r.seconds,
                    (!r.pass && known_unattainable.count(number)) ? " (documented)" : "");
        if (r.pass == (known_unattainable.count(number) > 0)) {
            ++unexpected;
        }
    }
    std::fflush(stdout);
    return unexpected == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
