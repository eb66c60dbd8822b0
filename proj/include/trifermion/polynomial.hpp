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

#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "trifermion/scalar.hpp"

namespace trifermion {

// Exact multivariate polynomial with rational coefficients over named variables.
class Polynomial {
public:
    using Exponents = std::vector<int>;

    explicit Polynomial(std::vector<std::string> variables);

    static Polynomial constant(std::vector<std::string> variables, const mpq_class& value);
    static Polynomial variable(std::vector<std::string> variables, const std::string& name);

    // Accepts +, -, *, ^ with nonnegative integer exponents, parentheses and
    // implicit multiplication by juxtaposition.
    static Polynomial parse(const std::string& text, std::vector<std::string> variables);

    const std::vector<std::string>& variables() const { return variables_; }
    const std::map<Exponents, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    bool is_homogeneous() const;

    Polynomial derivative(const std::string& name) const;
    mpq_class evaluate(const std::vector<mpq_class>& values) const;
    Scalar evaluate(const std::vector<Scalar>& values) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const mpq_class& s);
    Polynomial pow(unsigned n) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const mpq_class& s) { return a *= s; }

    bool operator==(const Polynomial& o) const { return variables_ == o.variables_ && terms_ == o.terms_; }

private:
    void require_same(const Polynomial& o) const;
    void add_term(const Exponents& e, const mpq_class& c);

    std::vector<std::string> variables_;
    std::map<Exponents, mpq_class> terms_;
};

}  // namespace trifermion
