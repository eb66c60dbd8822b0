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

#include "trifermion/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace trifermion {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& variables) : text_(text), variables_(variables) {}

    Polynomial run()
    {
        Polynomial out = sum();
        skip();
        if (pos_ != text_.size()) {
            fail("unexpected character");
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool peek(char c)
    {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool starts_factor()
    {
        skip();
        if (pos_ >= text_.size()) {
            return false;
        }
        char c = text_[pos_];
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
    }

    Polynomial sum()
    {
        Polynomial out(variables_);
        bool first = true;
        while (true) {
            int sign = 1;
            if (peek('+')) {
                ++pos_;
            } else if (peek('-')) {
                ++pos_;
                sign = -1;
            } else if (!first) {
                break;
            }
            Polynomial t = product();
            if (sign < 0) {
                out -= t;
            } else {
                out += t;
            }
            first = false;
        }
        return out;
    }

    Polynomial product()
    {
        Polynomial out = power();
        while (true) {
            if (peek('*')) {
                ++pos_;
                out *= power();
            } else if (peek('/')) {
                ++pos_;
                Polynomial d = power();
                if (d.total_degree() != 0) {
                    fail("division by a non-constant");
                }
                out *= 1 / d.terms().begin()->second;
            } else if (starts_factor()) {
                out *= power();
            } else {
                break;
            }
        }
        return out;
    }

    Polynomial power()
    {
        Polynomial base = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("exponent expected");
            }
            return base.pow(static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start))));
        }
        return base;
    }

    Polynomial atom()
    {
        skip();
        if (pos_ >= text_.size()) {
            fail("unexpected end");
        }
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = sum();
            if (!peek(')')) {
                fail("closing parenthesis expected");
            }
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            return Polynomial::constant(variables_, mpq_class(text_.substr(start, pos_ - start)));
        }
        // Longest variable name at the cursor, so juxtaposed names need no separator.
        const std::string* best = nullptr;
        for (const auto& v : variables_) {
            if (text_.compare(pos_, v.size(), v) == 0 && (!best || v.size() > best->size())) {
                best = &v;
            }
        }
        if (best) {
            pos_ += best->size();
            return Polynomial::variable(variables_, *best);
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        std::string name = text_.substr(start, pos_ - start);
        fail("unknown variable '" + name + "'");
    }

    const std::string& text_;
    const std::vector<std::string>& variables_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const mpq_class& value)
{
    Polynomial p(std::move(variables));
    p.add_term(Exponents(p.variables_.size(), 0), value);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, const std::string& name)
{
    Polynomial p(std::move(variables));
    auto it = std::find(p.variables_.begin(), p.variables_.end(), name);
    if (it == p.variables_.end()) {
        throw std::invalid_argument("unknown variable " + name);
    }
    Exponents e(p.variables_.size(), 0);
    e[static_cast<std::size_t>(it - p.variables_.begin())] = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::parse(const std::string& text, std::vector<std::string> variables)
{
    return Parser(text, variables).run();
}

int Polynomial::total_degree() const
{
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int x : e) {
            d += x;
        }
        best = std::max(best, d);
    }
    return best;
}

bool Polynomial::is_homogeneous() const
{
    const int d = total_degree();
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) {
            s += x;
        }
        if (s != d) {
            return false;
        }
    }
    return true;
}

void Polynomial::require_same(const Polynomial& o) const
{
    if (variables_ != o.variables_) {
        throw std::invalid_argument("polynomials over different variables");
    }
}

void Polynomial::add_term(const Exponents& e, const mpq_class& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Polynomial Polynomial::derivative(const std::string& name) const
{
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) {
        throw std::invalid_argument("unknown variable " + name);
    }
    const std::size_t v = static_cast<std::size_t>(it - variables_.begin());
    Polynomial out(variables_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) {
            continue;
        }
        Exponents f = e;
        f[v] -= 1;
        out.add_term(f, c * e[v]);
    }
    return out;
}

mpq_class Polynomial::evaluate(const std::vector<mpq_class>& values) const
{
    if (values.size() != variables_.size()) {
        throw std::invalid_argument("wrong number of polynomial arguments");
    }
    mpq_class total = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) {
                t *= values[i];
            }
        }
        total += t;
    }
    return total;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& values) const
{
    if (values.size() != variables_.size() || values.empty()) {
        throw std::invalid_argument("wrong number of polynomial arguments");
    }
    const Mode mode = values.front().mode();
    Scalar total = Scalar::zero(mode);
    for (const auto& [e, c] : terms_) {
        Scalar t = Scalar::one(mode) * c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                t *= values[i].pow(static_cast<unsigned>(e[i]));
            }
        }
        total += t;
    }
    return total;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    require_same(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    require_same(o);
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    require_same(o);
    Polynomial out(variables_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += e2[i];
            }
            out.add_term(e, c1 * c2);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

Polynomial& Polynomial::operator*=(const mpq_class& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) {
        c *= s;
    }
    return *this;
}

Polynomial Polynomial::pow(unsigned n) const
{
    Polynomial result = constant(variables_, 1);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1U) {
            result *= base;
        }
        n >>= 1U;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

}  // namespace trifermion
