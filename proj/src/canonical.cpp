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

#include "trifermion/canonical.hpp"

#include <algorithm>
#include <map>

namespace trifermion {

namespace {

Scalar q(const mpq_class& v) { return Scalar(v); }

AltTensor six_state(const std::vector<std::vector<int>>& monomials, const mpq_class& c = 1)
{
    AltTensor p(6, 3, Mode::exact);
    for (const auto& m : monomials) {
        p.add(m, q(c));
    }
    return p;
}

AltTensor complex_sum(const std::vector<std::vector<int>>& slot_lists)
{
    AltTensor p(7, 3, Mode::exact);
    for (const auto& s : slot_lists) {
        p += complex_seven_monomial(s);
    }
    p *= Scalar(mpq_class(1, 2));
    return p;
}

AltTensor seven_state(const std::string& label)
{
    const std::vector<std::vector<int>> sympl = {{1, 4, 7}, {2, 5, 7}, {3, 6, 7}};
    const std::map<std::string, std::vector<std::vector<int>>> base = {
        {"I", {}},
        {"II", {{1, 2, 3}}},
        {"III", {{1, 2, 3}, {1, 5, 6}}},
        {"IV", {{1, 2, 6}, {1, 5, 3}, {4, 2, 3}}},
        {"V", {{1, 2, 3}, {4, 5, 6}}},
    };
    const std::map<std::string, std::string> with_sympl = {
        {"VI", "I"}, {"VII", "II"}, {"VIII", "III"}, {"IX", "IV"}, {"X", "V"},
    };
    if (auto it = base.find(label); it != base.end()) {
        return complex_sum(it->second);
    }
    if (auto it = with_sympl.find(label); it != with_sympl.end()) {
        auto slots = base.at(it->second);
        slots.insert(slots.end(), sympl.begin(), sympl.end());
        return complex_sum(slots);
    }
    throw std::invalid_argument("unknown seven-mode class " + label);
}

mpq_class cube(const mpq_class& x) { return x * x * x; }

void require_count(int family, const std::vector<mpq_class>& params)
{
    if (static_cast<int>(params.size()) != family_parameter_count(family)) {
        throw std::invalid_argument("family" + std::to_string(family) + " expects " +
                                    std::to_string(family_parameter_count(family)) + " parameters");
    }
}

int family_number(const std::string& label)
{
    const std::string prefix = "family";
    if (label.size() != prefix.size() + 1 || label.compare(0, prefix.size(), prefix) != 0) {
        return 0;
    }
    int f = label.back() - '0';
    return f >= 1 && f <= 7 ? f : 0;
}

}  // namespace

std::vector<std::string> canonical_labels(int dimension)
{
    switch (dimension) {
    case 6:
        return {"Null", "Sep", "Bisep", "W", "GHZ", "GHZ+", "GHZ-"};
    case 7:
        return {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"};
    case 8:
        return {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI", "XII",
                "XIII", "XIV", "XV", "XVI", "XVII", "XVIII", "XIX", "XX", "XXI", "XXII", "XXIII"};
    case 9:
        return {"family1", "family2", "family3", "family4", "family5", "family6", "family7"};
    default:
        return {};
    }
}

bool is_real_label(const std::string& label) { return label == "GHZ+" || label == "GHZ-"; }

std::string classified_label(int dimension, const std::string& label, bool real)
{
    if (!real && is_real_label(label)) {
        return "GHZ";
    }
    static const std::map<std::string, std::string> six_mode_equivalent = {
        {"I", "Null"}, {"II", "Sep"}, {"III", "Bisep"}, {"IV", "W"}, {"V", "GHZ"}};
    if (dimension == 8) {
        const auto it = six_mode_equivalent.find(label);
        if (it != six_mode_equivalent.end()) {
            return it->second;
        }
    }
    return label;
}

int family_parameter_count(int family)
{
    switch (family) {
    case 1:
        return 4;
    case 2:
        return 3;
    case 3:
    case 4:
        return 2;
    case 5:
    case 6:
        return 1;
    case 7:
        return 0;
    default:
        throw std::invalid_argument("unknown family " + std::to_string(family));
    }
}

std::vector<FamilyConstraint> family_constraints(int family, const std::vector<mpq_class>& params)
{
    require_count(family, params);
    std::vector<FamilyConstraint> out;
    switch (family) {
    case 1: {
        const auto &a = params[0], &b = params[1], &c = params[2], &d = params[3];
        out.push_back({"abcd", a * b * c * d});
        out.push_back({"(b^3+c^3+d^3)^3-(3bcd)^3", cube(cube(b) + cube(c) + cube(d)) - cube(3 * b * c * d)});
        out.push_back({"(a^3+c^3-d^3)^3+(3acd)^3", cube(cube(a) + cube(c) - cube(d)) + cube(3 * a * c * d)});
        out.push_back({"(a^3-b^3+d^3)^3+(3abd)^3", cube(cube(a) - cube(b) + cube(d)) + cube(3 * a * b * d)});
        out.push_back({"(a^3+b^3-c^3)^3+(3abc)^3", cube(cube(a) + cube(b) - cube(c)) + cube(3 * a * b * c)});
        break;
    }
    case 2: {
        const auto &a = params[0], &b = params[1], &d = params[2];
        out.push_back({"abd", a * b * d});
        out.push_back({"a^3-b^3", cube(a) - cube(b)});
        out.push_back({"a^3-d^3", cube(a) - cube(d)});
        out.push_back({"b^3-d^3", cube(b) - cube(d)});
        out.push_back({"(a^3+b^3+d^3)^3-(3abd)^3", cube(cube(a) + cube(b) + cube(d)) - cube(3 * a * b * d)});
        break;
    }
    case 3: {
        const auto &a = params[0], &d = params[1];
        out.push_back({"ad", a * d});
        out.push_back({"a^6-d^6", cube(a) * cube(a) - cube(d) * cube(d)});
        break;
    }
    case 4: {
        const auto &a = params[0], &b = params[1];
        out.push_back({"ab", a * b});
        out.push_back({"a^3-b^3", cube(a) - cube(b)});
        out.push_back({"a^3+8b^3", cube(a) + 8 * cube(b)});
        break;
    }
    case 5:
        out.push_back({"c", params[0]});
        break;
    case 6:
        out.push_back({"a", params[0]});
        break;
    default:
        break;
    }
    return out;
}

AltTensor nine_block(int which)
{
    static const std::vector<std::vector<std::vector<int>>> blocks = {
        {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}},
        {{1, 4, 7}, {2, 5, 8}, {3, 6, 9}},
        {{1, 5, 9}, {2, 6, 7}, {3, 4, 8}},
        {{1, 6, 8}, {2, 4, 9}, {3, 5, 7}},
    };
    if (which < 1 || which > 4) {
        throw std::invalid_argument("block index must be 1..4");
    }
    AltTensor p(9, 3, Mode::exact);
    for (const auto& m : blocks[static_cast<std::size_t>(which - 1)]) {
        p.add(m, Scalar::one(Mode::exact));
    }
    return p;
}

AltTensor semisimple_state(const mpq_class& a, const mpq_class& b, const mpq_class& c, const mpq_class& d)
{
    AltTensor p = nine_block(1) * q(a);
    p += nine_block(2) * q(b);
    p += nine_block(3) * q(c);
    p += nine_block(4) * q(d);
    return p;
}

AltTensor eight_mode_state(const std::vector<mpq_class>& coefficients)
{
    static const std::vector<std::vector<int>> slots = {
        {1, 2, 3}, {5, 6, 7}, {1, 5, 4}, {2, 6, 4}, {3, 7, 4}, {2, 7, 8}, {3, 6, 8},
    };
    if (coefficients.size() != slots.size()) {
        throw std::invalid_argument("eight-mode state needs seven coefficients");
    }
    AltTensor p(8, 3, Mode::exact);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (sgn(coefficients[i]) != 0) {
            p.add(slots[i], q(coefficients[i]));
        }
    }
    return p;
}

std::vector<mpq_class> eight_class_coefficients(const std::string& label)
{
    static const std::map<std::string, std::vector<int>> table = {
        {"XI", {0, 0, 1, 1, 1, 0, 1}},    {"XII", {0, 1, 1, 1, 1, 0, 1}},  {"XIII", {1, 1, 1, 0, 0, 0, 1}},
        {"XIV", {1, 1, 1, 1, 0, 0, 1}},   {"XV", {1, 1, 1, 1, 1, 0, 1}},   {"XVI", {0, 0, 1, 0, 0, 1, 1}},
        {"XVII", {0, 0, 1, 1, 0, 1, 1}},  {"XVIII", {0, 1, 1, 1, 0, 1, 1}}, {"XIX", {0, 0, 1, 1, 1, 1, 1}},
        {"XX", {0, 1, 1, 1, 1, 1, 1}},    {"XXI", {1, 1, 1, 0, 0, 1, 1}},  {"XXII", {1, 1, 1, 1, 0, 1, 1}},
        {"XXIII", {1, 1, 1, 1, 1, 1, 1}},
    };
    auto it = table.find(label);
    if (it == table.end()) {
        throw std::invalid_argument("unknown eight-mode class " + label);
    }
    return {it->second.begin(), it->second.end()};
}

AltTensor complex_seven_monomial(const std::vector<int>& slots)
{
    Mode m = Mode::exact;
    AltTensor result(7, 0, m);
    result.coefficient(0) = Scalar::one(m);
    for (int s : slots) {
        AltTensor one(7, 1, m);
        if (s >= 1 && s <= 3) {
            one.set({s}, Scalar::one(m));
            one.set({s + 3}, Scalar::imaginary_unit(m));
        } else if (s >= 4 && s <= 6) {
            one.set({s - 3}, Scalar::one(m));
            one.set({s}, -Scalar::imaginary_unit(m));
        } else if (s == 7) {
            one.set({7}, Scalar::imaginary_unit(m));
        } else {
            throw std::invalid_argument("complex slot must be 1..7");
        }
        result = wedge(result, one);
    }
    return result;
}

AltTensor canonical_state(int dimension, const std::string& label, const std::vector<mpq_class>& params)
{
    if (dimension == 6) {
        if (!params.empty()) {
            throw std::invalid_argument("six-mode classes take no parameters");
        }
        if (label == "Null") {
            return AltTensor(6, 3, Mode::exact);
        }
        if (label == "Sep") {
            return six_state({{1, 2, 3}});
        }
        if (label == "Bisep") {
            return six_state({{1, 2, 3}, {1, 5, 6}});
        }
        if (label == "W") {
            return six_state({{1, 2, 6}, {4, 2, 3}, {1, 5, 3}});
        }
        if (label == "GHZ") {
            return six_state({{1, 2, 3}, {4, 5, 6}});
        }
        if (label == "GHZ+") {
            return six_state({{1, 2, 3}, {1, 5, 6}, {2, 6, 4}, {3, 4, 5}}, mpq_class(1, 2));
        }
        if (label == "GHZ-") {
            AltTensor p = six_state({{1, 2, 3}}, mpq_class(1, 2));
            p -= six_state({{1, 5, 6}, {2, 6, 4}, {3, 4, 5}}, mpq_class(1, 2));
            return p;
        }
        throw std::invalid_argument("unknown six-mode class " + label);
    }
    if (dimension == 7) {
        if (!params.empty()) {
            throw std::invalid_argument("seven-mode classes take no parameters");
        }
        return seven_state(label);
    }
    if (dimension == 8) {
        if (!params.empty()) {
            throw std::invalid_argument("eight-mode classes take no parameters");
        }
        auto labels7 = canonical_labels(7);
        if (std::find(labels7.begin(), labels7.end(), label) != labels7.end()) {
            return extend_dimension(seven_state(label), 8);
        }
        return eight_mode_state(eight_class_coefficients(label));
    }
    if (dimension == 9) {
        int family = family_number(label);
        if (family == 0) {
            throw std::invalid_argument("unknown nine-mode family " + label);
        }
        require_count(family, params);
        for (const auto& c : family_constraints(family, params)) {
            if (sgn(c.value) == 0) {
                throw ConstraintViolation(label + " constraint " + c.description + " != 0 is violated");
            }
        }
        const mpq_class zero = 0;
        switch (family) {
        case 1:
            return semisimple_state(params[0], params[1], params[2], params[3]);
        case 2:
            return semisimple_state(params[0], -params[1], zero, params[2]);
        case 3:
            return semisimple_state(params[0], zero, zero, params[1]);
        case 4:
            return semisimple_state(params[0], params[1], -params[1], zero);
        case 5:
            return semisimple_state(zero, -params[0], params[0], zero);
        case 6:
            return semisimple_state(params[0], zero, zero, zero);
        default:
            return extend_dimension(eight_mode_state(eight_class_coefficients("XXIII")), 9);
        }
    }
    throw std::invalid_argument("dimension must be 6..9");
}

}  // namespace trifermion
