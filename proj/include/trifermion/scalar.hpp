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

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace trifermion {

enum class Mode { exact, floating };

class ModeMismatch : public std::logic_error {
public:
    ModeMismatch() : std::logic_error("mixed exact and floating scalars") {}
};

struct TolerancePolicy {
    double relative_rank_epsilon = 1e-10;
    double absolute_floor = 1e-13;
    double zero_test = 1e-8;
};

struct GaussianRational {
    mpq_class re;
    mpq_class im;
};

class Scalar {
public:
    Scalar();
    Scalar(long value, Mode mode);
    explicit Scalar(const mpq_class& re, const mpq_class& im = 0);
    explicit Scalar(std::complex<double> value);

    static Scalar zero(Mode mode) { return Scalar(0L, mode); }
    static Scalar one(Mode mode) { return Scalar(1L, mode); }
    static Scalar imaginary_unit(Mode mode);
    static Scalar parse(const std::string& re, const std::string& im, Mode mode);

    Mode mode() const { return std::holds_alternative<GaussianRational>(value_) ? Mode::exact : Mode::floating; }
    bool is_exact() const { return mode() == Mode::exact; }

    const mpq_class& re() const;
    const mpq_class& im() const;
    std::complex<double> to_complex() const;

    bool is_zero() const;
    bool is_real() const;
    double abs() const;

    Scalar conj() const;
    Scalar inverse() const;
    Scalar pow(unsigned n) const;
    Scalar as_mode(Mode mode) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar& operator*=(const mpq_class& q);

    void add_product(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator*(Scalar a, const mpq_class& q) { return a *= q; }
    friend Scalar operator*(const mpq_class& q, Scalar a) { return a *= q; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string re_string() const;
    std::string im_string() const;
    std::string to_string() const;

private:
    std::variant<GaussianRational, std::complex<double>> value_;
};

bool approx_zero(const Scalar& value, double scale, const TolerancePolicy& tol = {});

}  // namespace trifermion
