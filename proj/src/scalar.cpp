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

#include "trifermion/scalar.hpp"

#include <cmath>
#include <cstdio>

namespace trifermion {

namespace {

mpq_class parse_rational(const std::string& text)
{
    std::string s = text;
    if (s.empty()) {
        throw std::invalid_argument("empty number");
    }
    auto dot = s.find('.');
    auto exp = s.find_first_of("eE");
    if (dot == std::string::npos && exp == std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) {
            throw std::invalid_argument("not a rational number: " + text);
        }
        if (q.get_den() == 0) {
            throw std::invalid_argument("zero denominator: " + text);
        }
        q.canonicalize();
        return q;
    }
    long exponent = 0;
    if (exp != std::string::npos) {
        exponent = std::stol(s.substr(exp + 1));
        s = s.substr(0, exp);
    }
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    std::string digits;
    long fraction = 0;
    bool seen_dot = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_dot) {
                throw std::invalid_argument("not a number: " + text);
            }
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits += c;
            if (seen_dot) {
                ++fraction;
            }
        } else {
            throw std::invalid_argument("not a number: " + text);
        }
    }
    if (digits.empty()) {
        throw std::invalid_argument("not a number: " + text);
    }
    mpz_class num(digits, 10);
    exponent -= fraction;
    mpz_class ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    mpq_class q = exponent < 0 ? mpq_class(num, ten_power) : mpq_class(num * ten_power);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

std::string format_double(double v)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
}

}  // namespace

Scalar::Scalar() : value_(GaussianRational{0, 0}) {}

Scalar::Scalar(long value, Mode mode)
{
    if (mode == Mode::exact) {
        value_ = GaussianRational{value, 0};
    } else {
        value_ = std::complex<double>(static_cast<double>(value), 0.0);
    }
}

Scalar::Scalar(const mpq_class& re, const mpq_class& im) : value_(GaussianRational{re, im})
{
    auto& g = std::get<GaussianRational>(value_);
    g.re.canonicalize();
    g.im.canonicalize();
}

Scalar::Scalar(std::complex<double> value) : value_(value) {}

Scalar Scalar::imaginary_unit(Mode mode)
{
    if (mode == Mode::exact) {
        return Scalar(mpq_class(0), mpq_class(1));
    }
    return Scalar(std::complex<double>(0.0, 1.0));
}

Scalar Scalar::parse(const std::string& re, const std::string& im, Mode mode)
{
    if (mode == Mode::exact) {
        return Scalar(parse_rational(re), parse_rational(im));
    }
    std::size_t used_re = 0;
    std::size_t used_im = 0;
    double r = std::stod(re, &used_re);
    double i = std::stod(im, &used_im);
    if (used_re != re.size() || used_im != im.size()) {
        throw std::invalid_argument("not a decimal number: " + re + " / " + im);
    }
    return Scalar(std::complex<double>(r, i));
}

const mpq_class& Scalar::re() const
{
    if (!is_exact()) {
        throw ModeMismatch();
    }
    return std::get<GaussianRational>(value_).re;
}

const mpq_class& Scalar::im() const
{
    if (!is_exact()) {
        throw ModeMismatch();
    }
    return std::get<GaussianRational>(value_).im;
}

std::complex<double> Scalar::to_complex() const
{
    if (is_exact()) {
        const auto& g = std::get<GaussianRational>(value_);
        return {g.re.get_d(), g.im.get_d()};
    }
    return std::get<std::complex<double>>(value_);
}

bool Scalar::is_zero() const
{
    if (is_exact()) {
        const auto& g = std::get<GaussianRational>(value_);
        return sgn(g.re) == 0 && sgn(g.im) == 0;
    }
    return std::get<std::complex<double>>(value_) == std::complex<double>(0.0, 0.0);
}

bool Scalar::is_real() const
{
    if (is_exact()) {
        return sgn(std::get<GaussianRational>(value_).im) == 0;
    }
    return std::get<std::complex<double>>(value_).imag() == 0.0;
}

double Scalar::abs() const { return std::abs(to_complex()); }

Scalar Scalar::conj() const
{
    if (is_exact()) {
        const auto& g = std::get<GaussianRational>(value_);
        return Scalar(g.re, -g.im);
    }
    return Scalar(std::conj(std::get<std::complex<double>>(value_)));
}

Scalar Scalar::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("division by zero");
    }
    if (is_exact()) {
        const auto& g = std::get<GaussianRational>(value_);
        mpq_class n = g.re * g.re + g.im * g.im;
        return Scalar(g.re / n, -g.im / n);
    }
    return Scalar(1.0 / std::get<std::complex<double>>(value_));
}

Scalar Scalar::pow(unsigned n) const
{
    Scalar result = one(mode());
    Scalar base = *this;
    while (n > 0) {
        if (n & 1u) {
            result *= base;
        }
        n >>= 1u;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

Scalar Scalar::as_mode(Mode target) const
{
    if (target == mode()) {
        return *this;
    }
    if (target == Mode::floating) {
        return Scalar(to_complex());
    }
    auto c = std::get<std::complex<double>>(value_);
    mpq_class re(c.real());
    mpq_class im(c.imag());
    return Scalar(re, im);
}

Scalar Scalar::operator-() const
{
    if (is_exact()) {
        const auto& g = std::get<GaussianRational>(value_);
        return Scalar(mpq_class(-g.re), mpq_class(-g.im));
    }
    return Scalar(-std::get<std::complex<double>>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    if (mode() != o.mode()) {
        throw ModeMismatch();
    }
    if (is_exact()) {
        auto& g = std::get<GaussianRational>(value_);
        const auto& h = std::get<GaussianRational>(o.value_);
        g.re += h.re;
        if (sgn(h.im) != 0) {
            g.im += h.im;
        }
    } else {
        std::get<std::complex<double>>(value_) += std::get<std::complex<double>>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    if (mode() != o.mode()) {
        throw ModeMismatch();
    }
    if (is_exact()) {
        auto& g = std::get<GaussianRational>(value_);
        const auto& h = std::get<GaussianRational>(o.value_);
        g.re -= h.re;
        if (sgn(h.im) != 0) {
            g.im -= h.im;
        }
    } else {
        std::get<std::complex<double>>(value_) -= std::get<std::complex<double>>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (mode() != o.mode()) {
        throw ModeMismatch();
    }
    if (is_exact()) {
        auto& g = std::get<GaussianRational>(value_);
        const auto& h = std::get<GaussianRational>(o.value_);
        if (sgn(g.im) == 0 && sgn(h.im) == 0) {
            g.re *= h.re;
        } else {
            mpq_class re = g.re * h.re - g.im * h.im;
            mpq_class im = g.re * h.im + g.im * h.re;
            g.re = std::move(re);
            g.im = std::move(im);
        }
    } else {
        std::get<std::complex<double>>(value_) *= std::get<std::complex<double>>(o.value_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (mode() != o.mode()) {
        throw ModeMismatch();
    }
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    if (is_exact()) {
        const auto& h = std::get<GaussianRational>(o.value_);
        if (sgn(h.im) == 0) {
            auto& g = std::get<GaussianRational>(value_);
            g.re /= h.re;
            if (sgn(g.im) != 0) {
                g.im /= h.re;
            }
            return *this;
        }
        return *this *= o.inverse();
    }
    std::get<std::complex<double>>(value_) /= std::get<std::complex<double>>(o.value_);
    return *this;
}

Scalar& Scalar::operator*=(const mpq_class& q)
{
    if (is_exact()) {
        auto& g = std::get<GaussianRational>(value_);
        g.re *= q;
        if (sgn(g.im) != 0) {
            g.im *= q;
        }
    } else {
        std::get<std::complex<double>>(value_) *= q.get_d();
    }
    return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b)
{
    if (mode() != a.mode() || mode() != b.mode()) {
        throw ModeMismatch();
    }
    if (is_exact()) {
        const auto& x = std::get<GaussianRational>(a.value_);
        const auto& y = std::get<GaussianRational>(b.value_);
        auto& g = std::get<GaussianRational>(value_);
        if (sgn(x.im) == 0 && sgn(y.im) == 0 && x.re.get_den() == 1 && y.re.get_den() == 1 && g.re.get_den() == 1) {
            mpz_addmul(mpq_numref(g.re.get_mpq_t()), mpq_numref(x.re.get_mpq_t()), mpq_numref(y.re.get_mpq_t()));
            return;
        }
        thread_local mpq_class term;
        mpq_mul(term.get_mpq_t(), x.re.get_mpq_t(), y.re.get_mpq_t());
        mpq_add(g.re.get_mpq_t(), g.re.get_mpq_t(), term.get_mpq_t());
        if (sgn(x.im) != 0 && sgn(y.im) != 0) {
            mpq_mul(term.get_mpq_t(), x.im.get_mpq_t(), y.im.get_mpq_t());
            mpq_sub(g.re.get_mpq_t(), g.re.get_mpq_t(), term.get_mpq_t());
        }
        if (sgn(y.im) != 0) {
            mpq_mul(term.get_mpq_t(), x.re.get_mpq_t(), y.im.get_mpq_t());
            mpq_add(g.im.get_mpq_t(), g.im.get_mpq_t(), term.get_mpq_t());
        }
        if (sgn(x.im) != 0) {
            mpq_mul(term.get_mpq_t(), x.im.get_mpq_t(), y.re.get_mpq_t());
            mpq_add(g.im.get_mpq_t(), g.im.get_mpq_t(), term.get_mpq_t());
        }
    } else {
        std::get<std::complex<double>>(value_) +=
            std::get<std::complex<double>>(a.value_) * std::get<std::complex<double>>(b.value_);
    }
}

bool Scalar::operator==(const Scalar& o) const
{
    if (mode() != o.mode()) {
        throw ModeMismatch();
    }
    if (is_exact()) {
        const auto& g = std::get<GaussianRational>(value_);
        const auto& h = std::get<GaussianRational>(o.value_);
        return g.re == h.re && g.im == h.im;
    }
    return std::get<std::complex<double>>(value_) == std::get<std::complex<double>>(o.value_);
}

std::string Scalar::re_string() const
{
    if (is_exact()) {
        return std::get<GaussianRational>(value_).re.get_str();
    }
    return format_double(std::get<std::complex<double>>(value_).real());
}

std::string Scalar::im_string() const
{
    if (is_exact()) {
        return std::get<GaussianRational>(value_).im.get_str();
    }
    return format_double(std::get<std::complex<double>>(value_).imag());
}

std::string Scalar::to_string() const
{
    if (is_real()) {
        return re_string();
    }
    if (is_exact() && sgn(re()) == 0) {
        return im_string() + "i";
    }
    std::string im_part = im_string();
    if (im_part[0] != '-') {
        im_part = "+" + im_part;
    }
    return re_string() + im_part + "i";
}

bool approx_zero(const Scalar& value, double scale, const TolerancePolicy& tol)
{
    if (value.is_exact()) {
        return value.is_zero();
    }
    return value.abs() <= tol.zero_test * scale;
}

}  // namespace trifermion
