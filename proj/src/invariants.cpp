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

#include "trifermion/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trifermion/covariants.hpp"
#include "trifermion/oracle.hpp"

namespace trifermion {

namespace {

void require_shape(const AltTensor& p, int n, const char* what)
{
    if (p.dimension() != n || p.degree() != 3) {
        throw std::invalid_argument(std::string(what) + " expects a three-form on " + std::to_string(n) + " modes");
    }
}

Scalar rational(Mode mode, long num, long den = 1)
{
    if (mode == Mode::exact) {
        return Scalar(mpq_class(num, den));
    }
    return Scalar(std::complex<double>(static_cast<double>(num) / static_cast<double>(den), 0.0));
}

Scalar scale(const Scalar& x, const mpq_class& q)
{
    if (x.is_exact()) {
        return x * q;
    }
    return x * Scalar(std::complex<double>(q.get_d(), 0.0));
}

DenseMatrix adjugate3(const DenseMatrix& m)
{
    DenseMatrix out(3, 3, m.mode());
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t r0 = (j + 1) % 3;
            const std::size_t r1 = (j + 2) % 3;
            const std::size_t c0 = (i + 1) % 3;
            const std::size_t c1 = (i + 2) % 3;
            out(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        }
    }
    return out;
}

Scalar quartic_block(const AltTensor& p)
{
    const Mode mode = p.mode();
    const Scalar eta = p.get({1, 2, 3});
    const Scalar xi = p.get({4, 5, 6});
    DenseMatrix x(3, 3, mode);
    DenseMatrix y(3, 3, mode);
    const int pairs_high[3][2] = {{5, 6}, {6, 4}, {4, 5}};
    const int pairs_low[3][2] = {{2, 3}, {3, 1}, {1, 2}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            x(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                p.get({i + 1, pairs_high[j][0], pairs_high[j][1]});
            y(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                p.get({i + 4, pairs_low[j][0], pairs_low[j][1]});
        }
    }
    Scalar first = eta * xi - trace_of_product(x, y);
    Scalar out = first * first;
    out -= rational(mode, 4) * trace_of_product(adjugate3(x), adjugate3(y));
    out += rational(mode, 4) * eta * determinant(x);
    out += rational(mode, 4) * xi * determinant(y);
    return out;
}

#include "delta_polynomials.inc"

bool is_zero_with(const Scalar& value, int degree, double amplitude, const TolerancePolicy& tol)
{
    return invariant_vanishes(value, degree, amplitude, tol);
}

}  // namespace

Scalar quartic_d(const AltTensor& p, QuarticRoute route)
{
    require_shape(p, 6, "quartic invariant");
    switch (route) {
    case QuarticRoute::trace: {
        const DenseMatrix k = k_matrix_6(p).matrix;
        return scale(trace_of_product(k, k), mpq_class(1, 6));
    }
    case QuarticRoute::freudenthal_block:
        return quartic_block(p);
    case QuarticRoute::pairing:
        return scale(symplectic_pairing(dual_trivector(p), p), mpq_class(1, 2));
    }
    throw std::invalid_argument("unknown route");
}

double fermionic_tangle(const AltTensor& p)
{
    const double norm = p.norm_squared();
    if (norm == 0.0) {
        return 0.0;
    }
    return 4.0 * quartic_d(p).abs() / (norm * norm);
}

Scalar cayley_hyperdeterminant(const std::vector<Scalar>& psi)
{
    if (psi.size() != 8) {
        throw std::invalid_argument("three-qubit state needs 8 amplitudes");
    }
    const Mode mode = psi[0].mode();
    const Scalar a = psi[1] * psi[6];
    const Scalar b = psi[2] * psi[5];
    const Scalar c = psi[3] * psi[4];
    Scalar first = psi[0] * psi[7] - a - b - c;
    Scalar out = first * first;
    out -= rational(mode, 4) * (a * b + b * c + c * a);
    out += rational(mode, 4) * psi[1] * psi[2] * psi[4] * psi[7];
    out += rational(mode, 4) * psi[0] * psi[3] * psi[5] * psi[6];
    return out;
}

double three_tangle(const std::vector<Scalar>& psi)
{
    double norm = 0.0;
    for (const auto& v : psi) {
        norm += v.abs() * v.abs();
    }
    if (norm == 0.0) {
        return 0.0;
    }
    return 4.0 * cayley_hyperdeterminant(psi).abs() / (norm * norm);
}

Scalar seven_j(const AltTensor& p)
{
    require_shape(p, 7, "seven-mode invariant");
    auto cov = seven_covariants(p);
    return scale(trace_of_product(cov.L.matrix, cov.N.matrix), mpq_class(1, 16 * 9 * 7));
}

Scalar eight_i(const AltTensor& p)
{
    require_shape(p, 8, "eight-mode invariant");
    auto cov = eight_covariants(p);
    return trace_of_product(cov.G.matrix, cov.H.matrix);
}

NineJs nine_js(const AltTensor& p)
{
    require_shape(p, 9, "nine-mode invariants");
    return nine_js(t_map(p));
}

NineJs nine_js(const ExtLinearMap& map)
{
    if (map.dimension != 9 || map.matrix.rows() != 84 || map.matrix.cols() != 84) {
        throw std::invalid_argument("nine-mode invariants need the cubic covariant of a nine-mode state");
    }
    const DenseMatrix& t = map.matrix;
    const DenseMatrix t2 = t * t;
    const DenseMatrix t4 = t2 * t2;
    const DenseMatrix t6 = t4 * t2;
    NineJs js;
    js.j12 = scale(trace_of_product(t2, t2), mpq_class(1, 128 * 27 * 7));
    js.j18 = scale(trace_of_product(t4, t2), mpq_class(-1, 1024 * 27 * 7 * 13));
    js.j24 = scale(trace_of_product(t4, t4), mpq_class(1, 2048 * 9 * 7 * 19));
    js.j30 = scale(trace_of_product(t6, t4), mpq_class(-1, 4096L * 27 * 5 * 7 * 13));
    return js;
}

const std::vector<Polynomial>& delta_polynomials()
{
    static const std::vector<Polynomial> polys = [] {
        const std::vector<std::string> vars = {"J12", "J18", "J24", "J30"};
        return std::vector<Polynomial>{Polynomial::parse(degree_132_text, vars), Polynomial::parse(degree_48_text, vars),
                                       Polynomial::parse(degree_48_prime_text, vars),
                                       Polynomial::parse(degree_24_text, vars)};
    }();
    return polys;
}

NineDeltas nine_deltas(const NineJs& js)
{
    const std::vector<Scalar> args = {js.j12, js.j18, js.j24, js.j30};
    const auto& polys = delta_polynomials();
    NineDeltas out;
    out.d132 = polys[0].evaluate(args);
    out.d48 = polys[1].evaluate(args);
    out.d48_prime = polys[2].evaluate(args);
    out.d24 = polys[3].evaluate(args);
    out.low_confidence = !js.j12.is_exact();
    std::vector<double> moduli;
    for (const auto& j : args) {
        moduli.push_back(std::abs(j.to_complex()));
    }
    for (std::size_t i = 0; i < 4; ++i) {
        double total = 0.0;
        for (const auto& [exponents, coefficient] : polys[i].terms()) {
            double term = std::abs(coefficient.get_d());
            for (std::size_t v = 0; v < exponents.size(); ++v) {
                term *= std::pow(moduli[v], exponents[v]);
            }
            total += term;
        }
        out.magnitudes[i] = total;
    }
    return out;
}

bool delta_vanishes(const Scalar& value, double magnitude, const TolerancePolicy& tol)
{
    if (value.is_exact()) {
        return value.is_zero();
    }
    return std::abs(value.to_complex()) <= tol.zero_test * magnitude + tol.absolute_floor;
}

std::vector<Scalar> qutrit_normal_form(const Scalar& a, const Scalar& b, const Scalar& c)
{
    const Mode mode = a.mode();
    std::vector<Scalar> psi(27, Scalar::zero(mode));
    auto put = [&](int m1, int m2, int m3, const Scalar& v) { psi[static_cast<std::size_t>(9 * (m1 - 1) + 3 * (m2 - 1) + (m3 - 1))] += v; };
    for (int i = 1; i <= 3; ++i) {
        put(i, i, i, a);
    }
    put(1, 2, 3, -b);
    put(2, 3, 1, -b);
    put(3, 1, 2, -b);
    put(1, 3, 2, c);
    put(2, 1, 3, c);
    put(3, 2, 1, c);
    return psi;
}

QutritInvariants qutrit_normal_form_invariants(const Scalar& a, const Scalar& b, const Scalar& c)
{
    const Mode mode = a.mode();
    auto n = [&](long v) { return rational(mode, v); };
    const Scalar a3 = a.pow(3);
    const Scalar b3 = b.pow(3);
    const Scalar c3 = c.pow(3);
    QutritInvariants q;
    q.i6 = a3 * a3 + n(10) * a3 * b3 + b3 * b3 - n(10) * a3 * c3 + n(10) * b3 * c3 + c3 * c3;
    q.i9 = (a + b) * (a - c) * (b + c) * (a * a - a * b + b * b) * (a * a + a * c + c * c) * (b * b - b * c + c * c);
    q.i12 = -a3.pow(3) * b3 - n(4) * a3.pow(2) * b3.pow(2) - a3 * b3.pow(3) + a3.pow(3) * c3 -
            n(2) * a3.pow(2) * b3 * c3 + n(2) * a3 * b3.pow(2) * c3 - b3.pow(3) * c3 - n(4) * a3.pow(2) * c3.pow(2) -
            n(2) * a3 * b3 * c3.pow(2) - n(4) * b3.pow(2) * c3.pow(2) + a3 * c3.pow(3) - b3 * c3.pow(3);
    const Scalar& i6 = q.i6;
    const Scalar& i9 = q.i9;
    const Scalar& i12 = q.i12;
    q.hyperdeterminant = i6.pow(3) * i9.pow(2) - i12.pow(2) * i6.pow(2) - n(32) * i12.pow(3) +
                         n(36) * i12 * i6 * i9.pow(2) + n(108) * i9.pow(4);
    q.d36 = q.hyperdeterminant;
    q.d24 = i12.pow(2) - rational(mode, 2, 3) * i6 * i9.pow(2);
    q.d21 = (n(8) * i12 + rational(mode, 1, 3) * i6.pow(2)) * i9;
    return q;
}

std::vector<Scalar> qutrit_relation_residuals(const Scalar& a, const Scalar& b, const Scalar& c)
{
    const Mode mode = a.mode();
    auto n = [&](long v) { return rational(mode, v); };
    const QutritInvariants q = qutrit_normal_form_invariants(a, b, c);
    const NineJs js = nine_js(embed_qudits(qutrit_normal_form(a, b, c), 3, 3));
    const NineDeltas ds = nine_deltas(js);
    const Scalar& i6 = q.i6;
    const Scalar& i9 = q.i9;
    const Scalar& i12 = q.i12;
    const Scalar s = i9 * i9;
    std::vector<Scalar> r;
    r.push_back(js.j12 - (i6 * i6 + n(20) * i12));
    r.push_back(js.j18 - (i6.pow(3) + n(30) * i12 * i6 + n(100) * s));
    r.push_back(js.j24 - (n(111) * i6.pow(4) + n(4440) * i6 * i6 * i12 + n(2 * 81 * 193) * i12 * i12 +
                          n(4 * 11 * 199) * i6 * s));
    r.push_back(js.j30 - (n(2 * 9 * 25 * 2521) * s * i12 + n(27 * 5 * 2521) * i6 * i12 * i12 +
                          n(2 * 5 * 17 * 383) * i6 * i6 * s + n(16 * 25 * 73) * i6.pow(3) * i12 + n(8 * 73) * i6.pow(5)));
    r.push_back(ds.d48 - scale(q.hyperdeterminant * i12, mpq_class(-5 * 121 * 199 * 199, 2)));
    r.push_back(ds.d132);
    r.push_back(ds.d48_prime - scale((n(8) * i12 + rational(mode, 1, 3) * i6 * i6) * s * s,
                                     mpq_class(16L * 3125 * 121 * 199 * 199, 243)));
    r.push_back(ds.d24 - scale(i12 * i12 - rational(mode, 2, 3) * i6 * s, mpq_class(2 * 11 * 199, 37)));
    return r;
}

QutritVerdicts qutrit_verdicts(const std::vector<Scalar>& psi, const TolerancePolicy& tol)
{
    if (psi.size() != 27) {
        throw std::invalid_argument("three-qutrit state needs 27 amplitudes");
    }
    QutritVerdicts v;
    const AltTensor p = embed_qudits(psi, 3, 3);
    double amp = p.max_abs();
    v.js = nine_js(p);
    v.deltas = nine_deltas(v.js);
    v.all_invariants_zero = is_zero_with(v.js.j12, 12, amp, tol) && is_zero_with(v.js.j18, 18, amp, tol) &&
                            is_zero_with(v.js.j24, 24, amp, tol) && is_zero_with(v.js.j30, 30, amp, tol);
    v.d36_nonzero = !is_zero_with(v.deltas.d48, 48, amp, tol);
    v.d24_nonzero = !is_zero_with(v.deltas.d24, 24, amp, tol);
    v.d21_nonzero = !is_zero_with(v.deltas.d48_prime, 48, amp, tol);
    if (v.d36_nonzero) {
        v.family = 1;
    } else if (v.d24_nonzero && v.d21_nonzero) {
        v.family = 2;
    } else if (v.d24_nonzero && !v.d21_nonzero) {
        v.family = 4;
    } else if (!v.d24_nonzero && !v.d21_nonzero) {
        v.family = v.all_invariants_zero ? 5 : 3;
    }
    return v;
}

JacobianResult jacobian_rank(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d)
{
    static const std::vector<std::vector<Polynomial>> partials = [] {
        std::vector<std::vector<Polynomial>> out;
        for (const auto& poly : closed_form_polynomials()) {
            std::vector<Polynomial> row;
            for (const char* v : {"a", "b", "c", "d"}) {
                row.push_back(poly.derivative(v));
            }
            out.push_back(std::move(row));
        }
        return out;
    }();
    const std::vector<Scalar> args = {a, b, c, d};
    JacobianResult out;
    out.matrix = DenseMatrix(4, 4, a.mode());
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            out.matrix(i, j) = partials[i][j].evaluate(args);
        }
    }
    out.rank = rank(out.matrix);
    out.determinant = determinant(out.matrix);
    return out;
}

Scalar jacobian_determinant_closed_form(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d)
{
    const Mode mode = a.mode();
    auto n = [&](long v) { return rational(mode, v); };
    auto cube = [](const Scalar& x) { return x.pow(3); };
    const Scalar f1 = cube(cube(a) + cube(b) - cube(c)) + cube(n(3) * a * b * c);
    const Scalar f2 = cube(cube(a) - cube(b) + cube(d)) + cube(n(3) * a * b * d);
    const Scalar f3 = cube(cube(c) + cube(b) + cube(d)) - cube(n(3) * c * b * d);
    const Scalar f4 = cube(cube(c) + cube(a) - cube(d)) + cube(n(3) * c * a * d);
    const Scalar abcd = a * b * c * d;
    Scalar product = abcd * abcd * f1 * f1 * f2 * f2 * f3 * f3 * f4 * f4;
    const mpq_class constant = mpq_class(mpz_class(16384) * 81 * 78125 * 121 * 61 * 199);
    return scale(product, constant);
}

bool invariant_vanishes(const Scalar& value, int degree, double amplitude_scale, const TolerancePolicy& tol)
{
    if (value.is_exact()) {
        return value.is_zero();
    }
    return approx_zero(value, std::pow(std::max(amplitude_scale, 1e-300), degree), tol);
}

InvariantSet invariant_set(const AltTensor& p) { return invariant_set(p, {}); }

InvariantSet invariant_set(const AltTensor& p, const std::map<std::string, Scalar>& known)
{
    InvariantSet s;
    s.dimension = p.dimension();
    if (p.degree() != 3) {
        throw std::invalid_argument("invariants are defined for three-forms");
    }
    switch (p.dimension()) {
    case 6:
        s.values["D"] = quartic_d(p);
        s.degrees["D"] = 4;
        s.values["detK"] = determinant(k_matrix_6(p).matrix);
        s.degrees["detK"] = 12;
        break;
    case 7: {
        auto cov = seven_covariants(p);
        s.values["J"] = scale(trace_of_product(cov.L.matrix, cov.N.matrix), mpq_class(1, 16 * 9 * 7));
        s.degrees["J"] = 7;
        s.values["detN"] = determinant(cov.N.matrix);
        s.degrees["detN"] = 21;
        s.values["detB"] = determinant(cov.B.matrix);
        s.degrees["detB"] = 21;
        break;
    }
    case 8:
        s.values["I"] = known.count("I") ? known.at("I") : eight_i(p);
        s.degrees["I"] = 16;
        break;
    case 9: {
        const std::vector<std::string> names = {"J12", "J18", "J24", "J30", "Delta132", "Delta48", "Delta48prime", "Delta24"};
        if (std::all_of(names.begin(), names.end(), [&](const std::string& n) { return known.count(n) > 0; })) {
            for (const auto& n : names) {
                s.values[n] = known.at(n);
            }
            s.degrees = {{"J12", 12},       {"J18", 18},      {"J24", 24},           {"J30", 30},
                         {"Delta132", 132}, {"Delta48", 48}, {"Delta48prime", 48}, {"Delta24", 24}};
            break;
        }
        const NineJs js = nine_js(p);
        const NineDeltas ds = nine_deltas(js);
        s.values = {{"J12", js.j12},     {"J18", js.j18},          {"J24", js.j24},   {"J30", js.j30},
                    {"Delta132", ds.d132}, {"Delta48", ds.d48}, {"Delta48prime", ds.d48_prime}, {"Delta24", ds.d24}};
        s.degrees = {{"J12", 12},       {"J18", 18},      {"J24", 24},           {"J30", 30},
                     {"Delta132", 132}, {"Delta48", 48}, {"Delta48prime", 48}, {"Delta24", 24}};
        break;
    }
    default:
        break;
    }
    return s;
}

}  // namespace trifermion
