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

#include "trifermion/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

namespace trifermion {

namespace {

struct GaussianInteger {
    mpz_class re;
    mpz_class im;
};

bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
bool is_zero(const GaussianInteger& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }

// a*d - b*c divided exactly by p
void cross_update(mpz_class& d, const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& p)
{
    mpz_class t = a * d;
    t -= b * c;
    mpz_divexact(d.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
}

void cross_update(GaussianInteger& d, const GaussianInteger& a, const GaussianInteger& b, const GaussianInteger& c,
                  const GaussianInteger& p)
{
    mpz_class re = a.re * d.re - a.im * d.im - (b.re * c.re - b.im * c.im);
    mpz_class im = a.re * d.im + a.im * d.re - (b.re * c.im + b.im * c.re);
    mpz_class n = p.re * p.re + p.im * p.im;
    mpz_class qre = re * p.re + im * p.im;
    mpz_class qim = im * p.re - re * p.im;
    mpz_divexact(d.re.get_mpz_t(), qre.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(d.im.get_mpz_t(), qim.get_mpz_t(), n.get_mpz_t());
}

mpz_class unit_one(const mpz_class*) { return 1; }
GaussianInteger unit_one(const GaussianInteger*) { return {1, 0}; }

template <typename T>
struct EliminationResult {
    std::size_t rank = 0;
    int sign = 1;
    T last_pivot;
};

template <typename T>
EliminationResult<T> fraction_free_eliminate(std::vector<std::vector<T>>& a, std::size_t cols)
{
    EliminationResult<T> result;
    result.last_pivot = unit_one(static_cast<T*>(nullptr));
    T prev = result.last_pivot;
    std::size_t rows = a.size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && is_zero(a[p][col])) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != r) {
            std::swap(a[p], a[r]);
            result.sign = -result.sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                cross_update(a[i][j], a[r][col], a[i][col], a[r][j], prev);
            }
            a[i][col] = T{};
        }
        prev = a[r][col];
        ++r;
    }
    result.rank = r;
    result.last_pivot = prev;
    return result;
}

// Each row scaled by the lcm of its denominators; returns the scale factors.
std::vector<mpz_class> scale_rows(const DenseMatrix& m, std::vector<std::vector<mpz_class>>* real_rows,
                                  std::vector<std::vector<GaussianInteger>>* complex_rows)
{
    std::vector<mpz_class> scales(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).re().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).im().get_den_mpz_t());
        }
        scales[i] = l;
        if (real_rows) {
            auto& row = (*real_rows)[i];
            row.resize(m.cols());
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const mpq_class& q = m(i, j).re();
                row[j] = q.get_num() * (l / q.get_den());
            }
        } else {
            auto& row = (*complex_rows)[i];
            row.resize(m.cols());
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const mpq_class& qr = m(i, j).re();
                const mpq_class& qi = m(i, j).im();
                row[j].re = qr.get_num() * (l / qr.get_den());
                row[j].im = qi.get_num() * (l / qi.get_den());
            }
        }
    }
    return scales;
}

Eigen::MatrixXcd to_eigen(const DenseMatrix& m)
{
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_complex();
        }
    }
    return e;
}

struct IntegerImage {
    std::vector<mpz_class> re;
    std::vector<mpz_class> im;
    bool real = true;
    mpz_class denominator = 1;
};

IntegerImage integer_image(const DenseMatrix& m)
{
    IntegerImage out;
    for (const auto& s : m.entries()) {
        mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), s.re().get_den_mpz_t());
        if (sgn(s.im()) != 0) {
            out.real = false;
            mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), s.im().get_den_mpz_t());
        }
    }
    out.re.resize(m.entries().size());
    if (!out.real) {
        out.im.resize(m.entries().size());
    }
    for (std::size_t i = 0; i < m.entries().size(); ++i) {
        const auto& s = m.entries()[i];
        out.re[i] = s.re().get_num() * (out.denominator / s.re().get_den());
        if (!out.real) {
            out.im[i] = s.im().get_num() * (out.denominator / s.im().get_den());
        }
    }
    return out;
}

DenseMatrix exact_product(const DenseMatrix& a, const DenseMatrix& b)
{
    IntegerImage x = integer_image(a);
    IntegerImage y = integer_image(b);
    std::size_t n = a.rows();
    std::size_t inner = a.cols();
    std::size_t m = b.cols();
    bool real = x.real && y.real;
    std::vector<mpz_class> re(n * m);
    std::vector<mpz_class> im(real ? 0 : n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            const mpz_class& ar = x.re[i * inner + k];
            bool ai_zero = x.real || sgn(x.im[i * inner + k]) == 0;
            if (sgn(ar) == 0 && ai_zero) {
                continue;
            }
            for (std::size_t j = 0; j < m; ++j) {
                const mpz_class& br = y.re[k * m + j];
                if (real) {
                    if (sgn(br) != 0) {
                        mpz_addmul(re[i * m + j].get_mpz_t(), ar.get_mpz_t(), br.get_mpz_t());
                    }
                    continue;
                }
                mpz_addmul(re[i * m + j].get_mpz_t(), ar.get_mpz_t(), br.get_mpz_t());
                if (!y.real) {
                    mpz_addmul(im[i * m + j].get_mpz_t(), ar.get_mpz_t(), y.im[k * m + j].get_mpz_t());
                }
                if (!ai_zero) {
                    const mpz_class& ai = x.im[i * inner + k];
                    mpz_addmul(im[i * m + j].get_mpz_t(), ai.get_mpz_t(), br.get_mpz_t());
                    if (!y.real) {
                        mpz_submul(re[i * m + j].get_mpz_t(), ai.get_mpz_t(), y.im[k * m + j].get_mpz_t());
                    }
                }
            }
        }
    }
    mpz_class den = x.denominator * y.denominator;
    DenseMatrix out(n, m, Mode::exact);
    for (std::size_t i = 0; i < n * m; ++i) {
        mpq_class r(re[i], den);
        r.canonicalize();
        mpq_class s = 0;
        if (!real) {
            s = mpq_class(im[i], den);
            s.canonicalize();
        }
        out(i / m, i % m) = Scalar(r, s);
    }
    return out;
}

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shape mismatch");
    }
    if (a.mode() != b.mode()) {
        throw ModeMismatch();
    }
}

Scalar pfaffian_recursive(const DenseMatrix& m, std::vector<std::size_t>& idx)
{
    if (idx.empty()) {
        return Scalar::one(m.mode());
    }
    std::size_t first = idx[0];
    Scalar total = Scalar::zero(m.mode());
    for (std::size_t j = 1; j < idx.size(); ++j) {
        const Scalar& entry = m(first, idx[j]);
        if (entry.is_zero()) {
            continue;
        }
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t t = 1; t < idx.size(); ++t) {
            if (t != j) {
                rest.push_back(idx[t]);
            }
        }
        Scalar term = entry * pfaffian_recursive(m, rest);
        if (j % 2 == 0) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, Mode mode)
    : rows_(rows), cols_(cols), mode_(mode), entries_(rows * cols, Scalar::zero(mode))
{
}

DenseMatrix DenseMatrix::identity(std::size_t n, Mode mode)
{
    DenseMatrix m(n, n, mode);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Scalar::one(mode);
    }
    return m;
}

DenseMatrix DenseMatrix::transpose() const
{
    DenseMatrix t(cols_, rows_, mode_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

DenseMatrix DenseMatrix::adjoint() const
{
    DenseMatrix t(cols_, rows_, mode_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j).conj();
        }
    }
    return t;
}

DenseMatrix DenseMatrix::block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const
{
    if (row + rows > rows_ || col + cols > cols_) {
        throw std::out_of_range("block outside matrix");
    }
    DenseMatrix b(rows, cols, mode_);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            b(i, j) = (*this)(row + i, col + j);
        }
    }
    return b;
}

bool DenseMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool DenseMatrix::is_real() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_real(); });
}

Scalar DenseMatrix::trace() const
{
    Scalar t = Scalar::zero(mode_);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double DenseMatrix::max_abs() const
{
    double m = 0.0;
    for (const auto& s : entries_) {
        m = std::max(m, s.abs());
    }
    return m;
}

DenseMatrix DenseMatrix::operator-() const
{
    DenseMatrix r = *this;
    for (auto& s : r.entries_) {
        s = -s;
    }
    return r;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o)
{
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += o.entries_[i];
    }
    return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o)
{
    require_same_shape(*this, o);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= o.entries_[i];
    }
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(const Scalar& s)
{
    for (auto& e : entries_) {
        e *= s;
    }
    return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product shape mismatch");
    }
    if (a.mode() != b.mode()) {
        throw ModeMismatch();
    }
    if (a.mode() == Mode::exact) {
        return exact_product(a, b);
    }
    Eigen::MatrixXcd p = to_eigen(a) * to_eigen(b);
    DenseMatrix out(a.rows(), b.cols(), Mode::floating);
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < out.cols(); ++j) {
            out(i, j) = Scalar(p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        }
    }
    return out;
}

bool DenseMatrix::operator==(const DenseMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_ || mode_ != o.mode_) {
        return false;
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] != o.entries_[i]) {
            return false;
        }
    }
    return true;
}

std::size_t rank(const DenseMatrix& m, const TolerancePolicy& tol)
{
    return rank(m, tol, 0.0);
}

std::size_t rank(const DenseMatrix& m, const TolerancePolicy& tol, double noise_scale)
{
    if (m.rows() == 0 || m.cols() == 0) {
        return 0;
    }
    if (m.mode() == Mode::exact) {
        if (m.is_real()) {
            std::vector<std::vector<mpz_class>> rows(m.rows());
            scale_rows(m, &rows, nullptr);
            return fraction_free_eliminate(rows, m.cols()).rank;
        }
        std::vector<std::vector<GaussianInteger>> rows(m.rows());
        scale_rows(m, nullptr, &rows);
        return fraction_free_eliminate(rows, m.cols()).rank;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0) {
        return 0;
    }
    double threshold = std::max({tol.relative_rank_epsilon * sigma(0), tol.relative_rank_epsilon * noise_scale,
                                 tol.absolute_floor});
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > threshold) {
            ++r;
        }
    }
    return r;
}

Scalar determinant(const DenseMatrix& m)
{
    if (!m.is_square()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    std::size_t n = m.rows();
    if (n == 0) {
        return Scalar::one(m.mode());
    }
    if (m.mode() == Mode::floating) {
        return Scalar(to_eigen(m).partialPivLu().determinant());
    }
    if (m.is_real()) {
        std::vector<std::vector<mpz_class>> rows(n);
        auto scales = scale_rows(m, &rows, nullptr);
        auto r = fraction_free_eliminate(rows, n);
        if (r.rank < n) {
            return Scalar::zero(Mode::exact);
        }
        mpz_class den = 1;
        for (const auto& s : scales) {
            den *= s;
        }
        mpq_class value(r.last_pivot * r.sign, den);
        value.canonicalize();
        return Scalar(value);
    }
    std::vector<std::vector<GaussianInteger>> rows(n);
    auto scales = scale_rows(m, nullptr, &rows);
    auto r = fraction_free_eliminate(rows, n);
    if (r.rank < n) {
        return Scalar::zero(Mode::exact);
    }
    mpz_class den = 1;
    for (const auto& s : scales) {
        den *= s;
    }
    mpq_class re(r.last_pivot.re * r.sign, den);
    mpq_class im(r.last_pivot.im * r.sign, den);
    re.canonicalize();
    im.canonicalize();
    return Scalar(re, im);
}

DenseMatrix inverse(const DenseMatrix& m)
{
    if (!m.is_square()) {
        throw std::invalid_argument("inverse of a non-square matrix");
    }
    std::size_t n = m.rows();
    if (m.mode() == Mode::floating) {
        Eigen::MatrixXcd e = to_eigen(m);
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(e);
        if (!lu.isInvertible()) {
            throw std::domain_error("singular matrix");
        }
        Eigen::MatrixXcd inv = lu.inverse();
        DenseMatrix out(n, n, Mode::floating);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) = Scalar(inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
            }
        }
        return out;
    }
    DenseMatrix a = m;
    DenseMatrix inv = DenseMatrix::identity(n, Mode::exact);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col).is_zero()) {
            ++p;
        }
        if (p == n) {
            throw std::domain_error("singular matrix");
        }
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(col, j));
                std::swap(inv(p, j), inv(col, j));
            }
        }
        Scalar pivot_inverse = a(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= pivot_inverse;
            inv(col, j) *= pivot_inverse;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) {
                continue;
            }
            Scalar f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Scalar pfaffian(const DenseMatrix& m, const TolerancePolicy& tol)
{
    if (!m.is_square() || m.rows() % 2 != 0) {
        throw std::invalid_argument("pfaffian needs an even-order square matrix");
    }
    double scale = m.max_abs();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            Scalar s = m(i, j) + m(j, i);
            if (!approx_zero(s, scale, {tol.relative_rank_epsilon, tol.absolute_floor, 1e-12})) {
                throw std::invalid_argument("pfaffian needs an antisymmetric matrix");
            }
        }
    }
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
    }
    return pfaffian_recursive(m, idx);
}

Scalar trace_of_product(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw std::invalid_argument("trace of product shape mismatch");
    }
    Scalar t = Scalar::zero(a.mode());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a(i, j).is_zero() && !b(j, i).is_zero()) {
                t.add_product(a(i, j), b(j, i));
            }
        }
    }
    return t;
}

double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shape mismatch");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        d = std::max(d, std::abs(a.entries()[i].to_complex() - b.entries()[i].to_complex()));
    }
    return d;
}

HermitianEigensystem hermitian_eigensystem(const DenseMatrix& m, const TolerancePolicy& tol)
{
    if (!m.is_square()) {
        throw std::invalid_argument("eigenvalues of a non-square matrix");
    }
    Eigen::MatrixXcd e = to_eigen(m);
    double scale = std::max(e.cwiseAbs().maxCoeff(), 1.0);
    if ((e - e.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale + tol.absolute_floor) {
        throw std::invalid_argument("matrix is not Hermitian");
    }
    Eigen::MatrixXcd h = 0.5 * (e + e.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    HermitianEigensystem out;
    std::size_t n = m.rows();
    out.values.resize(n);
    out.vectors = DenseMatrix(n, n, Mode::floating);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
        for (std::size_t j = 0; j < n; ++j) {
            out.vectors(j, i) = Scalar(solver.eigenvectors()(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)));
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& m, const TolerancePolicy& tol)
{
    return hermitian_eigensystem(m, tol).values;
}

}  // namespace trifermion
