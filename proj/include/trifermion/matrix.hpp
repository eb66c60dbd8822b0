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

#include <cstddef>
#include <vector>

#include "trifermion/scalar.hpp"

namespace trifermion {

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, Mode mode);

    static DenseMatrix identity(std::size_t n, Mode mode);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Mode mode() const { return mode_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Scalar>& entries() const { return entries_; }

    DenseMatrix transpose() const;
    DenseMatrix adjoint() const;
    DenseMatrix block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const;

    bool is_zero() const;
    bool is_real() const;
    bool is_square() const { return rows_ == cols_; }
    Scalar trace() const;
    double max_abs() const;

    DenseMatrix operator-() const;
    DenseMatrix& operator+=(const DenseMatrix& o);
    DenseMatrix& operator-=(const DenseMatrix& o);
    DenseMatrix& operator*=(const Scalar& s);

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
    friend DenseMatrix operator*(DenseMatrix a, const Scalar& s) { return a *= s; }
    friend DenseMatrix operator*(const Scalar& s, DenseMatrix a) { return a *= s; }
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

    bool operator==(const DenseMatrix& o) const;
    bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Mode mode_ = Mode::exact;
    std::vector<Scalar> entries_;
};

std::size_t rank(const DenseMatrix& m, const TolerancePolicy& tol = {});
// Floating-point rank with singular values below relative_rank_epsilon * noise_scale also treated as zero.
std::size_t rank(const DenseMatrix& m, const TolerancePolicy& tol, double noise_scale);
Scalar determinant(const DenseMatrix& m);
DenseMatrix inverse(const DenseMatrix& m);
Scalar pfaffian(const DenseMatrix& m, const TolerancePolicy& tol = {});

// Sum over i,j of a(i,j) * b(j,i).
Scalar trace_of_product(const DenseMatrix& a, const DenseMatrix& b);

double max_abs_difference(const DenseMatrix& a, const DenseMatrix& b);

struct HermitianEigensystem {
    std::vector<double> values;
    DenseMatrix vectors;
};

std::vector<double> hermitian_eigenvalues(const DenseMatrix& m, const TolerancePolicy& tol = {});
HermitianEigensystem hermitian_eigensystem(const DenseMatrix& m, const TolerancePolicy& tol = {});

}  // namespace trifermion
