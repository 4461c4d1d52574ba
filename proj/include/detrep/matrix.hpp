/*
 * Copyright 2026 The detrep authors
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

#include <cmath>
#include <cstddef>
#include <vector>

#include "detrep/rational.hpp"

namespace detrep {

/// Dense row-major matrix over a complex scalar domain (exact or float).
template <class S>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, S()) {
        if (rows < 0 || cols < 0) throw Error(ErrorCode::invalid_argument, "negative matrix size");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    S& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    const std::vector<S>& data() const { return a_; }

    Matrix adjoint() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = conj_val((*this)(i, j));
        return m;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Matrix& operator*=(const S& s) {
        for (auto& v : a_) v = v * s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
    friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::dimension, "matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (is_zero_val(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
            }
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Submatrix on the given (sorted) row and column index sets.
    Matrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
        Matrix m(int(row_idx.size()), int(col_idx.size()));
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                m(int(i), int(j)) = (*this)(row_idx[i], col_idx[j]);
        return m;
    }

    Matrix<Cplx> to_complex() const {
        Matrix<Cplx> m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(i, j) = to_cplx((*this)(i, j));
        return m;
    }

    double frobenius() const {
        double s = 0;
        for (const auto& v : a_) {
            Cplx z = to_cplx(v);
            s += std::norm(z);
        }
        return std::sqrt(s);
    }

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw Error(ErrorCode::dimension, "matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<S> a_;
};

using ComplexMatrix = Matrix<Cplx>;
using RationalMatrix = Matrix<RationalComplex>;

inline RationalMatrix to_exact(const ComplexMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r(i, j) = RationalComplex::from_double(m(i, j).real(), m(i, j).imag());
    return r;
}

/// Determinant by LU with partial pivoting.
Cplx det_lu(ComplexMatrix m);

/// Solve A X = B by LU with partial pivoting. Throws on (numerically) singular A.
ComplexMatrix solve_lu(ComplexMatrix a, ComplexMatrix b);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
RationalComplex det_exact(RationalMatrix m);

/// Exact solve A X = B by Gauss-Jordan elimination. Throws on singular A.
RationalMatrix solve_exact(RationalMatrix a, RationalMatrix b);

template <class S>
S det_generic(const Matrix<S>& m) {
    if constexpr (is_exact_scalar<S>::value)
        return det_exact(m);
    else
        return det_lu(m);
}

template <class S>
Matrix<S> solve_generic(const Matrix<S>& a, const Matrix<S>& b) {
    if constexpr (is_exact_scalar<S>::value)
        return solve_exact(a, b);
    else
        return solve_lu(a, b);
}

}  // namespace detrep
