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

#include <vector>

#include "detrep/matrix.hpp"

namespace detrep {

struct SvdResult {
    ComplexMatrix u;                    // rows x rows unitary
    std::vector<double> singular_values;  // min(rows, cols), nonincreasing
    ComplexMatrix v;                    // cols x cols unitary
};

/// Singular value decomposition by one-sided Jacobi with explicit accumulation.
SvdResult svd(const ComplexMatrix& m);

/// Largest singular value. Empty matrices have norm 0.
double op_norm(const ComplexMatrix& m);

struct HermitianEig {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
HermitianEig hermitian_eig(const ComplexMatrix& h);

/// Eigenvalues only of a dense real symmetric matrix (Householder
/// tridiagonalization followed by implicit-shift QL). Scales to a few
/// thousand rows; used for the large Christoffel-Darboux matrices.
std::vector<double> symmetric_eigenvalues(const std::vector<double>& a, int n);

/// Hermitian PSD square root. Eigenvalues in [-clamp_floor, 0) are clamped to
/// zero; anything below -clamp_floor is an error, as is non-Hermitian input.
ComplexMatrix psd_sqrt(const ComplexMatrix& h, double clamp_floor = 1e-10);

/// Julia operator [[-K*, sqrt(I-K*K)], [sqrt(I-KK*), K]] of a contraction.
ComplexMatrix julia_operator(const ComplexMatrix& k, double tol = 1e-10);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k);

/// All size-k multisets from {0..n-1} in lexicographic order.
std::vector<std::vector<int>> multisets_lex(int n, int k);

/// k-th compound matrix: all k x k minors, row/column index sets in lex order.
template <class S>
Matrix<S> compound(const Matrix<S>& m, int k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw Error(ErrorCode::invalid_argument, "compound order out of range");
    auto rows = subsets_lex(m.rows(), k);
    auto cols = subsets_lex(m.cols(), k);
    Matrix<S> c(int(rows.size()), int(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            c(int(i), int(j)) = det_generic(m.submatrix(rows[i], cols[j]));
    return c;
}

/// Permanent by Ryser's formula with Gray-code updates. Side capped at 20.
template <class S>
S permanent(const Matrix<S>& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::dimension, "permanent of non-square matrix");
    const int n = m.rows();
    if (n == 0) return S(1);
    if (n > 20) throw Error(ErrorCode::size_cap, "permanent side capped at 20");
    std::vector<S> rowsum(n, S(0));
    S total(0);
    std::uint32_t prev_gray = 0;
    int popcount = 0;
    const std::uint32_t limit = (n == 32) ? 0 : (1u << n);
    for (std::uint32_t idx = 1; idx < limit; ++idx) {
        std::uint32_t gray = idx ^ (idx >> 1);
        std::uint32_t diff = gray ^ prev_gray;
        int j = 0;
        while (!((diff >> j) & 1u)) ++j;
        bool added = (gray >> j) & 1u;
        for (int i = 0; i < n; ++i) {
            if (added)
                rowsum[i] += m(i, j);
            else
                rowsum[i] -= m(i, j);
        }
        popcount += added ? 1 : -1;
        S prod(1);
        for (int i = 0; i < n; ++i) prod *= rowsum[i];
        if ((n - popcount) % 2 == 0)
            total += prod;
        else
            total -= prod;
        prev_gray = gray;
    }
    return total;
}

/// k-th permanental compound in the orthonormal symmetric-tensor basis:
/// entries per(M[I|J]) / sqrt(mu(I)! mu(J)!) over size-k multisets I, J.
ComplexMatrix permanental_compound(const ComplexMatrix& m, int k);

/// Roots of a univariate complex polynomial c[0] + c[1] x + ... + c[m] x^m
/// by the Weierstrass (Durand-Kerner) iteration plus Newton polishing.
std::vector<Cplx> univariate_roots(std::vector<Cplx> coeffs);

}  // namespace detrep
