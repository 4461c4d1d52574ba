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

#include "detrep/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace detrep {

Cplx det_lu(ComplexMatrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::dimension, "determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return Cplx(1.0, 0.0);
    Cplx det(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(m(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = std::abs(m(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) return Cplx(0.0, 0.0);
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
            det = -det;
        }
        det *= m(k, k);
        for (int i = k + 1; i < n; ++i) {
            Cplx f = m(i, k) / m(k, k);
            if (f == Cplx(0.0, 0.0)) continue;
            for (int j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

ComplexMatrix solve_lu(ComplexMatrix a, ComplexMatrix b) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::dimension, "solve with non-square matrix");
    if (a.rows() != b.rows()) throw Error(ErrorCode::dimension, "solve shape mismatch");
    const int n = a.rows(), m = b.cols();
    if (n == 0) return b;
    double scale = a.frobenius();
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = std::abs(a(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best <= 1e-300 || best <= 1e-15 * scale / std::max(1, n))
            throw Error(ErrorCode::singular, "singular matrix in solve");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            for (int j = 0; j < m; ++j) std::swap(b(k, j), b(piv, j));
        }
        for (int i = k + 1; i < n; ++i) {
            Cplx f = a(i, k) / a(k, k);
            if (f == Cplx(0.0, 0.0)) continue;
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            for (int j = 0; j < m; ++j) b(i, j) -= f * b(k, j);
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        for (int j = 0; j < m; ++j) {
            Cplx s = b(i, j);
            for (int k = i + 1; k < n; ++k) s -= a(i, k) * b(k, j);
            b(i, j) = s / a(i, i);
        }
    }
    return b;
}

RationalComplex det_exact(RationalMatrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::dimension, "determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return RationalComplex(1);
    // Bareiss fraction-free elimination; divisions are exact.
    RationalComplex prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m(i, k).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return RationalComplex(0);
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = RationalComplex(0);
        }
        prev = m(k, k);
    }
    RationalComplex d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

RationalMatrix solve_exact(RationalMatrix a, RationalMatrix b) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::dimension, "solve with non-square matrix");
    if (a.rows() != b.rows()) throw Error(ErrorCode::dimension, "solve shape mismatch");
    const int n = a.rows(), m = b.cols();
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!a(i, k).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw Error(ErrorCode::singular, "singular matrix in exact solve");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            for (int j = 0; j < m; ++j) std::swap(b(k, j), b(piv, j));
        }
        RationalComplex inv = RationalComplex(1) / a(k, k);
        for (int j = 0; j < n; ++j) a(k, j) *= inv;
        for (int j = 0; j < m; ++j) b(k, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            RationalComplex f = a(i, k);
            for (int j = 0; j < n; ++j) a(i, j) -= f * a(k, j);
            for (int j = 0; j < m; ++j) b(i, j) -= f * b(k, j);
        }
    }
    return b;
}

}  // namespace detrep
