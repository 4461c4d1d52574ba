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

#include <tuple>
#include <vector>

#include "detrep/verify.hpp"

namespace detrep {

/// Evaluate z^n conj(p)(1/z)/p(z) directly from the two polynomials.
Cplx inner_eval_rational(const ComplexPoly& p, const MultiDegree& n, const std::vector<Cplx>& z);

/// Evaluate det(-K* + sqrt(I-K*K) Z_n (I-KZ_n)^{-1} sqrt(I-KK*)); equals the
/// rational route whenever K is a contraction representing p.
Cplx inner_eval_julia(const ComplexMatrix& k, const MultiDegree& n, const std::vector<Cplx>& z,
                      double tol = 1e-10);

/// Rational inner function z^n conj(p)(1/z) / p(z) attached to a polynomial
/// with n >= deg p; the optional representation carries a contractive K and
/// enables the Julia determinant route.
struct InnerFunction {
    ComplexPoly p;
    MultiDegree n;
    std::optional<ComplexRepresentation> rep;

    Cplx eval_rational(const std::vector<Cplx>& z) const {
        return inner_eval_rational(p, n, z);
    }
    Cplx eval_julia(const std::vector<Cplx>& z, double tol = 1e-10) const {
        if (!rep) throw Error(ErrorCode::precondition, "no representation attached");
        return inner_eval_julia(rep->k, rep->n, z, tol);
    }
};

/// Transfer-function realization f = A + B Z_m (I - D Z_m)^{-1} C with the
/// assembled (1+|m|) block matrix unitary within tolerance.
struct Realization {
    MultiDegree m;
    ComplexMatrix a;  // 1 x 1
    ComplexMatrix b;  // 1 x |m|
    ComplexMatrix c;  // |m| x 1
    ComplexMatrix d;  // |m| x |m|
};

/// Frobenius residual || U*U - I || of the assembled block matrix.
double realization_unitarity(const Realization& r);

Cplx realization_eval(const Realization& r, const std::vector<Cplx>& z);

/// Recover the representation (m, D) from a realization of z^m conj(p)(1/z)/p(z).
/// Sample-checks the realization against the rational route at random interior
/// points, then verifies det(I - D Z_m) = p coefficientwise.
ComplexRepresentation extract_k_from_realization(const ComplexPoly& p, const Realization& r,
                                                 int samples = 50, double tol = 1e-8);

/// Scalar-corner Julia completion of a contraction with defect rank <= 1:
/// the unique (up to phase) unitary [[A, B], [C, K]] with scalar A. The phase
/// is fixed so the transfer function equals z^n conj(p)(1/z)/p(z) for
/// p = det(I - K Z_n). Throws if the defect rank exceeds 1.
Realization julia_realization(const ComplexMatrix& k, const MultiDegree& n, double tol = 1e-8);

/// Elementary Blaschke factor (z_var - conj(a))/(1 - a z_var) as a realization.
Realization blaschke_realization(Cplx a, int var, int num_vars);

/// Cascade: realization of the product f1 * f2, with states regrouped into
/// canonical variable blocks. det(I - D Z) multiplies accordingly.
Realization realization_product(const Realization& r1, const Realization& r2);

/// Certified lower bound on the Agler norm: max over the given tuples of
/// ||p(rho T)||, where tuples touching the unit sphere are shrunk by 1 - 1e-9.
double agler_lower_bound(const ComplexPoly& p, const std::vector<CommutingTuple<Cplx>>& tuples);

/// Christoffel-Darboux matrix of p(z) = t - (1/d) sum z_i, |t| >= 1, indexed
/// by subsets of {1..d-1}. Entries solve the triangular recursion
/// (d-j-k+i) B^i_{j,k} - i B^{i-1}_{j-1,k-1} = F(j,k) layer by layer in i;
/// layers with a vanishing leading coefficient are recorded, not guessed.
struct CdResult {
    ComplexMatrix b;
    double min_eigenvalue = 0.0;
    std::vector<std::array<int, 3>> flagged;  // (i, j, k) with d-j-k+i <= 0
};

CdResult cd_matrix(Cplx t, int d);

struct CdExactResult {
    RationalMatrix b;
    std::vector<std::array<int, 3>> flagged;
};

CdExactResult cd_matrix_exact(const RationalComplex& t, int d);

}  // namespace detrep
