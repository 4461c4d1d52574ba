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

#include "detrep/agler.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace detrep {

namespace {

ComplexMatrix zn_diag(const MultiDegree& n, const std::vector<Cplx>& z) {
    const int side = int(degree_sum(n));
    ComplexMatrix m(side, side);
    int slot = 0;
    for (std::size_t i = 0; i < n.size(); ++i)
        for (std::uint32_t r = 0; r < n[i]; ++r) {
            m(slot, slot) = z[i];
            ++slot;
        }
    return m;
}

}  // namespace

Cplx inner_eval_rational(const ComplexPoly& p, const MultiDegree& n, const std::vector<Cplx>& z) {
    Cplx den = poly_eval(p, z);
    if (std::abs(den) <= 1e-12)
        throw Error(ErrorCode::singular, "inner function evaluated at a zero of p");
    ComplexPoly rev = poly_reverse(p, n);
    return poly_eval(rev, z) / den;
}

Cplx inner_eval_julia(const ComplexMatrix& k, const MultiDegree& n, const std::vector<Cplx>& z,
                      double tol) {
    const int side = int(degree_sum(n));
    if (k.rows() != side || k.cols() != side)
        throw Error(ErrorCode::dimension, "K side must equal |n|");
    if (int(z.size()) != int(n.size()))
        throw Error(ErrorCode::dimension, "evaluation point dimension mismatch");
    if (side == 0) return Cplx(1, 0);
    double nrm = op_norm(k);
    if (nrm > 1.0 + tol)
        throw Error(ErrorCode::not_contraction, "inner_eval_julia requires a contraction");
    double floor = 2.0 * tol + 1e-10;
    ComplexMatrix ka = k.adjoint();
    ComplexMatrix sq_left = psd_sqrt(ComplexMatrix::identity(side) - ka * k, floor);
    ComplexMatrix sq_right = psd_sqrt(ComplexMatrix::identity(side) - k * ka, floor);
    ComplexMatrix zn = zn_diag(n, z);
    ComplexMatrix resolvent = ComplexMatrix::identity(side) - k * zn;
    ComplexMatrix x = solve_lu(resolvent, sq_right);  // (I - K Z)^{-1} sqrt(I-KK*)
    ComplexMatrix m = -ka + sq_left * (zn * x);
    return det_lu(m);
}

double realization_unitarity(const Realization& r) {
    const int side = 1 + int(degree_sum(r.m));
    ComplexMatrix u(side, side);
    u(0, 0) = r.a(0, 0);
    for (int j = 0; j < side - 1; ++j) u(0, 1 + j) = r.b(0, j);
    for (int i = 0; i < side - 1; ++i) u(1 + i, 0) = r.c(i, 0);
    for (int i = 0; i < side - 1; ++i)
        for (int j = 0; j < side - 1; ++j) u(1 + i, 1 + j) = r.d(i, j);
    return (u.adjoint() * u - ComplexMatrix::identity(side)).frobenius();
}

Cplx realization_eval(const Realization& r, const std::vector<Cplx>& z) {
    const int side = int(degree_sum(r.m));
    if (int(z.size()) != int(r.m.size()))
        throw Error(ErrorCode::dimension, "evaluation point dimension mismatch");
    if (side == 0) return r.a(0, 0);
    ComplexMatrix zn = zn_diag(r.m, z);
    ComplexMatrix x = solve_lu(ComplexMatrix::identity(side) - r.d * zn, r.c);
    ComplexMatrix val = r.b * (zn * x);
    return r.a(0, 0) + val(0, 0);
}

ComplexRepresentation extract_k_from_realization(const ComplexPoly& p, const Realization& r,
                                                 int samples, double tol) {
    if (int(r.m.size()) != p.num_vars())
        throw Error(ErrorCode::dimension, "realization dimension mismatch");
    std::mt19937_64 rng(20260810);
    std::uniform_real_distribution<double> radius(0.0, 0.9), angle(0.0, 2.0 * M_PI);
    int checked = 0;
    for (int s = 0; s < samples * 4 && checked < samples; ++s) {
        std::vector<Cplx> z(p.num_vars());
        for (auto& v : z) v = std::polar(radius(rng), angle(rng));
        if (std::abs(poly_eval(p, z)) <= 1e-6) continue;
        Cplx want = inner_eval_rational(p, r.m, z);
        Cplx got = realization_eval(r, z);
        if (std::abs(want - got) > tol * (1.0 + std::abs(want)))
            throw Error(ErrorCode::verification,
                        "realization does not match z^m conj(p)(1/z)/p(z) at samples");
        ++checked;
    }
    if (checked == 0)
        throw Error(ErrorCode::verification, "could not sample the realization away from zeros");
    ComplexRepresentation rep{r.m, r.d};
    VerificationReport report = verify_representation(p, rep, std::max(tol, 1e-8));
    if (!report.pass)
        throw Error(ErrorCode::verification, "det(I - D Z_m) does not reproduce p");
    return rep;
}

Realization julia_realization(const ComplexMatrix& k, const MultiDegree& n, double tol) {
    const int side = int(degree_sum(n));
    if (k.rows() != side || k.cols() != side)
        throw Error(ErrorCode::dimension, "K side must equal |n|");
    SvdResult s = svd(k);
    if (!s.singular_values.empty() && s.singular_values[0] > 1.0 + tol)
        throw Error(ErrorCode::not_contraction, "julia_realization requires a contraction");
    int defect = 0;
    int defect_idx = -1;
    for (int i = 0; i < int(s.singular_values.size()); ++i)
        if (s.singular_values[i] < 1.0 - 1e-8) {
            ++defect;
            defect_idx = i;
        }
    if (defect > 1)
        throw Error(ErrorCode::precondition,
                    "julia_realization needs defect rank <= 1 (at most one singular value < 1)");

    Realization r;
    r.m = n;
    r.a = ComplexMatrix(1, 1);
    r.b = ComplexMatrix(1, side);
    r.c = ComplexMatrix(side, 1);
    r.d = k;
    if (defect == 1) {
        double sigma = s.singular_values[defect_idx];
        double rho = std::sqrt(std::max(0.0, 1.0 - sigma * sigma));
        r.a(0, 0) = -sigma;
        for (int j = 0; j < side; ++j) r.b(0, j) = rho * std::conj(s.v(j, defect_idx));
        for (int i = 0; i < side; ++i) r.c(i, 0) = rho * s.u(i, defect_idx);
    } else {
        // K unitary within tolerance: constant inner function det(-K*).
        r.a(0, 0) = det_lu(-k.adjoint());
    }

    // Fix the free phase of the first row so the transfer function matches
    // z^n conj(p)(1/z)/p(z) with p = det(I - K Z_n).
    ComplexPoly p = det_expand(k, n);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> radius(0.2, 0.6), angle(0.0, 2.0 * M_PI);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Cplx> z(n.size());
        for (auto& v : z) v = std::polar(radius(rng), angle(rng));
        if (std::abs(poly_eval(p, z)) <= 1e-8) continue;
        Cplx want = inner_eval_rational(p, n, z);
        Cplx got = realization_eval(r, z);
        if (std::abs(got) <= 1e-12 && std::abs(want) <= 1e-12) break;
        if (std::abs(got) <= 1e-12) continue;
        Cplx gamma = want / got;
        if (std::abs(std::abs(gamma) - 1.0) > 1e-6)
            throw Error(ErrorCode::internal, "phase correction is not unimodular");
        gamma /= std::abs(gamma);
        r.a(0, 0) *= gamma;
        for (int j = 0; j < side; ++j) r.b(0, j) *= gamma;
        break;
    }
    return r;
}

Realization blaschke_realization(Cplx a, int var, int num_vars) {
    if (var < 0 || var >= num_vars) throw Error(ErrorCode::invalid_argument, "variable index");
    if (std::abs(a) > 1.0) throw Error(ErrorCode::not_contraction, "|a| must be <= 1");
    double rho = std::sqrt(std::max(0.0, 1.0 - std::norm(a)));
    Realization r;
    r.m = MultiDegree(num_vars, 0);
    r.m[var] = 1;
    r.a = ComplexMatrix(1, 1);
    r.b = ComplexMatrix(1, 1);
    r.c = ComplexMatrix(1, 1);
    r.d = ComplexMatrix(1, 1);
    r.a(0, 0) = -std::conj(a);
    r.b(0, 0) = rho;
    r.c(0, 0) = rho;
    r.d(0, 0) = a;
    return r;
}

Realization realization_product(const Realization& r1, const Realization& r2) {
    if (r1.m.size() != r2.m.size())
        throw Error(ErrorCode::dimension, "realization dimension mismatch");
    const int d = int(r1.m.size());
    const int s1 = int(degree_sum(r1.m)), s2 = int(degree_sum(r2.m));
    const int side = s1 + s2;

    // Raw cascade for f2 * f1 with stacked states (state of r1 first).
    Cplx a = r2.a(0, 0) * r1.a(0, 0);
    ComplexMatrix b(1, side), c(side, 1), dd(side, side);
    for (int j = 0; j < s1; ++j) b(0, j) = r2.a(0, 0) * r1.b(0, j);
    for (int j = 0; j < s2; ++j) b(0, s1 + j) = r2.b(0, j);
    for (int i = 0; i < s1; ++i) c(i, 0) = r1.c(i, 0);
    for (int i = 0; i < s2; ++i) c(s1 + i, 0) = r2.c(i, 0) * r1.a(0, 0);
    for (int i = 0; i < s1; ++i)
        for (int j = 0; j < s1; ++j) dd(i, j) = r1.d(i, j);
    for (int i = 0; i < s2; ++i)
        for (int j = 0; j < s1; ++j) dd(s1 + i, j) = r2.c(i, 0) * r1.b(0, j);
    for (int i = 0; i < s2; ++i)
        for (int j = 0; j < s2; ++j) dd(s1 + i, s1 + j) = r2.d(i, j);

    // Regroup the stacked states into canonical consecutive variable blocks.
    std::vector<int> sym;
    sym.reserve(side);
    for (int i = 0; i < d; ++i)
        for (std::uint32_t rcount = 0; rcount < r1.m[i]; ++rcount) sym.push_back(i);
    for (int i = 0; i < d; ++i)
        for (std::uint32_t rcount = 0; rcount < r2.m[i]; ++rcount) sym.push_back(i);
    std::vector<int> perm;
    perm.reserve(side);
    for (int v = 0; v < d; ++v)
        for (int i = 0; i < side; ++i)
            if (sym[i] == v) perm.push_back(i);

    Realization out;
    out.m.resize(d);
    for (int i = 0; i < d; ++i) out.m[i] = r1.m[i] + r2.m[i];
    out.a = ComplexMatrix(1, 1);
    out.a(0, 0) = a;
    out.b = ComplexMatrix(1, side);
    out.c = ComplexMatrix(side, 1);
    out.d = ComplexMatrix(side, side);
    for (int i = 0; i < side; ++i) {
        out.b(0, i) = b(0, perm[i]);
        out.c(i, 0) = c(perm[i], 0);
        for (int j = 0; j < side; ++j) out.d(i, j) = dd(perm[i], perm[j]);
    }
    return out;
}

double agler_lower_bound(const ComplexPoly& p,
                         const std::vector<CommutingTuple<Cplx>>& tuples) {
    double best = 0.0;
    for (const auto& tuple : tuples) {
        if (tuple.dim() != p.num_vars())
            throw Error(ErrorCode::dimension, "tuple dimension mismatch");
        double max_norm = 0.0;
        for (int i = 0; i < tuple.dim(); ++i) {
            double nrm = op_norm(tuple.matrix(i));
            if (nrm > 1.0 + 1e-10)
                throw Error(ErrorCode::not_contraction, "tuple matrix is not a contraction");
            max_norm = std::max(max_norm, nrm);
        }
        // The Agler supremum runs over strict contractions; shrink boundary
        // tuples just inside the ball.
        double rho = max_norm >= 1.0 - 1e-12 ? 1.0 - 1e-9 : 1.0;
        std::vector<ComplexMatrix> scaled;
        scaled.reserve(tuple.dim());
        for (int i = 0; i < tuple.dim(); ++i) scaled.push_back(tuple.matrix(i) * Cplx(rho, 0));
        CommutingTuple<Cplx> shrunk(std::move(scaled), std::max(tuple.tolerance(), 1e-9));
        best = std::max(best, op_norm(poly_eval_tuple(p, shrunk)));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Christoffel-Darboux matrix
// ---------------------------------------------------------------------------

namespace {

// Shared recursion skeleton over an arbitrary scalar domain. c0, c1 are the
// per-monomial coefficients of p = t - (1/d) sum z_i (c0 = t, c1 = -1/d).
template <class S>
std::pair<std::vector<S>, std::vector<std::array<int, 3>>> cd_layers(const S& c0, const S& c1,
                                                                     int d) {
    std::vector<S> coeff(d + 1, S(0));
    coeff[0] = c0;
    if (d >= 1) coeff[1] = c1;
    auto f = [&](int j, int k) -> S {
        S lhs = coeff[j] * conj_val(coeff[k]);
        S rhs = conj_val(coeff[d - j]) * coeff[d - k];
        return lhs - rhs;
    };
    const int jk = d;  // indices run over 0..d-1
    std::vector<S> b(std::size_t(jk) * jk * jk, S(0));
    auto at = [&](int i, int j, int k) -> S& {
        return b[(std::size_t(i) * jk + j) * jk + k];
    };
    std::vector<std::array<int, 3>> flagged;
    for (int i = 0; i <= d - 1; ++i)
        for (int j = i; j <= d - 1; ++j)
            for (int k = i; k <= d - 1; ++k) {
                int lead = d - j - k + i;
                if (lead <= 0) {
                    flagged.push_back({i, j, k});
                    continue;
                }
                S acc = f(j, k);
                if (i > 0) acc += S(long(i)) * at(i - 1, j - 1, k - 1);
                acc /= S(long(lead));
                at(i, j, k) = acc;
            }
    return {std::move(b), std::move(flagged)};
}

template <class S>
Matrix<S> cd_assemble(const std::vector<S>& layers, int d) {
    const int jk = d;
    auto at = [&](int i, int j, int k) -> const S& {
        return layers[(std::size_t(i) * jk + j) * jk + k];
    };
    const int side = 1 << (d - 1);
    Matrix<S> m(side, side);
    for (int alpha = 0; alpha < side; ++alpha)
        for (int beta = 0; beta < side; ++beta) {
            int i = __builtin_popcount(unsigned(alpha & beta));
            int j = __builtin_popcount(unsigned(alpha));
            int k = __builtin_popcount(unsigned(beta));
            m(alpha, beta) = at(i, j, k);
        }
    return m;
}

}  // namespace

CdResult cd_matrix(Cplx t, int d) {
    if (d < 2 || d > 14) throw Error(ErrorCode::precondition, "cd_matrix requires 2 <= d <= 14");
    if (std::abs(t) < 1.0 - 1e-12)
        throw Error(ErrorCode::precondition, "cd_matrix requires |t| >= 1");
    auto [layers, flagged] = cd_layers<Cplx>(t, Cplx(-1.0 / d, 0.0), d);
    CdResult out;
    out.b = cd_assemble(layers, d);
    out.flagged = std::move(flagged);
    const int side = out.b.rows();
    bool real_sym = true;
    for (int i = 0; i < side && real_sym; ++i)
        for (int j = 0; j < side; ++j)
            if (std::abs(out.b(i, j).imag()) > 0) {
                real_sym = false;
                break;
            }
    if (real_sym) {
        std::vector<double> a(std::size_t(side) * side);
        for (int i = 0; i < side; ++i)
            for (int j = 0; j < side; ++j) a[std::size_t(i) * side + j] = out.b(i, j).real();
        auto evals = symmetric_eigenvalues(a, side);
        out.min_eigenvalue = evals.front();
    } else {
        auto eig = hermitian_eig(out.b);
        out.min_eigenvalue = eig.values.front();
    }
    return out;
}

CdExactResult cd_matrix_exact(const RationalComplex& t, int d) {
    if (d < 2 || d > 14) throw Error(ErrorCode::precondition, "cd_matrix requires 2 <= d <= 14");
    if (t.norm2() < 1)
        throw Error(ErrorCode::precondition, "cd_matrix requires |t| >= 1");
    RationalComplex c1(mpq_class(-1, d));
    auto [layers, flagged] = cd_layers<RationalComplex>(t, c1, d);
    CdExactResult out;
    out.b = cd_assemble(layers, d);
    out.flagged = std::move(flagged);
    return out;
}

}  // namespace detrep
