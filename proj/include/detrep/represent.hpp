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

#include <optional>
#include <utility>
#include <vector>

#include "detrep/linalg.hpp"
#include "detrep/poly.hpp"

namespace detrep {

/// Determinantal representation p(z) = det(I_|n| - K Z_n).
/// Indices {1..|n|} are partitioned into d consecutive blocks of sizes n_i;
/// block i carries the variable z_i.
template <class S>
struct Representation {
    MultiDegree n;
    Matrix<S> k;
};

using ComplexRepresentation = Representation<Cplx>;
using RationalRepresentation = Representation<RationalComplex>;

struct BoundedRepresentation {
    ComplexRepresentation rep;
    double beta = 0;
    int kappa = 0;
    double bound = 0;
};

/// Chain factorization q(z) = C_0 L_1(z) C_1 ... L_t(z) C_t, where each L_i
/// is diagonal with entries drawn from {1, z_1, ..., z_d}. Symbols: 0 is the
/// constant 1 and i in 1..d is z_i. L_i has length cols(C_{i-1}).
template <class S>
struct FactorChain {
    int num_vars = 0;
    std::vector<Matrix<S>> c;          // C_0 .. C_t
    std::vector<std::vector<int>> l;   // symbols of L_1 .. L_t

    int t() const { return int(l.size()); }

    /// Evaluate the chain product at a point.
    Matrix<S> eval(const std::vector<S>& z) const {
        if (int(z.size()) != num_vars)
            throw Error(ErrorCode::dimension, "chain evaluation point dimension mismatch");
        Matrix<S> cur = c[0];
        for (int j = 0; j < t(); ++j) {
            Matrix<S> scaled = cur;
            for (int col = 0; col < scaled.cols(); ++col) {
                int sym = l[j][col];
                if (sym == 0) continue;
                for (int row = 0; row < scaled.rows(); ++row)
                    scaled(row, col) = scaled(row, col) * z[sym - 1];
            }
            cur = scaled * c[j + 1];
        }
        return cur;
    }
};

/// Symbolic chain product as a matrix of polynomials (small chains only).
template <class S>
std::vector<std::vector<Polynomial<S>>> chain_symbolic(const FactorChain<S>& ch) {
    const int d = ch.num_vars;
    auto lift = [&](const Matrix<S>& m) {
        std::vector<std::vector<Polynomial<S>>> out(
            m.rows(), std::vector<Polynomial<S>>(m.cols(), Polynomial<S>(d)));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!is_zero_val(m(i, j))) out[i][j].add_term(Expo(d, 0), m(i, j));
        return out;
    };
    auto cur = lift(ch.c[0]);
    for (int j = 0; j < ch.t(); ++j) {
        for (auto& row : cur)
            for (int col = 0; col < int(row.size()); ++col) {
                int sym = ch.l[j][col];
                if (sym > 0) row[col] = row[col] * Polynomial<S>::variable(d, sym - 1);
            }
        const Matrix<S>& cj = ch.c[j + 1];
        std::vector<std::vector<Polynomial<S>>> next(
            cur.size(), std::vector<Polynomial<S>>(cj.cols(), Polynomial<S>(d)));
        for (std::size_t r = 0; r < cur.size(); ++r)
            for (int c2 = 0; c2 < cj.cols(); ++c2)
                for (int k = 0; k < cj.rows(); ++k)
                    if (!is_zero_val(cj(k, c2)))
                        next[r][c2] = next[r][c2] + cur[r][k] * cj(k, c2);
        cur = std::move(next);
    }
    return cur;
}

/// Inductive chain factorization with t = tdeg q. Each split writes
/// q = q_0 + z_1 q_1 + ... + z_d q_d, assigning every monomial to its
/// smallest variable. With prune set, identically-zero row entries and the
/// matching diagonal slots are dropped; without it the sizes follow the
/// literal (d+1)-fold growth.
template <class S>
FactorChain<S> factor_chain(const Polynomial<S>& q, bool prune = true) {
    const int d = q.num_vars();
    auto [deg, t] = poly_degrees(q);
    FactorChain<S> chain;
    chain.num_vars = d;
    if (t == 0) {
        Matrix<S> c0(1, 1);
        c0(0, 0) = q.constant_term();
        chain.c.push_back(c0);
        return chain;
    }
    std::vector<Polynomial<S>> row{q};
    std::vector<Matrix<S>> cs;             // C_t, C_{t-1}, ..., C_1
    std::vector<std::vector<int>> ls;      // L_t, ..., L_1
    for (std::uint32_t level = t; level >= 1; --level) {
        const int m = int(row.size());
        std::vector<Polynomial<S>> parts(std::size_t(d + 1) * m, Polynomial<S>(d));
        for (int j = 0; j < m; ++j) {
            for (const auto& [e, coef] : row[j].terms()) {
                int var = 0;
                for (int i = 0; i < d; ++i)
                    if (e[i] > 0) {
                        var = i + 1;
                        break;
                    }
                Expo e2 = e;
                if (var > 0) e2[var - 1] -= 1;
                parts[std::size_t(var) * m + j].add_term(e2, coef);
            }
        }
        std::vector<Polynomial<S>> next;
        std::vector<int> syms;
        std::vector<int> kept_col;
        for (int b = 0; b <= d; ++b)
            for (int j = 0; j < m; ++j) {
                auto& part = parts[std::size_t(b) * m + j];
                if (prune && part.is_zero()) continue;
                next.push_back(std::move(part));
                syms.push_back(b);
                kept_col.push_back(j);
            }
        Matrix<S> cmat(int(kept_col.size()), m);
        for (std::size_t r = 0; r < kept_col.size(); ++r) cmat(int(r), kept_col[r]) = S(1);
        cs.push_back(std::move(cmat));
        ls.push_back(std::move(syms));
        row = std::move(next);
    }
    Matrix<S> c0(1, int(row.size()));
    for (std::size_t j = 0; j < row.size(); ++j) c0(0, int(j)) = row[j].constant_term();
    chain.c.push_back(std::move(c0));
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) chain.c.push_back(std::move(*it));
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) chain.l.push_back(std::move(*it));
    return chain;
}

/// Both sides of the block-determinant identity
/// det [[I, -A_0, ...], ..., [-A_t, ..., I]] = det(I - A_0 ... A_t).
template <class S>
std::pair<S, S> lemma_det_collapse(const std::vector<Matrix<S>>& a) {
    if (a.empty()) throw Error(ErrorCode::invalid_argument, "empty chain");
    const int t = int(a.size()) - 1;
    std::vector<int> sizes(t + 1);
    for (int i = 0; i <= t; ++i) sizes[i] = a[i].rows();
    for (int i = 0; i < t; ++i)
        if (a[i].cols() != sizes[i + 1])
            throw Error(ErrorCode::dimension, "chain shape mismatch");
    if (a[t].cols() != sizes[0]) throw Error(ErrorCode::dimension, "chain shape mismatch");

    int total = 0;
    std::vector<int> off(t + 1);
    for (int i = 0; i <= t; ++i) {
        off[i] = total;
        total += sizes[i];
    }
    Matrix<S> big = Matrix<S>::identity(total);
    for (int i = 0; i < t; ++i)
        for (int r = 0; r < sizes[i]; ++r)
            for (int c = 0; c < sizes[i + 1]; ++c) big(off[i] + r, off[i + 1] + c) = -a[i](r, c);
    for (int r = 0; r < sizes[t]; ++r)
        for (int c = 0; c < sizes[0]; ++c) big(off[t] + r, off[0] + c) = -a[t](r, c);
    S block_det = det_generic(big);

    Matrix<S> prod = a[0];
    for (int i = 1; i <= t; ++i) prod = prod * a[i];
    S direct = det_generic(Matrix<S>::identity(sizes[0]) - prod);
    return {block_det, direct};
}

/// Closed-loop map: sort the diagonal symbols (ones first, then z_1 slots,
/// ..., z_d slots; stable within groups), partition G = T C T^{-1} at the
/// one/variable boundary and return K = G22 + G21 (I - G11)^{-1} G12.
template <class S>
Representation<S> close_loop(const Matrix<S>& cyc, const std::vector<int>& syms, int d) {
    const int total = cyc.rows();
    if (total != int(syms.size()) || cyc.cols() != total)
        throw Error(ErrorCode::dimension, "close_loop shape mismatch");
    std::vector<int> perm;
    perm.reserve(total);
    for (int v = 0; v <= d; ++v)
        for (int i = 0; i < total; ++i)
            if (syms[i] == v) perm.push_back(i);
    Matrix<S> g(total, total);
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j) g(i, j) = cyc(perm[i], perm[j]);
    int ell = 0;
    MultiDegree n(d, 0);
    for (int s : syms) {
        if (s == 0)
            ++ell;
        else
            ++n[s - 1];
    }
    const int nv = total - ell;
    Representation<S> rep;
    rep.n = std::move(n);
    if (nv == 0) {
        rep.k = Matrix<S>(0, 0);
        return rep;
    }
    Matrix<S> g22(nv, nv);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) g22(i, j) = g(ell + i, ell + j);
    if (ell == 0) {
        rep.k = std::move(g22);
        return rep;
    }
    Matrix<S> m11(ell, ell), g12(ell, nv), g21(nv, ell);
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) m11(i, j) = (i == j ? S(1) : S(0)) - g(i, j);
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < nv; ++j) g12(i, j) = g(i, ell + j);
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < ell; ++j) g21(i, j) = g(ell + i, j);
    Matrix<S> x;
    try {
        x = solve_generic(m11, g12);
    } catch (const Error&) {
        throw Error(ErrorCode::singular, "singular I - G11: chain violates p(0) = 1");
    }
    rep.k = g22 + g21 * x;
    return rep;
}

/// Assemble the cyclic companion of a chain for q = 1 - p and close the loop.
template <class S>
Representation<S> chain_to_representation(const FactorChain<S>& chain) {
    const int d = chain.num_vars;
    const int t = chain.t();
    if (t == 0) {
        if (!is_zero_val(chain.c[0](0, 0)))
            throw Error(ErrorCode::precondition, "constant chain must evaluate to 0 (p(0) = 1)");
        Representation<S> rep;
        rep.n = MultiDegree(d, 0);
        rep.k = Matrix<S>(0, 0);
        return rep;
    }
    std::vector<int> sizes(t + 1);
    sizes[0] = 1;
    for (int i = 1; i <= t; ++i) sizes[i] = int(chain.l[i - 1].size());
    int total = 0;
    std::vector<int> off(t + 1);
    for (int i = 0; i <= t; ++i) {
        off[i] = total;
        total += sizes[i];
    }
    Matrix<S> cyc(total, total);
    for (int i = 0; i < t; ++i) {
        const Matrix<S>& ci = chain.c[i];
        if (ci.rows() != sizes[i] || ci.cols() != sizes[i + 1])
            throw Error(ErrorCode::dimension, "chain shape mismatch");
        for (int r = 0; r < ci.rows(); ++r)
            for (int c = 0; c < ci.cols(); ++c) cyc(off[i] + r, off[i + 1] + c) = ci(r, c);
    }
    const Matrix<S>& ct = chain.c[t];
    if (ct.rows() != sizes[t] || ct.cols() != 1)
        throw Error(ErrorCode::dimension, "chain tail shape mismatch");
    for (int r = 0; r < ct.rows(); ++r) cyc(off[t] + r, 0) = ct(r, 0);

    std::vector<int> syms;
    syms.reserve(total);
    syms.push_back(0);
    for (const auto& lj : chain.l) syms.insert(syms.end(), lj.begin(), lj.end());
    return close_loop(cyc, syms, d);
}

namespace detail {
template <class S>
void require_unit_constant(const Polynomial<S>& p) {
    S c = p.constant_term();
    if constexpr (is_exact_scalar<S>::value) {
        if (!(c == S(1))) throw Error(ErrorCode::precondition, "representation requires p(0) = 1");
    } else {
        if (std::abs(c - Cplx(1.0, 0.0)) > 1e-12)
            throw Error(ErrorCode::precondition, "representation requires p(0) = 1");
    }
}
}  // namespace detail

/// Unconstrained pipeline: factor 1 - p and close the loop.
template <class S>
Representation<S> represent_unconstrained(const Polynomial<S>& p, bool prune = true) {
    detail::require_unit_constant(p);
    Polynomial<S> q = -p;
    q.add_term(Expo(p.num_vars(), 0), S(1));
    return chain_to_representation(factor_chain(q, prune));
}

/// The norm-bounded chain: C_0 = -beta^((1-t)/2) row[|p_k|^(1/2)],
/// C_1 = ... = C_{t-1} = beta I, C_t = beta^((1-t)/2) col[p_k / |p_k|^(1/2)],
/// with each monomial expanded in the standard factor order (z_1 factors
/// first) and unit padding in the trailing slots, so L_1 has no unit entries.
struct BoundedChain {
    FactorChain<Cplx> chain;
    double beta = 0;
    int kappa = 0;  // nonzero blocks L_i(0), counting L_0 = 1
};

BoundedChain bounded_factor_chain(const ComplexPoly& p);

/// Norm-bounded construction. Returns K with
/// ||K|| <= beta * max{ sqrt((beta^2-1)(1+beta+...+beta^(kappa-1))^2 + 1), 1 },
/// where beta = (sum |p_k|)^(1/(t+1)) and kappa counts the nonzero blocks
/// L_i(0), including L_0 = 1.
BoundedRepresentation represent_bounded(const ComplexPoly& p);

/// Rank-1 affine construction: K_{jk} = sqrt(|a_j a_k|) e^{i arg a_k} with
/// diagonal a and det(I - K Z) = 1 - sum a_i z_i; ||K|| = sum |a_i|.
ComplexRepresentation represent_affine(const std::vector<Cplx>& a);

/// Exact-mode affine construction; available when all pairwise square roots
/// sqrt(|a_j||a_k|) and the phases a_k/|a_k| are rational.
std::optional<RationalRepresentation> represent_affine_exact(
    const std::vector<RationalComplex>& a);

/// Random-restart local search over block-diagonal similarities S K S^{-1},
/// which commute with Z_n and so leave det(I - K Z_n) unchanged. Lowers
/// ||K|| when it can; no optimality claim is made (minimizing over all
/// representations is open). The returned norm never exceeds the input's.
ComplexRepresentation reduce_norm_by_scaling(const ComplexRepresentation& rep, int restarts = 4,
                                             int iterations = 400, std::uint64_t seed = 1);

}  // namespace detrep
