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

#include "detrep/represent.hpp"

#include <cmath>
#include <random>

#include "detrep/verify.hpp"

namespace detrep {

BoundedChain bounded_factor_chain(const ComplexPoly& p) {
    detail::require_unit_constant(p);
    const int d = p.num_vars();

    // Support of p - 1, in canonical graded-lex order.
    std::vector<std::pair<Expo, Cplx>> support;
    double sum_abs = 0.0;
    for (const auto& [e, c] : p.terms()) {
        if (degree_sum(e) == 0) continue;
        support.emplace_back(e, c);
        sum_abs += std::abs(c);
    }
    BoundedChain out;
    out.chain.num_vars = d;
    if (support.empty()) {
        Matrix<Cplx> c0(1, 1);
        out.chain.c.push_back(c0);  // q = 0
        return out;
    }

    auto [deg, tdeg] = poly_degrees(p);
    const int t = int(tdeg);
    const int m = int(support.size());
    out.beta = std::pow(sum_abs, 1.0 / (t + 1));
    const double edge = std::pow(out.beta, (1.0 - t) / 2.0);

    // Factor slots: z_1 factors first, then z_2, ...; padding ones in the
    // trailing slots. L_1 contains no unit entries since every |k| >= 1.
    std::vector<std::vector<int>> slots(m);
    for (int s = 0; s < m; ++s) {
        const Expo& e = support[s].first;
        for (int i = 0; i < d; ++i)
            for (std::uint32_t r = 0; r < e[i]; ++r) slots[s].push_back(i + 1);
        slots[s].resize(t, 0);
    }

    ComplexMatrix c0(1, m), ct(m, 1);
    for (int s = 0; s < m; ++s) {
        Cplx c = support[s].second;
        c0(0, s) = -edge * std::sqrt(std::abs(c));
        ct(s, 0) = edge * c / std::sqrt(std::abs(c));
    }
    out.chain.c.push_back(std::move(c0));
    for (int j = 1; j < t; ++j) out.chain.c.push_back(ComplexMatrix::identity(m) * Cplx(out.beta, 0));
    out.chain.c.push_back(std::move(ct));
    for (int j = 0; j < t; ++j) {
        std::vector<int> lj(m);
        for (int s = 0; s < m; ++s) lj[s] = slots[s][j];
        out.chain.l.push_back(std::move(lj));
    }

    out.kappa = 1;
    for (int j = 1; j < t; ++j) {
        bool has_unit = false;
        for (int s = 0; s < m; ++s) has_unit = has_unit || (slots[s][j] == 0);
        if (has_unit) ++out.kappa;
    }
    return out;
}

BoundedRepresentation represent_bounded(const ComplexPoly& p) {
    BoundedChain bc = bounded_factor_chain(p);
    BoundedRepresentation out;
    out.rep = chain_to_representation(bc.chain);
    out.beta = bc.beta;
    out.kappa = bc.kappa;
    double geo = 0.0;
    for (int i = 0; i < bc.kappa; ++i) geo += std::pow(bc.beta, i);
    double inner = (bc.beta * bc.beta - 1.0) * geo * geo + 1.0;
    out.bound = bc.beta * (inner > 1.0 ? std::sqrt(inner) : 1.0);
    return out;
}

ComplexRepresentation represent_affine(const std::vector<Cplx>& a) {
    const int d = int(a.size());
    if (d == 0) throw Error(ErrorCode::invalid_argument, "empty coefficient list");
    ComplexRepresentation rep;
    rep.n = MultiDegree(d, 1);
    rep.k = ComplexMatrix(d, d);
    std::vector<double> mod(d);
    std::vector<Cplx> phase(d);
    for (int i = 0; i < d; ++i) {
        mod[i] = std::abs(a[i]);
        phase[i] = mod[i] == 0.0 ? Cplx(1, 0) : a[i] / mod[i];
    }
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) rep.k(j, k) = std::sqrt(mod[j] * mod[k]) * phase[k];
    return rep;
}

ComplexRepresentation reduce_norm_by_scaling(const ComplexRepresentation& rep, int restarts,
                                             int iterations, std::uint64_t seed) {
    const int side = rep.k.rows();
    if (side == 0) return rep;
    const int d = int(rep.n.size());
    std::vector<int> block_of;
    for (int i = 0; i < d; ++i)
        for (std::uint32_t r = 0; r < rep.n[i]; ++r) block_of.push_back(i);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    auto apply = [&](const ComplexMatrix& s) {
        ComplexMatrix sinv = solve_lu(s, ComplexMatrix::identity(side));
        return (s * rep.k) * sinv;
    };

    ComplexMatrix best_s = ComplexMatrix::identity(side);
    double best = op_norm(rep.k);

    for (int restart = 0; restart < std::max(1, restarts); ++restart) {
        ComplexMatrix s = ComplexMatrix::identity(side);
        if (restart > 0) {
            for (int i = 0; i < side; ++i) s(i, i) = Cplx(std::exp(0.5 * unif(rng)), 0);
        }
        double cur = op_norm(apply(s));
        double diag_step = 0.25, block_step = 0.2;
        for (int iter = 0; iter < iterations; ++iter) {
            bool improved = false;
            // Diagonal scaling moves.
            for (int i = 0; i < side; ++i) {
                for (double sgn : {+1.0, -1.0}) {
                    ComplexMatrix trial = s;
                    double mag = std::abs(trial(i, i)) * std::exp(sgn * diag_step);
                    if (mag < 1e-3 || mag > 1e3) continue;
                    trial(i, i) = Cplx(mag, 0);
                    double v = op_norm(apply(trial));
                    if (v < cur - 1e-14) {
                        cur = v;
                        s = trial;
                        improved = true;
                    }
                }
            }
            // A random in-block rotation move per sweep.
            if (side > d) {
                int i = int(rng() % side), j = int(rng() % side);
                if (i != j && block_of[i] == block_of[j]) {
                    ComplexMatrix trial = s;
                    Cplx eps = block_step * Cplx(unif(rng), unif(rng));
                    for (int c = 0; c < side; ++c) trial(i, c) += eps * s(j, c);
                    double v = op_norm(apply(trial));
                    if (v < cur - 1e-14) {
                        cur = v;
                        s = trial;
                        improved = true;
                    }
                }
            }
            if (!improved) {
                diag_step *= 0.5;
                block_step *= 0.5;
                if (diag_step < 1e-4) break;
            }
        }
        if (cur < best) {
            best = cur;
            best_s = s;
        }
    }

    ComplexRepresentation out{rep.n, apply(best_s)};
    // Similarity conditioning guard: keep the input if rounding broke the
    // representation identity.
    if (degree_sum(rep.n) <= 16) {
        VerificationReport check = verify_representation(det_expand(rep.k, rep.n), out, 1e-7);
        if (!check.pass) return rep;
    }
    return out;
}

std::optional<RationalRepresentation> represent_affine_exact(
    const std::vector<RationalComplex>& a) {
    const int d = int(a.size());
    if (d == 0) throw Error(ErrorCode::invalid_argument, "empty coefficient list");
    std::vector<mpq_class> mod(d);
    std::vector<RationalComplex> phase(d);
    for (int i = 0; i < d; ++i) {
        auto m = RationalComplex::sqrt_exact(a[i].norm2());
        if (!m) return std::nullopt;
        mod[i] = *m;
        phase[i] = (mod[i] == 0) ? RationalComplex(1)
                                 : a[i] / RationalComplex(mod[i]);
    }
    RationalRepresentation rep;
    rep.n = MultiDegree(d, 1);
    rep.k = RationalMatrix(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            auto s = RationalComplex::sqrt_exact(mod[j] * mod[k]);
            if (!s) return std::nullopt;
            rep.k(j, k) = RationalComplex(*s) * phase[k];
        }
    return rep;
}

}  // namespace detrep
