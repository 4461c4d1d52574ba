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

#include "detrep/kvh.hpp"

#include <cmath>

namespace detrep {

KvhConfig kvh_default_config(int d, double s) {
    if (d < 2) throw Error(ErrorCode::precondition, "kvh requires d >= 2");
    KvhConfig config;
    config.d = d;
    config.s = s;
    config.unit_vectors.resize(d);
    for (int j = 0; j < d; ++j) {
        double ang = 2.0 * M_PI * j / d;
        config.unit_vectors[j] = {std::cos(ang), std::sin(ang)};
    }
    return config;
}

void kvh_validate(const KvhConfig& config) {
    if (config.d < 2 || int(config.unit_vectors.size()) != config.d)
        throw Error(ErrorCode::precondition, "config needs d >= 2 unit vectors");
    double sx = 0, sy = 0;
    for (const auto& v : config.unit_vectors) {
        double nrm = std::hypot(v[0], v[1]);
        if (std::abs(nrm - 1.0) > 1e-12)
            throw Error(ErrorCode::precondition, "config vectors must be unit length");
        sx += v[0];
        sy += v[1];
    }
    if (std::hypot(sx, sy) > 1e-12)
        throw Error(ErrorCode::precondition, "config vectors must sum to zero");
}

ComplexPoly kvh_poly(int d, double s) {
    if (d < 2) throw Error(ErrorCode::precondition, "kvh requires d >= 2");
    ComplexPoly p(d);
    for (int i = 0; i < d; ++i) {
        Expo e(d, 0);
        e[i] = 2;
        p.add_term(e, Cplx(s, 0));
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Expo e(d, 0);
            e[i] = 1;
            e[j] = 1;
            p.add_term(e, Cplx(-2, 0));
        }
    return p;
}

RationalPoly kvh_poly_exact(int d, const mpq_class& s) {
    if (d < 2) throw Error(ErrorCode::precondition, "kvh requires d >= 2");
    RationalPoly p(d);
    for (int i = 0; i < d; ++i) {
        Expo e(d, 0);
        e[i] = 2;
        p.add_term(e, RationalComplex(s));
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Expo e(d, 0);
            e[i] = 1;
            e[j] = 1;
            p.add_term(e, RationalComplex(-2));
        }
    return p;
}

KvhFormNorm kvh_form_norm(int d, double s) {
    if (d < 2) throw Error(ErrorCode::precondition, "kvh requires d >= 2");
    std::vector<double> a(std::size_t(d) * d, -1.0);
    for (int i = 0; i < d; ++i) a[std::size_t(i) * d + i] = s;
    auto evals = symmetric_eigenvalues(a, d);
    std::vector<double> expected(d, 1.0 + s);
    expected[0] = s - d + 1;
    std::sort(expected.begin(), expected.end());
    double resid = 0.0;
    for (int i = 0; i < d; ++i) resid = std::max(resid, std::abs(evals[i] - expected[i]));
    KvhFormNorm out;
    out.norm = std::max(1.0 + s, std::abs(s - d + 1));
    out.eig_residual = resid;
    return out;
}

namespace {

template <class S>
Matrix<S> kvh_matrix(const S& vx, const S& vy) {
    Matrix<S> t(4, 4);
    t(0, 1) = vx;
    t(0, 2) = vy;
    t(1, 3) = vx;
    t(2, 3) = vy;
    return t;
}

}  // namespace

CommutingTuple<Cplx> kvh_tuple(const KvhConfig& config) {
    kvh_validate(config);
    std::vector<ComplexMatrix> ms;
    ms.reserve(config.d);
    for (const auto& v : config.unit_vectors)
        ms.push_back(kvh_matrix<Cplx>(Cplx(v[0], 0), Cplx(v[1], 0)));
    return CommutingTuple<Cplx>(std::move(ms), 1e-12);
}

CommutingTuple<RationalComplex> kvh_tuple_exact(
    const std::vector<std::array<mpq_class, 2>>& vectors) {
    if (vectors.size() < 2) throw Error(ErrorCode::precondition, "kvh requires d >= 2");
    mpq_class sx = 0, sy = 0;
    for (const auto& v : vectors) {
        if (v[0] * v[0] + v[1] * v[1] != 1)
            throw Error(ErrorCode::precondition, "vectors must be exactly unit length");
        sx += v[0];
        sy += v[1];
    }
    if (sx != 0 || sy != 0)
        throw Error(ErrorCode::precondition, "vectors must sum to zero exactly");
    std::vector<RationalMatrix> ms;
    ms.reserve(vectors.size());
    for (const auto& v : vectors)
        ms.push_back(kvh_matrix<RationalComplex>(RationalComplex(v[0]), RationalComplex(v[1])));
    return CommutingTuple<RationalComplex>(std::move(ms), 0.0);
}

std::vector<std::array<mpq_class, 2>> kvh_exact_default_vectors(int d) {
    if (d < 2 || d % 2 != 0)
        throw Error(ErrorCode::precondition,
                    "exact default vectors pair antipodally and need even d");
    static const std::array<std::array<long, 3>, 8> triples = {{{1, 0, 1},
                                                                {3, 4, 5},
                                                                {5, 12, 13},
                                                                {8, 15, 17},
                                                                {7, 24, 25},
                                                                {20, 21, 29},
                                                                {9, 40, 41},
                                                                {12, 35, 37}}};
    if (d / 2 > int(triples.size()))
        throw Error(ErrorCode::precondition, "exact default vectors support d <= 16");
    std::vector<std::array<mpq_class, 2>> out;
    for (int j = 0; j < d / 2; ++j) {
        mpq_class x(triples[j][0], triples[j][2]);
        mpq_class y(triples[j][1], triples[j][2]);
        x.canonicalize();
        y.canonicalize();
        out.push_back({x, y});
        out.push_back({-x, -y});
    }
    return out;
}

KvhReport kvh_report(int d, double s, int grid, int refine_steps) {
    if (d > 4) throw Error(ErrorCode::precondition, "dense torus grids require d <= 4");
    ComplexPoly p = kvh_poly(d, s);
    SupNormEstimate sup = sup_norm_torus(p, grid, refine_steps);
    CommutingTuple<Cplx> tuple = kvh_tuple(kvh_default_config(d, s));
    double agler = agler_lower_bound(p, {tuple});

    KvhReport report;
    report.d = d;
    report.s = s;
    report.sup_lower = sup.lower;
    report.sup_upper_heuristic = sup.upper_heuristic;
    report.agler_value = agler;
    report.agler_closed_form = (1.0 + s) * d;
    report.vn_ratio_lower = agler / sup.upper_heuristic;
    if (d % 2 == 0) {
        std::vector<Cplx> alt(d);
        for (int i = 0; i < d; ++i) alt[i] = (i % 2 == 0) ? Cplx(1, 0) : Cplx(-1, 0);
        double at_alt = std::abs(poly_eval(p, alt));
        if (sup.lower < at_alt - 1e-6)
            throw Error(ErrorCode::internal, "grid missed the alternating-point maximum");
        report.sup_note = "even d: sup attained at (1,-1,...,1,-1)";
    } else {
        report.sup_note = "odd d: strict gap below (1+s)d";
    }
    return report;
}

KvhOptimal kvh_optimal_s() {
    KvhOptimal out;
    double r13 = std::sqrt(13.0);
    out.s_star = (r13 + 1.0) / 6.0;
    out.ratio = std::sqrt((35.0 + 13.0 * r13) / 6.0) / 3.0;
    return out;
}

double kvh_ratio_grid_argmax(double lo, double hi, double step, int grid) {
    double best_s = lo, best_ratio = -1.0;
    for (double s = lo; s <= hi + 1e-12; s += step) {
        KvhReport r = kvh_report(3, s, grid, 20);
        if (r.vn_ratio_lower > best_ratio) {
            best_ratio = r.vn_ratio_lower;
            best_s = s;
        }
    }
    return best_s;
}

KvhSection5 kvh_section5_example(double r, long budget) {
    if (!(r > 5.0 / 6.0 && r < 1.0))
        throw Error(ErrorCode::precondition, "requires 5/6 < r < 1");
    const int d = 3;
    ComplexPoly p5 = kvh_poly(d, 1.0) * Cplx(0.2, 0.0);  // normalized, sup norm 1
    MultiDegree m(d, 2);
    ComplexPoly rev = poly_reverse(p5, m);
    Expo k(d, 1);
    ComplexPoly shift = ComplexPoly::monomial(d, k, Cplx(1, 0));
    ComplexPoly q = ComplexPoly::constant(d, Cplx(1, 0)) + (shift * rev) * Cplx(r, 0);

    // f = (z^{k+m} + r p) / q evaluated at the tuple; the denominator is the
    // identity because all triple products of the T_i vanish.
    Expo km(d, 3);
    ComplexPoly num = ComplexPoly::monomial(d, km, Cplx(1, 0)) + p5 * Cplx(r, 0);
    CommutingTuple<Cplx> tuple = kvh_tuple(kvh_default_config(d, 1.0));
    ComplexMatrix nmat = poly_eval_tuple(num, tuple);
    ComplexMatrix dmat = poly_eval_tuple(q, tuple);
    ComplexMatrix f_at = solve_lu(dmat, nmat);

    KvhSection5 out;
    out.q = q;
    out.f_at_tuple_norm = op_norm(f_at);
    out.radius = stability_radius(q, budget);
    out.q_stable = out.radius.lower > 1.0 - 1e-3;
    return out;
}

}  // namespace detrep
