// Acceptance suite: one line per criterion, pinned tolerances, wall-clock
// budgets enforced. Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "detrep/agler.hpp"
#include "detrep/kvh.hpp"
#include "oracles.hpp"

using namespace detrep;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, double seconds,
            const std::string& detail) {
    std::printf("[%s] criterion %2d: %-34s (%6.2f s) %s\n", pass ? "PASS" : "FAIL", id,
                name.c_str(), seconds, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

RationalPoly random_exact_poly(std::mt19937_64& rng, int d, int tdeg, int max_terms) {
    RationalPoly p(d);
    p.add_term(Expo(d, 0), RationalComplex(1));
    std::uniform_int_distribution<int> expo(0, tdeg);
    std::uniform_int_distribution<int> count(1, max_terms - 1);
    int want = count(rng);
    int guard = 0;
    while (int(p.term_count()) < want + 1 && guard++ < 64) {
        Expo e(d, 0);
        int budget = tdeg;
        bool nonzero = false;
        for (int i = 0; i < d; ++i) {
            int k = std::min(budget, expo(rng));
            e[i] = k;
            budget -= k;
            nonzero = nonzero || k > 0;
        }
        if (!nonzero) continue;
        p.add_term(e, oracles::random_rational(rng, 3, 3));
    }
    if (p.term_count() == 1) {
        Expo e(d, 0);
        e[0] = 1;
        p.add_term(e, oracles::random_rational(rng, 3, 3));
    }
    return p;
}

// Shared pool of (float polynomial, float K) pairs produced by criteria 1-3,
// re-checked against the stability radius in criterion 10.
std::vector<std::pair<ComplexPoly, ComplexMatrix>> g_rep_pool;

void criterion_1() {
    Timer timer;
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> dim(1, 3);
    bool pass = true;
    std::string detail;
    for (int trial = 0; trial < 100; ++trial) {
        int d = dim(rng);
        RationalPoly p = random_exact_poly(rng, d, 3, 6);
        RationalRepresentation rep = represent_unconstrained(p);
        RationalPoly back = det_expand(rep.k, rep.n);
        if (!(back == p)) {
            pass = false;
            detail = "round trip failed at trial " + std::to_string(trial);
            break;
        }
        g_rep_pool.emplace_back(to_complex(p), rep.k.to_complex());
    }
    double sec = timer.seconds();
    if (pass && sec > 60.0) {
        pass = false;
        detail = "runtime budget exceeded";
    }
    if (pass) detail = "100/100 exact round trips";
    report(1, "unconstrained round trip", pass, sec, detail);
}

void criterion_2() {
    Timer timer;
    std::mt19937_64 rng(202);
    std::uniform_int_distribution<int> dim(1, 3);
    std::uniform_real_distribution<double> u(-1, 1), scale_small(0.2, 0.99),
        scale_large(1.5, 6.0);
    bool pass = true;
    std::string detail;
    int beta_le_1 = 0, beta_gt_1 = 0;
    for (int trial = 0; trial < 100 && pass; ++trial) {
        bool small = trial < 50;
        int d = dim(rng);
        ComplexPoly p(d);
        p.add_term(Expo(d, 0), Cplx(1, 0));
        int terms = 1 + int(rng() % 5);
        std::map<Expo, Cplx, GradedLexLess> raw;
        std::uniform_int_distribution<int> expo(0, 3);
        int guard = 0;
        while (int(raw.size()) < terms && guard++ < 64) {
            Expo e(d, 0);
            int budget = 3;
            bool nonzero = false;
            for (int i = 0; i < d; ++i) {
                int k = std::min(budget, expo(rng));
                e[i] = k;
                budget -= k;
                nonzero = nonzero || k > 0;
            }
            if (!nonzero) continue;
            Cplx c(u(rng), u(rng));
            if (std::abs(c) < 0.1) c += Cplx(0.5, 0.5);
            raw.emplace(e, c);
        }
        double sum = 0;
        for (const auto& [e, c] : raw) sum += std::abs(c);
        double target = small ? scale_small(rng) : scale_large(rng);
        for (const auto& [e, c] : raw) p.add_term(e, c * (target / sum));

        BoundedRepresentation b = represent_bounded(p);
        double norm = op_norm(b.rep.k);
        if (small) {
            ++beta_le_1;
            if (!(b.beta <= 1.0 + 1e-12 && norm <= 1.0 + 1e-8)) {
                pass = false;
                detail = "beta <= 1 norm bound failed at trial " + std::to_string(trial);
            }
        } else {
            ++beta_gt_1;
            if (!(b.beta > 1.0 && norm <= b.bound + 1e-8)) {
                pass = false;
                detail = "beta > 1 bound failed at trial " + std::to_string(trial);
            }
        }
        if (pass && !(b.kappa >= 1 && std::uint32_t(b.kappa) <= poly_degrees(p).second)) {
            pass = false;
            detail = "kappa out of range at trial " + std::to_string(trial);
        }
        if (pass) g_rep_pool.emplace_back(p, b.rep.k);
    }
    double sec = timer.seconds();
    if (pass && sec > 120.0) {
        pass = false;
        detail = "runtime budget exceeded";
    }
    if (pass)
        detail = std::to_string(beta_le_1) + " with beta<=1, " + std::to_string(beta_gt_1) +
                 " with beta>1";
    report(2, "norm-bounded construction", pass, sec, detail);
}

void criterion_3() {
    Timer timer;
    std::mt19937_64 rng(303);
    // Pythagorean phases keep |a_i| and all pairwise square roots rational.
    const std::array<std::array<long, 3>, 5> triples = {
        {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {1, 0, 1}, {20, 21, 29}}};
    bool pass = true;
    std::string detail;
    for (int trial = 0; trial < 50 && pass; ++trial) {
        int d = 1 + int(rng() % 6);
        std::uniform_int_distribution<int> rnum(1, 3);
        std::vector<mpq_class> r2(d);
        mpq_class total = 0;
        for (int i = 0; i < d; ++i) {
            mpq_class r(rnum(rng), rnum(rng));
            r.canonicalize();
            r2[i] = r * r;
            total += r2[i];
        }
        // Moduli m_i = (r_i^2 / total) * w with rational w <= 1: the sum of
        // moduli is w, and sqrt(m_j m_k) = (r_j r_k / total) w stays rational,
        // so the exact construction applies.
        mpq_class w(1 + int(rng() % 4), 4);
        w.canonicalize();
        std::vector<RationalComplex> a(d);
        std::vector<Cplx> af(d);
        mpq_class sum_abs = 0;
        for (int i = 0; i < d; ++i) {
            const auto& tri = triples[rng() % triples.size()];
            RationalComplex phase(mpq_class(tri[0], tri[2]), mpq_class(tri[1], tri[2]));
            if (rng() % 2) phase = -phase;
            if (rng() % 2) phase = phase.conj();
            mpq_class modulus = r2[i] / total * w;
            a[i] = RationalComplex(modulus) * phase;
            af[i] = a[i].to_complex();
            sum_abs += modulus;
        }
        auto exact = represent_affine_exact(a);
        if (!exact) {
            pass = false;
            detail = "exact affine construction unavailable at trial " + std::to_string(trial);
            break;
        }
        RationalPoly want(d);
        want.add_term(Expo(d, 0), RationalComplex(1));
        for (int i = 0; i < d; ++i) {
            Expo e(d, 0);
            e[i] = 1;
            want.add_term(e, -a[i]);
        }
        if (!(det_expand(exact->k, exact->n) == want)) {
            pass = false;
            detail = "exact det_expand mismatch at trial " + std::to_string(trial);
            break;
        }
        ComplexRepresentation rf = represent_affine(af);
        SvdResult s = svd(rf.k);
        double sum_f = sum_abs.get_d();
        if (std::abs(s.singular_values[0] - sum_f) > 1e-10 ||
            (d > 1 && s.singular_values[1] > 1e-10)) {
            pass = false;
            detail = "norm/rank check failed at trial " + std::to_string(trial);
            break;
        }
        g_rep_pool.emplace_back(to_complex(want), rf.k);
    }
    if (pass) detail = "50/50 exact + spectral checks";
    report(3, "affine Agler denominators", pass, timer.seconds(), detail);
}

void criterion_4() {
    Timer timer;
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> rad(0, 0.9), ang(0, 2 * M_PI);
    bool pass = true;
    std::string detail;
    double worst = 0;
    for (int trial = 0; trial < 20 && pass; ++trial) {
        int side = 1 + int(rng() % 8);
        ComplexMatrix k = oracles::random_contraction(rng, side, 0.995);
        ComplexMatrix j = julia_operator(k);
        double unit = (j.adjoint() * j - ComplexMatrix::identity(2 * side)).frobenius();
        if (unit > 1e-8) {
            pass = false;
            detail = "julia unitarity residual " + std::to_string(unit);
            break;
        }
        int d = 1 + int(rng() % 3);
        MultiDegree n(d, 0);
        for (int s = 0; s < side; ++s) ++n[rng() % d];
        ComplexPoly p = det_expand(k, n);
        for (int pt = 0; pt < 100; ++pt) {
            std::vector<Cplx> z(d);
            for (auto& v : z) v = std::polar(rad(rng), ang(rng));
            if (std::abs(poly_eval(p, z)) < 1e-9) continue;
            Cplx rational = inner_eval_rational(p, n, z);
            Cplx julia = inner_eval_julia(k, n, z);
            double dev = std::abs(rational - julia) / (1.0 + std::abs(rational));
            worst = std::max(worst, dev);
            if (dev > 1e-8) {
                pass = false;
                detail = "identity deviation " + std::to_string(dev);
                break;
            }
        }
    }
    if (pass) detail = "max deviation " + std::to_string(worst);
    report(4, "Julia determinant identity", pass, timer.seconds(), detail);
}

void criterion_5() {
    Timer timer;
    std::mt19937_64 rng(505);
    bool pass = true;
    std::string detail;
    double worst = 0;
    for (int trial = 0; trial < 200 && pass; ++trial) {
        int t = 1 + int(rng() % 4);
        std::vector<int> sizes(t + 1);
        for (auto& s : sizes) s = 1 + int(rng() % 4);
        std::vector<ComplexMatrix> a;
        for (int i = 0; i <= t; ++i)
            a.push_back(oracles::random_matrix(rng, sizes[i], sizes[(i + 1) % (t + 1)]));
        auto [block, direct] = lemma_det_collapse<Cplx>(a);
        double dev = std::abs(block - direct) / (1.0 + std::abs(direct));
        worst = std::max(worst, dev);
        if (dev > 1e-10) {
            pass = false;
            detail = "relative deviation " + std::to_string(dev);
        }
    }
    if (pass) detail = "200 chains, max rel deviation " + std::to_string(worst);
    report(5, "block determinant collapse", pass, timer.seconds(), detail);
}

void criterion_6() {
    Timer timer;
    std::mt19937_64 rng(606);
    bool pass = true;
    std::string detail;
    for (int trial = 0; trial < 50 && pass; ++trial) {
        int d = 1 + int(rng() % 3);
        MultiDegree n(d, 0);
        int total = 4 + int(rng() % 7);  // |n| <= 10
        for (int s = 0; s < total; ++s) ++n[rng() % d];
        RationalMatrix k(total, total);
        for (int i = 0; i < total; ++i)
            for (int j = 0; j < total; ++j) k(i, j) = oracles::random_rational(rng, 2, 2);
        RationalPoly target = det_expand(k, n);
        PmrpReport r = pmrp_check(k, n, target, n);
        if (!r.pass || r.max_abs_residual != 0.0) {
            pass = false;
            detail = "pmrp mismatch at trial " + std::to_string(trial);
        }
    }
    if (pass) detail = "50/50 exact coefficient matches";
    report(6, "principal minor relations", pass, timer.seconds(), detail);
}

void criterion_7() {
    Timer timer;
    bool pass = true;
    std::string detail;

    KvhReport r3 = kvh_report(3, 1.0, 64, 25);
    if (std::abs(r3.agler_value - 6.0) > 1e-6) {
        pass = false;
        detail = "agler value " + std::to_string(r3.agler_value);
    }
    if (pass && !(r3.sup_lower >= 4.99 && r3.sup_lower <= 5.01)) {
        pass = false;
        detail = "sup estimate " + std::to_string(r3.sup_lower);
    }
    if (pass && !(r3.vn_ratio_lower >= 6.0 / 5.0 - 1e-3)) {
        pass = false;
        detail = "ratio " + std::to_string(r3.vn_ratio_lower);
    }

    if (pass) {
        KvhReport r2 = kvh_report(2, 1.0, 64, 25);
        std::vector<Cplx> alt{Cplx(1, 0), Cplx(-1, 0)};
        double at_alt = std::abs(poly_eval(kvh_poly(2, 1.0), alt));
        if (std::abs(r2.sup_lower - 4.0) > 1e-6 || std::abs(at_alt - 4.0) > 1e-12) {
            pass = false;
            detail = "d=2 sup " + std::to_string(r2.sup_lower);
        }
    }

    KvhOptimal opt = kvh_optimal_s();
    if (pass) {
        double r13 = std::sqrt(13.0);
        if (std::abs(opt.s_star - (r13 + 1.0) / 6.0) > 1e-15 ||
            std::abs(opt.ratio - std::sqrt((35.0 + 13.0 * r13) / 6.0) / 3.0) > 1e-15) {
            pass = false;
            detail = "closed forms drifted";
        }
    }
    if (pass) {
        double argmax = kvh_ratio_grid_argmax(0.5, 1.1, 0.01, 32);
        if (std::abs(argmax - opt.s_star) > 0.02) {
            pass = false;
            detail = "grid argmax " + std::to_string(argmax) + " vs s* " +
                     std::to_string(opt.s_star);
        } else {
            detail = "agler 6, sup " + std::to_string(r3.sup_lower) + ", argmax " +
                     std::to_string(argmax);
        }
    }
    double sec = timer.seconds();
    if (pass && sec > 300.0) {
        pass = false;
        detail = "runtime budget exceeded";
    }
    report(7, "KVH family reproduction", pass, sec, detail);
}

void criterion_8() {
    Timer timer;
    bool pass = true;
    std::string detail;
    KvhSection5 ex = kvh_section5_example(0.9, 400000);
    if (!(ex.radius.lower > 0.999)) {
        pass = false;
        detail = "radius lower " + std::to_string(ex.radius.lower);
    } else if (std::abs(ex.f_at_tuple_norm - 1.08) > 1e-6) {
        pass = false;
        detail = "||f(T)|| = " + std::to_string(ex.f_at_tuple_norm);
    } else {
        detail = "radius lower " + std::to_string(ex.radius.lower) + ", ||f(T)|| = 1.08";
    }
    report(8, "stable non-Agler denominator", pass, timer.seconds(), detail);
}

void criterion_9() {
    Timer timer;
    bool pass = true;
    std::string detail;

    CdExactResult exact = cd_matrix_exact(RationalComplex(1), 3);
    long vals[16] = {6, -3, -3, 0, -3, 4, 2, -3, -3, 2, 4, -3, 0, -3, -3, 6};
    for (int i = 0; i < 16 && pass; ++i) {
        mpq_class want(vals[i], 18);
        want.canonicalize();
        if (!(exact.b(i / 4, i % 4) == RationalComplex(want))) {
            pass = false;
            detail = "exact display mismatch at entry " + std::to_string(i);
        }
    }
    double min_min = 0;
    for (int d = 3; d <= 11 && pass; ++d) {
        CdResult r = cd_matrix(Cplx(1, 0), d);
        min_min = std::min(min_min, r.min_eigenvalue);
        if (r.min_eigenvalue < -1e-9) {
            pass = false;
            detail = "min eigenvalue " + std::to_string(r.min_eigenvalue) + " at d = " +
                     std::to_string(d);
        }
    }
    double sec = timer.seconds();
    if (pass && sec > 120.0) {
        pass = false;
        detail = "runtime budget exceeded";
    }
    if (pass) detail = "display exact, min eigenvalue >= " + std::to_string(min_min);
    report(9, "Christoffel-Darboux positivity", pass, sec, detail);
}

void criterion_10() {
    Timer timer;
    bool pass = true;
    std::string detail;
    int checked = 0;
    for (const auto& [p, k] : g_rep_pool) {
        if (k.rows() == 0) continue;
        RadiusEstimate s = stability_radius(p, 2000);
        double norm = op_norm(k);
        ++checked;
        if (norm <= 0) continue;
        if (!(1.0 / norm <= s.upper + 1e-6)) {
            pass = false;
            detail = "1/||K|| = " + std::to_string(1.0 / norm) + " exceeds upper " +
                     std::to_string(s.upper);
            break;
        }
    }
    if (pass) detail = std::to_string(checked) + " representations checked";
    report(10, "norm vs stability radius", pass, timer.seconds(), detail);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%s: %d criteria failed\n", g_failures == 0 ? "SUCCESS" : "FAILURE", g_failures);
    return g_failures;
}
