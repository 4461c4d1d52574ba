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

#include "detrep/verify.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace detrep {

namespace {

void check_expand_shapes(int side, const MultiDegree& n) {
    std::uint64_t total = degree_sum(n);
    if (total > 24) throw Error(ErrorCode::size_cap, "det_expand capped at |n| <= 24");
    if (std::uint64_t(side) != total)
        throw Error(ErrorCode::dimension, "K side must equal |n|");
}

std::vector<int> var_of_slot(const MultiDegree& n) {
    std::vector<int> v;
    for (std::size_t i = 0; i < n.size(); ++i)
        for (std::uint32_t r = 0; r < n[i]; ++r) v.push_back(int(i));
    return v;
}

// Iterate mixed-radix multi-indices; returns false after the last one.
bool odometer(std::vector<std::uint32_t>& g, const std::vector<std::uint32_t>& dims) {
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (++g[i] < dims[i]) return true;
        g[i] = 0;
    }
    return false;
}

}  // namespace

namespace detail {

template <class S>
Polynomial<S> det_expand_minors(const Matrix<S>& k, const MultiDegree& n) {
    check_expand_shapes(k.rows(), n);
    const int d = int(n.size());
    const int side = k.rows();
    auto slot_var = var_of_slot(n);
    Polynomial<S> out(d);
    out.add_term(Expo(d, 0), S(1));
    const std::uint32_t lim = side >= 32 ? 0 : (1u << side);
    std::vector<int> idx;
    for (std::uint32_t mask = 1; mask < lim; ++mask) {
        idx.clear();
        Expo e(d, 0);
        for (int s = 0; s < side; ++s)
            if ((mask >> s) & 1u) {
                idx.push_back(s);
                ++e[slot_var[s]];
            }
        S minor = det_generic(k.submatrix(idx, idx));
        if (idx.size() % 2 == 1) minor = -minor;
        out.add_term(e, minor);
    }
    return out;
}

template ComplexPoly det_expand_minors<Cplx>(const ComplexMatrix&, const MultiDegree&);
template RationalPoly det_expand_minors<RationalComplex>(const RationalMatrix&, const MultiDegree&);

RationalPoly det_expand_interp(const RationalMatrix& k, const MultiDegree& n) {
    check_expand_shapes(k.rows(), n);
    const int d = int(n.size());
    const int side = k.rows();
    auto slot_var = var_of_slot(n);
    std::vector<std::uint32_t> dims(d);
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) {
        dims[i] = n[i] + 1;
        total *= dims[i];
    }
    // Evaluate det(I - K Z(x)) on the integer grid x_i in {0..n_i}.
    std::vector<RationalComplex> vals(total);
    std::vector<std::uint32_t> g(d, 0);
    std::size_t flat = 0;
    do {
        RationalMatrix m = RationalMatrix::identity(side);
        for (int c = 0; c < side; ++c) {
            RationalComplex x(long(g[slot_var[c]]));
            if (x.is_zero()) continue;
            for (int r = 0; r < side; ++r) m(r, c) -= k(r, c) * x;
        }
        vals[flat++] = det_exact(m);
    } while (odometer(g, dims));

    // Divided differences then Newton-to-monomial along each axis.
    std::size_t stride = 1;
    for (int a = 0; a < d; ++a) {
        const std::size_t len = dims[a];
        const std::size_t block = stride * len;
        std::vector<RationalComplex> line(len);
        for (std::size_t hi = 0; hi < total / block; ++hi)
            for (std::size_t lo = 0; lo < stride; ++lo) {
                const std::size_t base = hi * block + lo;
                for (std::size_t j = 0; j < len; ++j) line[j] = vals[base + j * stride];
                for (std::size_t lev = 1; lev < len; ++lev) {
                    RationalComplex denom{long(lev)};
                    for (std::size_t j = len - 1; j >= lev; --j)
                        line[j] = (line[j] - line[j - 1]) / denom;
                }
                // Horner expansion of the Newton form with nodes 0..len-1.
                std::vector<RationalComplex> c(len);
                c[0] = line[len - 1];
                for (int jn = int(len) - 2; jn >= 0; --jn) {
                    RationalComplex node{long(jn)};
                    for (int i = int(len) - 1 - jn; i >= 1; --i)
                        c[i] = c[i - 1] - node * c[i];
                    c[0] = line[jn] - node * c[0];
                }
                for (std::size_t j = 0; j < len; ++j) vals[base + j * stride] = c[j];
            }
        stride = block;
    }

    RationalPoly out(d);
    g.assign(d, 0);
    flat = 0;
    do {
        if (!vals[flat].is_zero()) out.add_term(Expo(g.begin(), g.end()), vals[flat]);
        ++flat;
    } while (odometer(g, dims));
    return out;
}

ComplexPoly det_expand_interp(const ComplexMatrix& k, const MultiDegree& n) {
    check_expand_shapes(k.rows(), n);
    const int d = int(n.size());
    const int side = k.rows();
    auto slot_var = var_of_slot(n);
    std::vector<std::uint32_t> dims(d);
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) {
        dims[i] = n[i] + 1;
        total *= dims[i];
    }
    std::vector<std::vector<Cplx>> nodes(d);
    for (int i = 0; i < d; ++i) {
        nodes[i].resize(dims[i]);
        for (std::uint32_t j = 0; j < dims[i]; ++j)
            nodes[i][j] = std::polar(1.0, 2.0 * M_PI * j / dims[i]);
    }
    std::vector<Cplx> vals(total);
    std::vector<std::uint32_t> g(d, 0);
    std::size_t flat = 0;
    do {
        ComplexMatrix m = ComplexMatrix::identity(side);
        for (int c = 0; c < side; ++c) {
            Cplx x = nodes[slot_var[c]][g[slot_var[c]]];
            for (int r = 0; r < side; ++r) m(r, c) -= k(r, c) * x;
        }
        vals[flat++] = det_lu(m);
    } while (odometer(g, dims));

    // Inverse DFT along each axis.
    std::size_t stride = 1;
    for (int a = 0; a < d; ++a) {
        const std::size_t len = dims[a];
        const std::size_t block = stride * len;
        std::vector<Cplx> line(len), coef(len);
        for (std::size_t hi = 0; hi < total / block; ++hi)
            for (std::size_t lo = 0; lo < stride; ++lo) {
                const std::size_t base = hi * block + lo;
                for (std::size_t j = 0; j < len; ++j) line[j] = vals[base + j * stride];
                for (std::size_t kk = 0; kk < len; ++kk) {
                    Cplx acc(0, 0);
                    for (std::size_t j = 0; j < len; ++j)
                        acc += line[j] * std::polar(1.0, -2.0 * M_PI * double(j * kk % len) / len);
                    coef[kk] = acc / double(len);
                }
                for (std::size_t j = 0; j < len; ++j) vals[base + j * stride] = coef[j];
            }
        stride = block;
    }

    ComplexPoly out(d);
    g.assign(d, 0);
    flat = 0;
    double scale = 0.0;
    for (const auto& v : vals) scale = std::max(scale, std::abs(v));
    do {
        if (std::abs(vals[flat]) > 1e-14 * std::max(1.0, scale))
            out.add_term(Expo(g.begin(), g.end()), vals[flat]);
        ++flat;
    } while (odometer(g, dims));
    return out;
}

}  // namespace detail

ComplexPoly det_expand(const ComplexMatrix& k, const MultiDegree& n) {
    std::uint64_t side = degree_sum(n);
    std::size_t grid = 1;
    for (auto v : n) grid *= v + 1;
    if (side <= 16 || (std::uint64_t(1) << side) <= grid * 8)
        return detail::det_expand_minors(k, n);
    return detail::det_expand_interp(k, n);
}

RationalPoly det_expand(const RationalMatrix& k, const MultiDegree& n) {
    std::uint64_t side = degree_sum(n);
    std::size_t grid = 1;
    for (auto v : n) grid *= v + 1;
    if (side <= 12 || (std::uint64_t(1) << side) <= grid * 8)
        return detail::det_expand_minors(k, n);
    return detail::det_expand_interp(k, n);
}

namespace {

template <class S>
VerificationReport verify_impl(const Polynomial<S>& p, const Representation<S>& rep, double tol,
                               bool assert_semistable) {
    if (int(rep.n.size()) != p.num_vars())
        throw Error(ErrorCode::dimension, "representation dimension mismatch");
    Polynomial<S> expanded = det_expand(rep.k, rep.n);
    VerificationReport report;
    report.tolerance = tol;

    std::map<Expo, double, GradedLexLess> resid;
    for (const auto& [e, c] : p.terms()) resid[e] = 0.0;
    for (const auto& [e, c] : expanded.terms()) resid[e] = 0.0;
    for (auto& [e, r] : resid) {
        S diff = expanded.coefficient(e) - p.coefficient(e);
        if constexpr (is_exact_scalar<S>::value)
            r = diff.is_zero() ? 0.0 : std::abs(diff.to_complex());
        else
            r = std::abs(diff);
        report.max_abs_residual = std::max(report.max_abs_residual, r);
    }
    report.residuals.assign(resid.begin(), resid.end());
    report.norm_of_k = op_norm(rep.k.to_complex());
    report.pass = report.max_abs_residual <= tol;

    if (assert_semistable) {
        ComplexPoly pf = [&] {
            if constexpr (is_exact_scalar<S>::value)
                return to_complex(p);
            else
                return p;
        }();
        RadiusEstimate s = stability_radius(pf);
        report.bound_checked = report.norm_of_k >= 1.0 / s.upper - tol;
    }
    return report;
}

template <class S>
PmrpReport pmrp_impl(const Matrix<S>& k, const MultiDegree& n, const Polynomial<S>& target,
                     const MultiDegree& m, double tol) {
    check_expand_shapes(k.rows(), n);
    const int d = int(n.size());
    if (int(m.size()) != d || int(target.num_vars()) != d)
        throw Error(ErrorCode::dimension, "pmrp dimension mismatch");
    if (!degree_leq(m, n)) throw Error(ErrorCode::precondition, "pmrp requires m <= n");
    std::vector<int> block_off(d, 0);
    for (int i = 1; i < d; ++i) block_off[i] = block_off[i - 1] + int(n[i - 1]);

    PmrpReport report;
    report.pass = true;
    std::vector<std::uint32_t> dims(d);
    for (int i = 0; i < d; ++i) dims[i] = m[i] + 1;
    std::vector<std::uint32_t> kk(d, 0);
    do {
        // Per-block combinations alpha_i of size k_i from block i.
        std::vector<std::vector<std::vector<int>>> choices(d);
        for (int i = 0; i < d; ++i) {
            choices[i] = subsets_lex(int(n[i]), int(kk[i]));
            for (auto& subset : choices[i])
                for (int& v : subset) v += block_off[i];
        }
        S sum(0);
        std::vector<std::size_t> pick(d, 0);
        while (true) {
            std::vector<int> idx;
            for (int i = 0; i < d; ++i)
                idx.insert(idx.end(), choices[i][pick[i]].begin(), choices[i][pick[i]].end());
            sum += det_generic(k.submatrix(idx, idx));
            int axis = 0;
            while (axis < d) {
                if (++pick[axis] < choices[axis].size()) break;
                pick[axis] = 0;
                ++axis;
            }
            if (axis == d) break;
        }
        std::uint64_t abs_k = 0;
        for (auto v : kk) abs_k += v;
        if (abs_k % 2 == 1) sum = -sum;
        Expo e(kk.begin(), kk.end());
        S diff = sum - target.coefficient(e);
        double r;
        if constexpr (is_exact_scalar<S>::value)
            r = diff.is_zero() ? 0.0 : std::abs(diff.to_complex());
        else
            r = std::abs(diff);
        report.residuals.emplace_back(e, r);
        report.max_abs_residual = std::max(report.max_abs_residual, r);
        if (r > tol) report.pass = false;
    } while (odometer(kk, dims));
    return report;
}

}  // namespace

VerificationReport verify_representation(const ComplexPoly& p, const ComplexRepresentation& rep,
                                         double tol, bool assert_semistable) {
    return verify_impl(p, rep, tol, assert_semistable);
}

VerificationReport verify_representation(const RationalPoly& p, const RationalRepresentation& rep,
                                         double tol, bool assert_semistable) {
    return verify_impl(p, rep, tol, assert_semistable);
}

PmrpReport pmrp_check(const ComplexMatrix& k, const MultiDegree& n, const ComplexPoly& target,
                      const MultiDegree& m, double tol) {
    return pmrp_impl(k, n, target, m, tol);
}

PmrpReport pmrp_check(const RationalMatrix& k, const MultiDegree& n, const RationalPoly& target,
                      const MultiDegree& m) {
    return pmrp_impl(k, n, target, m, 0.0);
}

// ---------------------------------------------------------------------------
// Stability radius
// ---------------------------------------------------------------------------

namespace {

struct DirectionalData {
    int d = 0;
    int tdeg = 0;
    // Coefficients grouped by total degree 1..t, as (exponent, coefficient).
    std::vector<std::vector<std::pair<Expo, Cplx>>> groups;
    std::vector<double> glob;  // sum |p_k| per degree

    // Radial polynomial coefficients c_j(u) for u = exp(i theta), theta[0] = 0.
    std::vector<Cplx> coeffs_at(const std::vector<double>& theta_free) const {
        std::vector<Cplx> u(d);
        u[0] = Cplx(1, 0);
        for (int i = 1; i < d; ++i) u[i] = std::polar(1.0, theta_free[i - 1]);
        std::vector<Cplx> c(tdeg + 1, Cplx(0, 0));
        c[0] = Cplx(1, 0);
        for (int j = 1; j <= tdeg; ++j) {
            for (const auto& [e, coef] : groups[j]) {
                Cplx mono(1, 0);
                for (int i = 0; i < d; ++i)
                    for (std::uint32_t r = 0; r < e[i]; ++r) mono *= u[i];
                c[j] += coef * mono;
            }
        }
        return c;
    }
};

double min_modulus_root(const std::vector<Cplx>& c, Cplx* arg_out) {
    bool nontrivial = false;
    for (std::size_t j = 1; j < c.size(); ++j) nontrivial = nontrivial || std::abs(c[j]) > 1e-300;
    if (!nontrivial) return std::numeric_limits<double>::infinity();
    auto roots = univariate_roots(c);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : roots)
        if (std::abs(r) < best) {
            best = std::abs(r);
            if (arg_out) *arg_out = r;
        }
    return best;
}

// Certified lower bound on the smallest root modulus over a direction cell:
// the positive root of sum_j min(glob_j, |c_j| + j glob_j h) rho^j = 1.
double cell_bound(const DirectionalData& dd, const std::vector<Cplx>& c, double h) {
    std::vector<double> a(dd.tdeg + 1, 0.0);
    double total = 0.0;
    for (int j = 1; j <= dd.tdeg; ++j) {
        a[j] = std::min(dd.glob[j], std::abs(c[j]) + j * dd.glob[j] * h);
        total += a[j];
    }
    if (total <= 0.0) return std::numeric_limits<double>::infinity();
    auto f = [&](double rho) {
        double s = 0.0, pw = 1.0;
        for (int j = 1; j <= dd.tdeg; ++j) {
            pw *= rho;
            s += a[j] * pw;
        }
        return s;
    };
    double hi = 1.0;
    while (f(hi) < 1.0 && hi < 1e12) hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

struct Cell {
    std::vector<double> center;
    double h = 0.0;
    double bound = 0.0;
};

struct CellCmp {
    bool operator()(const Cell& a, const Cell& b) const { return a.bound > b.bound; }
};

}  // namespace

RadiusEstimate stability_radius(const ComplexPoly& p_in, long budget) {
    const int d = p_in.num_vars();
    Cplx p0 = p_in.constant_term();
    if (std::abs(p0) == 0.0)
        throw Error(ErrorCode::precondition, "stability radius requires p(0) != 0");
    ComplexPoly p(d);
    for (const auto& [e, c] : p_in.terms()) p.add_term(e, c / p0);

    auto [deg, tdeg] = poly_degrees(p);
    RadiusEstimate est;
    if (tdeg == 0) {
        est.lower = est.upper = std::numeric_limits<double>::infinity();
        est.converged = true;
        return est;
    }

    DirectionalData dd;
    dd.d = d;
    dd.tdeg = int(tdeg);
    dd.groups.assign(tdeg + 1, {});
    dd.glob.assign(tdeg + 1, 0.0);
    for (const auto& [e, c] : p.terms()) {
        std::uint64_t j = degree_sum(e);
        if (j == 0) continue;
        dd.groups[j].emplace_back(e, c);
        dd.glob[j] += std::abs(c);
    }

    const int free_dims = d - 1;

    // Upper bound: best zero over a direction grid plus coordinate descent.
    double best_rho = std::numeric_limits<double>::infinity();
    std::vector<double> best_theta(std::max(free_dims, 0), 0.0);
    Cplx best_lambda(0, 0);

    auto probe = [&](const std::vector<double>& theta) {
        auto c = dd.coeffs_at(theta);
        Cplx lam;
        double rho = min_modulus_root(c, &lam);
        if (rho < best_rho) {
            best_rho = rho;
            best_theta = theta;
            best_lambda = lam;
        }
        return rho;
    };

    if (free_dims == 0) {
        probe({});
    } else {
        int n0 = free_dims == 1 ? 64 : (free_dims == 2 ? 20 : 8);
        std::vector<std::uint32_t> dims(free_dims, std::uint32_t(n0));
        std::vector<std::uint32_t> g(free_dims, 0);
        do {
            std::vector<double> theta(free_dims);
            for (int i = 0; i < free_dims; ++i) theta[i] = 2.0 * M_PI * g[i] / n0;
            probe(theta);
        } while (odometer(g, dims));
        // Coordinate descent.
        double step = M_PI / n0;
        int guard = 0;
        while (step > 1e-10 && guard++ < 400) {
            bool improved = false;
            for (int axis = 0; axis < free_dims; ++axis) {
                for (int sgn : {+1, -1}) {
                    std::vector<double> theta = best_theta;
                    theta[axis] += sgn * step;
                    if (probe(theta) < best_rho) improved = true;
                }
            }
            if (!improved) step *= 0.5;
        }
    }

    if (std::isfinite(best_rho)) {
        // Newton polish on the radial polynomial at the best direction.
        auto c = dd.coeffs_at(best_theta);
        auto eval = [&](Cplx x) {
            Cplx v = c.back();
            for (int j = int(c.size()) - 2; j >= 0; --j) v = v * x + c[j];
            return v;
        };
        auto dval = [&](Cplx x) {
            Cplx v = double(c.size() - 1) * c.back();
            for (int j = int(c.size()) - 2; j >= 1; --j) v = v * x + double(j) * c[j];
            return v;
        };
        for (int it = 0; it < 20; ++it) {
            Cplx f = eval(best_lambda), df = dval(best_lambda);
            if (std::abs(df) < 1e-300) break;
            Cplx stepc = f / df;
            best_lambda -= stepc;
            if (std::abs(stepc) < 1e-16 * (1.0 + std::abs(best_lambda))) break;
        }
        best_rho = std::abs(best_lambda);
        est.upper = best_rho;
        est.witness.resize(d);
        est.witness[0] = best_lambda;
        for (int i = 1; i < d; ++i) est.witness[i] = best_lambda * std::polar(1.0, best_theta[i - 1]);
    }

    // Certified lower bound.
    if (free_dims == 0) {
        auto c = dd.coeffs_at({});
        auto roots = univariate_roots(c);
        double lower = std::numeric_limits<double>::infinity();
        const int degr = int(roots.size());
        Cplx lead = c.back();
        for (int i = 0; i < degr; ++i) {
            Cplx val = c.back();
            for (int j = int(c.size()) - 2; j >= 0; --j) val = val * roots[i] + c[j];
            Cplx den = lead;
            for (int j = 0; j < degr; ++j)
                if (j != i) den *= (roots[i] - roots[j]);
            double radius = std::abs(den) == 0.0 ? std::numeric_limits<double>::infinity()
                                                 : degr * std::abs(val / den);
            lower = std::min(lower, std::max(0.0, std::abs(roots[i]) - radius));
        }
        // The coefficient-sum bound is also sound; take the better one.
        lower = std::max(lower, cell_bound(dd, c, 0.0));
        est.lower = std::min(lower, est.upper);
        est.converged = est.upper - est.lower <= 1e-3;
        return est;
    }

    std::priority_queue<Cell, std::vector<Cell>, CellCmp> heap;
    long evals = 0;
    const int init = 8;
    {
        std::vector<std::uint32_t> dims(free_dims, init);
        std::vector<std::uint32_t> g(free_dims, 0);
        do {
            Cell cell;
            cell.h = M_PI / init;
            cell.center.resize(free_dims);
            for (int i = 0; i < free_dims; ++i) cell.center[i] = (2.0 * g[i] + 1.0) * M_PI / init;
            cell.bound = cell_bound(dd, dd.coeffs_at(cell.center), cell.h);
            ++evals;
            heap.push(std::move(cell));
        } while (odometer(g, dims));
    }
    const double gap = 1e-3;
    while (true) {
        const Cell& top = heap.top();
        if (top.bound >= est.upper - gap) {
            est.lower = std::min(top.bound, est.upper);
            est.converged = true;
            break;
        }
        if (evals >= budget) {
            est.lower = std::min(top.bound, est.upper);
            est.converged = false;
            break;
        }
        Cell parent = top;
        heap.pop();
        const int children = 1 << free_dims;
        for (int msk = 0; msk < children; ++msk) {
            Cell child;
            child.h = parent.h * 0.5;
            child.center = parent.center;
            for (int i = 0; i < free_dims; ++i)
                child.center[i] += ((msk >> i) & 1 ? +0.5 : -0.5) * parent.h;
            child.bound = cell_bound(dd, dd.coeffs_at(child.center), child.h);
            ++evals;
            heap.push(std::move(child));
        }
    }
    est.lower = std::max(0.0, est.lower);
    return est;
}

// ---------------------------------------------------------------------------
// Torus sup-norm
// ---------------------------------------------------------------------------

SupNormEstimate sup_norm_torus(const ComplexPoly& p, int grid_per_dim, int refine_steps) {
    const int d = p.num_vars();
    if (d > 4) throw Error(ErrorCode::precondition, "sup_norm_torus dense grids require d <= 4");
    if (grid_per_dim < 8) throw Error(ErrorCode::precondition, "grid_per_dim must be >= 8");

    auto [deg, tdeg] = poly_degrees(p);
    // Per-axis power tables over the theta grid.
    std::vector<std::vector<std::vector<Cplx>>> pw(d);
    for (int i = 0; i < d; ++i) {
        pw[i].resize(grid_per_dim);
        for (int g = 0; g < grid_per_dim; ++g) {
            Cplx z = std::polar(1.0, 2.0 * M_PI * g / grid_per_dim);
            pw[i][g].resize(deg[i] + 1);
            pw[i][g][0] = Cplx(1, 0);
            for (std::uint32_t k = 1; k <= deg[i]; ++k) pw[i][g][k] = pw[i][g][k - 1] * z;
        }
    }

    double best = -1.0;
    std::vector<double> best_theta(d, 0.0);
    std::vector<std::uint32_t> dims(d, std::uint32_t(grid_per_dim));
    std::vector<std::uint32_t> g(d, 0);
    do {
        Cplx acc(0, 0);
        for (const auto& [e, c] : p.terms()) {
            Cplx t = c;
            for (int i = 0; i < d; ++i)
                if (e[i] > 0) t *= pw[i][g[i]][e[i]];
            acc += t;
        }
        double v = std::abs(acc);
        if (v > best) {
            best = v;
            for (int i = 0; i < d; ++i) best_theta[i] = 2.0 * M_PI * g[i] / grid_per_dim;
        }
    } while (odometer(g, dims));

    auto value_at = [&](const std::vector<double>& theta) {
        std::vector<Cplx> z(d);
        for (int i = 0; i < d; ++i) z[i] = std::polar(1.0, theta[i]);
        return std::abs(poly_eval(p, z));
    };

    double step = M_PI / grid_per_dim;
    for (int scale = 0; scale < refine_steps; ++scale) {
        for (int rep = 0; rep < 6; ++rep) {
            bool improved = false;
            for (int axis = 0; axis < d; ++axis) {
                for (int sgn : {+1, -1}) {
                    std::vector<double> theta = best_theta;
                    theta[axis] += sgn * step;
                    double v = value_at(theta);
                    if (v > best) {
                        best = v;
                        best_theta = theta;
                        improved = true;
                    }
                }
            }
            if (!improved) break;
        }
        step *= 0.5;
    }

    double lipschitz = 0.0;
    for (const auto& [e, c] : p.terms()) lipschitz += std::abs(c) * double(degree_sum(e));

    SupNormEstimate est;
    est.lower = best;
    est.upper_heuristic = best + lipschitz * step * 2.0;
    est.argmax.resize(d);
    for (int i = 0; i < d; ++i) est.argmax[i] = std::polar(1.0, best_theta[i]);
    return est;
}

}  // namespace detrep
