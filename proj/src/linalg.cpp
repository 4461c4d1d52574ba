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

#include "detrep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace detrep {

namespace {

// Orthonormalize the remaining columns of u (indices >= filled) against the
// first `filled` columns, starting from standard basis vectors.
void complete_basis(ComplexMatrix& u, int filled) {
    const int m = u.rows();
    int next = filled;
    for (int cand = 0; cand < m && next < m; ++cand) {
        std::vector<Cplx> w(m, Cplx(0, 0));
        w[cand] = Cplx(1, 0);
        for (int pass = 0; pass < 2; ++pass) {
            for (int j = 0; j < next; ++j) {
                Cplx dot(0, 0);
                for (int i = 0; i < m; ++i) dot += std::conj(u(i, j)) * w[i];
                for (int i = 0; i < m; ++i) w[i] -= dot * u(i, j);
            }
        }
        double nrm = 0;
        for (int i = 0; i < m; ++i) nrm += std::norm(w[i]);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-8) continue;
        for (int i = 0; i < m; ++i) u(i, next) = w[i] / nrm;
        ++next;
    }
    if (next < m) throw Error(ErrorCode::internal, "basis completion failed");
}

SvdResult svd_tall(const ComplexMatrix& m_in) {
    const int m = m_in.rows(), n = m_in.cols();
    ComplexMatrix w = m_in;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double a = 0, b = 0;
                Cplx c(0, 0);
                for (int i = 0; i < m; ++i) {
                    a += std::norm(w(i, p));
                    b += std::norm(w(i, q));
                    c += std::conj(w(i, p)) * w(i, q);
                }
                double cc = std::abs(c);
                if (cc == 0.0 || a == 0.0 || b == 0.0) continue;
                off = std::max(off, cc / std::sqrt(a * b));
                if (cc <= 1e-15 * std::sqrt(a * b)) continue;
                // De-phase so the 2x2 Gram block is real, then rotate:
                // J = diag(1, conj(alpha)) * R(theta).
                Cplx am = std::conj(c) / cc;
                double zeta = (b - a) / (2.0 * cc);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double cs = 1.0 / std::sqrt(1.0 + t * t);
                double sn = cs * t;
                for (int i = 0; i < m; ++i) {
                    Cplx wp = w(i, p), wq = am * w(i, q);
                    w(i, p) = cs * wp - sn * wq;
                    w(i, q) = sn * wp + cs * wq;
                }
                for (int i = 0; i < n; ++i) {
                    Cplx vp = v(i, p), vq = am * v(i, q);
                    v(i, p) = cs * vp - sn * vq;
                    v(i, q) = sn * vp + cs * vq;
                }
            }
        }
        if (off < 1e-14) break;
    }

    std::vector<double> sig(n);
    for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int i = 0; i < m; ++i) s += std::norm(w(i, j));
        sig[j] = std::sqrt(s);
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return sig[x] > sig[y]; });

    SvdResult r;
    r.singular_values.resize(n);
    r.u = ComplexMatrix(m, m);
    r.v = ComplexMatrix(n, n);
    double smax = sig.empty() ? 0.0 : sig[order.empty() ? 0 : order[0]];
    int filled = 0;
    for (int j = 0; j < n; ++j) {
        int src = order[j];
        r.singular_values[j] = sig[src];
        for (int i = 0; i < n; ++i) r.v(i, j) = v(i, src);
        if (sig[src] > smax * 1e-13 && sig[src] > 0) {
            for (int i = 0; i < m; ++i) r.u(i, j) = w(i, src) / sig[src];
            filled = j + 1;
        }
    }
    complete_basis(r.u, filled);
    return r;
}

}  // namespace

SvdResult svd(const ComplexMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) {
        SvdResult r;
        r.u = ComplexMatrix::identity(m.rows());
        r.v = ComplexMatrix::identity(m.cols());
        return r;
    }
    if (m.rows() >= m.cols()) return svd_tall(m);
    SvdResult t = svd_tall(m.adjoint());
    SvdResult r;
    r.u = t.v;
    r.v = t.u;
    r.singular_values = t.singular_values;
    return r;
}

double op_norm(const ComplexMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    SvdResult r = svd(m);
    return r.singular_values.empty() ? 0.0 : r.singular_values[0];
}

HermitianEig hermitian_eig(const ComplexMatrix& h_in) {
    if (h_in.rows() != h_in.cols())
        throw Error(ErrorCode::dimension, "hermitian_eig requires a square matrix");
    const int n = h_in.rows();
    ComplexMatrix h = h_in;
    ComplexMatrix q = ComplexMatrix::identity(n);
    if (n == 0) return {{}, q};

    double scale = h.frobenius();
    const int max_sweeps = 80;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n - 1; ++p)
            for (int r = p + 1; r < n; ++r) off += std::norm(h(p, r));
        if (std::sqrt(off) <= 1e-15 * std::max(scale, 1e-300)) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int r = p + 1; r < n; ++r) {
                Cplx c = h(p, r);
                double cc = std::abs(c);
                if (cc <= 1e-18 * std::max(scale, 1e-300)) continue;
                double a = h(p, p).real(), b = h(r, r).real();
                Cplx alpha = c / cc;
                Cplx am = std::conj(alpha);
                double zeta = (b - a) / (2.0 * cc);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double cs = 1.0 / std::sqrt(1.0 + t * t);
                double sn = cs * t;
                // H <- J^H H J with J = diag(1, conj(alpha)) R(theta).
                for (int i = 0; i < n; ++i) {
                    Cplx hp = h(i, p), hr = am * h(i, r);
                    h(i, p) = cs * hp - sn * hr;
                    h(i, r) = sn * hp + cs * hr;
                }
                for (int j = 0; j < n; ++j) {
                    Cplx hp = h(p, j), hr = alpha * h(r, j);
                    h(p, j) = cs * hp - sn * hr;
                    h(r, j) = sn * hp + cs * hr;
                }
                for (int i = 0; i < n; ++i) {
                    Cplx qp = q(i, p), qr = am * q(i, r);
                    q(i, p) = cs * qp - sn * qr;
                    q(i, r) = sn * qp + cs * qr;
                }
            }
        }
    }

    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = h(i, i).real();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return vals[x] < vals[y]; });
    HermitianEig e;
    e.values.resize(n);
    e.vectors = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        e.values[j] = vals[order[j]];
        for (int i = 0; i < n; ++i) e.vectors(i, j) = q(i, order[j]);
    }
    return e;
}

std::vector<double> symmetric_eigenvalues(const std::vector<double>& a_in, int n) {
    if (int(a_in.size()) != n * n)
        throw Error(ErrorCode::dimension, "symmetric_eigenvalues size mismatch");
    if (n == 0) return {};
    std::vector<double> a = a_in;
    std::vector<double> d(n), e(n);

    // Householder reduction to tridiagonal form (no vector accumulation).
    for (int i = n - 1; i >= 1; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(a[i * n + k]);
            if (scale == 0.0) {
                e[i] = a[i * n + l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                double f = a[i * n + l];
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a[j * n + k] * a[i * n + k];
                    for (int k = j + 1; k <= l; ++k) g += a[k * n + j] * a[i * n + k];
                    e[j] = g / h;
                    f += e[j] * a[i * n + j];
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[i * n + j];
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        a[j * n + k] -= f * e[k] + g * a[i * n + k];
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) d[i] = a[i * n + i];

    // Implicit-shift QL on the tridiagonal (d, e).
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            int m;
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
            }
            if (m == l) break;
            if (++iter == 100) throw Error(ErrorCode::internal, "QL iteration did not converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h, double clamp_floor) {
    if (h.rows() != h.cols()) throw Error(ErrorCode::dimension, "psd_sqrt of non-square matrix");
    const int n = h.rows();
    if (n == 0) return h;
    double herm_res = (h - h.adjoint()).frobenius();
    if (herm_res > 1e-10 * (1.0 + h.frobenius()))
        throw Error(ErrorCode::precondition, "psd_sqrt requires a Hermitian matrix");
    ComplexMatrix sym(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sym(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
    HermitianEig e = hermitian_eig(sym);
    for (double& v : e.values) {
        if (v < -clamp_floor)
            throw Error(ErrorCode::precondition, "psd_sqrt input has a negative eigenvalue");
        if (v < 0) v = 0;
    }
    ComplexMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Cplx s(0, 0);
            for (int k = 0; k < n; ++k)
                s += e.vectors(i, k) * std::sqrt(e.values[k]) * std::conj(e.vectors(j, k));
            r(i, j) = s;
        }
    // Hermitize to kill rounding asymmetry.
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Cplx s = 0.5 * (r(i, j) + std::conj(r(j, i)));
            r(i, j) = s;
            r(j, i) = std::conj(s);
        }
    return r;
}

ComplexMatrix julia_operator(const ComplexMatrix& k, double tol) {
    if (k.rows() != k.cols()) throw Error(ErrorCode::dimension, "julia_operator of non-square K");
    const int n = k.rows();
    double nrm = op_norm(k);
    if (nrm > 1.0 + tol)
        throw Error(ErrorCode::not_contraction, "julia_operator requires a contraction");
    double floor = 2.0 * tol + nrm * nrm * 1e-14 + 1e-10;
    ComplexMatrix ka = k.adjoint();
    ComplexMatrix dk = psd_sqrt(ComplexMatrix::identity(n) - ka * k, floor);
    ComplexMatrix dks = psd_sqrt(ComplexMatrix::identity(n) - k * ka, floor);
    ComplexMatrix j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < n; ++c) {
            j(i, c) = -ka(i, c);
            j(i, n + c) = dk(i, c);
            j(n + i, c) = dks(i, c);
            j(n + i, n + c) = k(i, c);
        }
    return j;
}

std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<std::vector<int>> multisets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || n <= 0) return out;
    std::vector<int> idx(k, 0);
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[i];
    }
    return out;
}

ComplexMatrix permanental_compound(const ComplexMatrix& m, int k) {
    if (m.rows() != m.cols())
        throw Error(ErrorCode::dimension, "permanental compound of non-square matrix");
    if (k < 1 || k > 20) throw Error(ErrorCode::invalid_argument, "compound order out of range");
    const int n = m.rows();
    auto multisets = multisets_lex(n, k);
    auto mult_factorial = [](const std::vector<int>& s) {
        double f = 1.0;
        int run = 1;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] == s[i - 1]) {
                ++run;
                f *= run;
            } else {
                run = 1;
            }
        }
        return f;
    };
    ComplexMatrix c(int(multisets.size()), int(multisets.size()));
    for (std::size_t i = 0; i < multisets.size(); ++i) {
        double fi = mult_factorial(multisets[i]);
        for (std::size_t j = 0; j < multisets.size(); ++j) {
            double fj = mult_factorial(multisets[j]);
            ComplexMatrix b(k, k);
            for (int r = 0; r < k; ++r)
                for (int s = 0; s < k; ++s) b(r, s) = m(multisets[i][r], multisets[j][s]);
            c(int(i), int(j)) = permanent(b) / std::sqrt(fi * fj);
        }
    }
    return c;
}

std::vector<Cplx> univariate_roots(std::vector<Cplx> coeffs) {
    // Strip leading (high-order) zeros.
    while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    std::vector<Cplx> roots;
    if (coeffs.size() <= 1) return roots;
    // Factor out roots at the origin.
    std::size_t first = 0;
    while (first + 1 < coeffs.size() && std::abs(coeffs[first]) == 0.0) ++first;
    for (std::size_t i = 0; i < first; ++i) roots.push_back(Cplx(0, 0));
    std::vector<Cplx> c(coeffs.begin() + first, coeffs.end());
    const int deg = int(c.size()) - 1;
    if (deg == 0) return roots;
    Cplx lead = c.back();
    for (auto& v : c) v /= lead;

    double radius = 0.0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::pow(std::abs(c[i]), 1.0 / (deg - i)));
    radius = 2.0 * radius + 1.0;

    std::vector<Cplx> r(deg);
    for (int i = 0; i < deg; ++i) {
        double ang = 2.0 * M_PI * i / deg + 0.4;
        r[i] = radius * Cplx(std::cos(ang), std::sin(ang));
    }
    auto eval = [&](Cplx x) {
        Cplx v = c[deg];
        for (int i = deg - 1; i >= 0; --i) v = v * x + c[i];
        return v;
    };
    for (int iter = 0; iter < 400; ++iter) {
        double move = 0.0;
        for (int i = 0; i < deg; ++i) {
            Cplx num = eval(r[i]);
            Cplx den(1, 0);
            for (int j = 0; j < deg; ++j)
                if (j != i) den *= (r[i] - r[j]);
            if (std::abs(den) == 0.0) {
                r[i] += Cplx(1e-8, 1e-8);
                continue;
            }
            Cplx delta = num / den;
            r[i] -= delta;
            move = std::max(move, std::abs(delta) / (1.0 + std::abs(r[i])));
        }
        if (move < 1e-15) break;
    }
    // Newton polish.
    auto deriv = [&](Cplx x) {
        Cplx v = double(deg) * c[deg];
        for (int i = deg - 1; i >= 1; --i) v = v * x + double(i) * c[i];
        return v;
    };
    for (int i = 0; i < deg; ++i) {
        for (int it = 0; it < 6; ++it) {
            Cplx f = eval(r[i]);
            Cplx df = deriv(r[i]);
            if (std::abs(df) < 1e-300) break;
            Cplx step = f / df;
            if (std::abs(step) > 0.5 * (1.0 + std::abs(r[i]))) break;
            r[i] -= step;
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(r[i]))) break;
        }
        roots.push_back(r[i]);
    }
    return roots;
}

}  // namespace detrep
