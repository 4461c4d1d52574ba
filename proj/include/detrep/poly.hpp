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

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "detrep/matrix.hpp"
#include "detrep/rational.hpp"

namespace detrep {

/// Exponent tuple, little-endian in the variable index: exp[i] is the power of z_{i+1}.
using Expo = std::vector<std::uint32_t>;

/// Componentwise multi-degree; |n| is the sum of the components.
using MultiDegree = std::vector<std::uint32_t>;

inline std::uint64_t degree_sum(const MultiDegree& n) {
    return std::accumulate(n.begin(), n.end(), std::uint64_t(0));
}

inline bool degree_leq(const MultiDegree& a, const MultiDegree& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Graded lexicographic term order: first by total degree, then lexicographic.
struct GradedLexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        std::uint64_t sa = degree_sum(a), sb = degree_sum(b);
        if (sa != sb) return sa < sb;
        return a < b;
    }
};

/// Sparse multivariable polynomial over an exact or float complex domain.
///
/// Invariants: no stored coefficient is zero, every exponent tuple has
/// length num_vars. The zero polynomial is the empty term set.
template <class S>
class Polynomial {
  public:
    using TermMap = std::map<Expo, S, GradedLexLess>;

    explicit Polynomial(int num_vars = 1) : num_vars_(num_vars) {
        if (num_vars < 1) throw Error(ErrorCode::invalid_argument, "num_vars must be positive");
    }

    static Polynomial constant(int num_vars, const S& c) {
        Polynomial p(num_vars);
        p.add_term(Expo(num_vars, 0), c);
        return p;
    }

    static Polynomial monomial(int num_vars, const Expo& e, const S& c) {
        Polynomial p(num_vars);
        p.add_term(e, c);
        return p;
    }

    static Polynomial variable(int num_vars, int i) {
        Expo e(num_vars, 0);
        e[i] = 1;
        return monomial(num_vars, e, S(1));
    }

    int num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Accumulate a coefficient onto a monomial, pruning zeros.
    void add_term(const Expo& e, const S& c) {
        if (int(e.size()) != num_vars_)
            throw Error(ErrorCode::dimension, "exponent tuple length mismatch");
        if (is_zero_val(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (is_zero_val(it->second)) terms_.erase(it);
        }
    }

    S coefficient(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? S(0) : it->second;
    }

    S constant_term() const { return coefficient(Expo(num_vars_, 0)); }

    Polynomial operator-() const {
        Polynomial p(num_vars_);
        for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
        return p;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_vars(b);
        Polynomial p = a;
        for (const auto& [e, c] : b.terms_) p.add_term(e, c);
        return p;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check_vars(b);
        Polynomial p = a;
        for (const auto& [e, c] : b.terms_) p.add_term(e, -c);
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_vars(b);
        Polynomial p(a.num_vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo e(a.num_vars_);
                for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
                p.add_term(e, ca * cb);
            }
        return p;
    }

    friend Polynomial operator*(const Polynomial& a, const S& s) {
        Polynomial p(a.num_vars_);
        for (const auto& [e, c] : a.terms_) p.add_term(e, c * s);
        return p;
    }
    friend Polynomial operator*(const S& s, const Polynomial& a) { return a * s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    void check_vars(const Polynomial& o) const {
        if (num_vars_ != o.num_vars_)
            throw Error(ErrorCode::dimension, "polynomial num_vars mismatch");
    }

  private:
    int num_vars_;
    TermMap terms_;
};

using ComplexPoly = Polynomial<Cplx>;
using RationalPoly = Polynomial<RationalComplex>;

/// d-tuple of pairwise commuting square matrices of common side.
/// Commutation is checked at construction (Frobenius norm of commutators,
/// which dominates the operator norm).
template <class S>
class CommutingTuple {
  public:
    CommutingTuple(std::vector<Matrix<S>> matrices, double tolerance = 1e-10)
        : matrices_(std::move(matrices)), tolerance_(tolerance) {
        if (matrices_.empty()) throw Error(ErrorCode::invalid_argument, "empty tuple");
        const int n = matrices_[0].rows();
        for (const auto& t : matrices_)
            if (t.rows() != n || t.cols() != n)
                throw Error(ErrorCode::dimension, "tuple matrices must be square of common side");
        for (std::size_t i = 0; i < matrices_.size(); ++i)
            for (std::size_t j = i + 1; j < matrices_.size(); ++j) {
                Matrix<S> comm = matrices_[i] * matrices_[j] - matrices_[j] * matrices_[i];
                if constexpr (is_exact_scalar<S>::value) {
                    for (int r = 0; r < n; ++r)
                        for (int c = 0; c < n; ++c)
                            if (!comm(r, c).is_zero())
                                throw Error(ErrorCode::precondition,
                                            "tuple matrices do not commute exactly");
                } else {
                    if (comm.frobenius() > tolerance_)
                        throw Error(ErrorCode::precondition,
                                    "tuple matrices do not commute within tolerance");
                }
            }
    }

    int dim() const { return int(matrices_.size()); }
    int side() const { return matrices_[0].rows(); }
    double tolerance() const { return tolerance_; }
    const Matrix<S>& matrix(int i) const { return matrices_[i]; }
    const std::vector<Matrix<S>>& matrices() const { return matrices_; }

    CommutingTuple<Cplx> to_complex() const {
        std::vector<ComplexMatrix> ms;
        ms.reserve(matrices_.size());
        for (const auto& m : matrices_) ms.push_back(m.to_complex());
        return CommutingTuple<Cplx>(std::move(ms), tolerance_ > 0 ? tolerance_ : 1e-10);
    }

  private:
    std::vector<Matrix<S>> matrices_;
    double tolerance_;
};

/// Evaluate p at a point of C^d.
template <class S, class P>
P poly_eval(const Polynomial<S>& p, const std::vector<P>& z);

inline Cplx poly_eval(const ComplexPoly& p, const std::vector<Cplx>& z) {
    return poly_eval<Cplx, Cplx>(p, z);
}
inline RationalComplex poly_eval(const RationalPoly& p, const std::vector<RationalComplex>& z) {
    return poly_eval<RationalComplex, RationalComplex>(p, z);
}
/// Exact polynomial at a float point.
inline Cplx poly_eval_f(const RationalPoly& p, const std::vector<Cplx>& z);

template <class S, class P>
P poly_eval(const Polynomial<S>& p, const std::vector<P>& z) {
    if (int(z.size()) != p.num_vars())
        throw Error(ErrorCode::dimension, "evaluation point has wrong dimension");
    // Per-variable power tables sized by the multi-degree.
    std::vector<std::vector<P>> pow(p.num_vars());
    MultiDegree deg(p.num_vars(), 0);
    for (const auto& [e, c] : p.terms())
        for (int i = 0; i < p.num_vars(); ++i) deg[i] = std::max(deg[i], e[i]);
    for (int i = 0; i < p.num_vars(); ++i) {
        pow[i].resize(deg[i] + 1, P(1));
        for (std::uint32_t k = 1; k <= deg[i]; ++k) pow[i][k] = pow[i][k - 1] * z[i];
    }
    P acc(0);
    for (const auto& [e, c] : p.terms()) {
        P t(c);
        for (int i = 0; i < p.num_vars(); ++i)
            if (e[i] > 0) t = t * pow[i][e[i]];
        acc += t;
    }
    return acc;
}

inline Cplx poly_eval_f(const RationalPoly& p, const std::vector<Cplx>& z) {
    ComplexPoly q(p.num_vars());
    for (const auto& [e, c] : p.terms()) q.add_term(e, c.to_complex());
    return poly_eval(q, z);
}

/// Componentwise multi-degree and total degree; (0,...,0) and 0 for constants.
template <class S>
std::pair<MultiDegree, std::uint32_t> poly_degrees(const Polynomial<S>& p) {
    MultiDegree deg(p.num_vars(), 0);
    std::uint32_t tdeg = 0;
    for (const auto& [e, c] : p.terms()) {
        std::uint32_t s = 0;
        for (int i = 0; i < p.num_vars(); ++i) {
            deg[i] = std::max(deg[i], e[i]);
            s += e[i];
        }
        tdeg = std::max(tdeg, s);
    }
    return {deg, tdeg};
}

/// Reversal z^n conj(p)(1/conj(z)): the coefficient of z^{n-k} is conj(p_k).
template <class S>
Polynomial<S> poly_reverse(const Polynomial<S>& p, const MultiDegree& n) {
    if (int(n.size()) != p.num_vars())
        throw Error(ErrorCode::dimension, "reversal degree has wrong dimension");
    auto [deg, tdeg] = poly_degrees(p);
    if (!degree_leq(deg, n))
        throw Error(ErrorCode::precondition, "reversal requires n >= deg p");
    Polynomial<S> q(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        Expo r(p.num_vars());
        for (int i = 0; i < p.num_vars(); ++i) r[i] = n[i] - e[i];
        q.add_term(r, conj_val(c));
    }
    return q;
}

/// Evaluate p at a commuting matrix tuple: sum of p_k T_1^{k_1} ... T_d^{k_d}.
template <class S>
Matrix<S> poly_eval_tuple(const Polynomial<S>& p, const CommutingTuple<S>& t) {
    if (t.dim() != p.num_vars())
        throw Error(ErrorCode::dimension, "tuple dimension does not match num_vars");
    const int n = t.side();
    auto [deg, tdeg] = poly_degrees(p);
    std::vector<std::vector<Matrix<S>>> pow(p.num_vars());
    for (int i = 0; i < p.num_vars(); ++i) {
        pow[i].push_back(Matrix<S>::identity(n));
        for (std::uint32_t k = 1; k <= deg[i]; ++k) pow[i].push_back(pow[i][k - 1] * t.matrix(i));
    }
    Matrix<S> acc(n, n);
    for (const auto& [e, c] : p.terms()) {
        Matrix<S> term = Matrix<S>::identity(n);
        bool any = false;
        for (int i = 0; i < p.num_vars(); ++i)
            if (e[i] > 0) {
                term = any ? term * pow[i][e[i]] : pow[i][e[i]];
                any = true;
            }
        acc += term * c;
    }
    return acc;
}

inline ComplexPoly to_complex(const RationalPoly& p) {
    ComplexPoly q(p.num_vars());
    for (const auto& [e, c] : p.terms()) q.add_term(e, c.to_complex());
    return q;
}

inline RationalPoly to_exact(const ComplexPoly& p) {
    RationalPoly q(p.num_vars());
    for (const auto& [e, c] : p.terms())
        q.add_term(e, RationalComplex::from_double(c.real(), c.imag()));
    return q;
}

}  // namespace detrep
