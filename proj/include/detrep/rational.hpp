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

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace detrep {

using Cplx = std::complex<double>;

/// Error codes shared between the C++ core and the C API.
enum class ErrorCode {
    invalid_argument = 1,
    parse = 2,
    dimension = 3,
    mode = 4,
    singular = 5,
    not_contraction = 6,
    size_cap = 7,
    precondition = 8,
    verification = 9,
    internal = 10,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

/// Complex number with exact rational real and imaginary parts.
///
/// All arithmetic is exact; this is the coefficient domain used by the
/// construction and verification paths, where reconstruction identities
/// must hold with zero residual.
class RationalComplex {
  public:
    RationalComplex() : re_(0), im_(0) {}
    RationalComplex(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    RationalComplex(const mpq_class& re) : re_(re), im_(0) {}
    RationalComplex(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    /// Parse from "num/den" (or plain integer / decimal) strings.
    static RationalComplex from_strings(const std::string& re, const std::string& im) {
        return RationalComplex(parse_rational(re), parse_rational(im));
    }

    /// Exact conversion from a double (doubles are dyadic rationals).
    static RationalComplex from_double(double re, double im) {
        return RationalComplex(mpq_class(re), mpq_class(im));
    }

    static mpq_class parse_rational(const std::string& s);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    RationalComplex conj() const { return RationalComplex(re_, -im_); }

    /// |z|^2, exact.
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    Cplx to_complex() const { return Cplx(re_.get_d(), im_.get_d()); }

    RationalComplex operator-() const { return RationalComplex(-re_, -im_); }

    RationalComplex& operator+=(const RationalComplex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    RationalComplex& operator-=(const RationalComplex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    RationalComplex& operator*=(const RationalComplex& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    RationalComplex& operator/=(const RationalComplex& o) {
        mpq_class n2 = o.norm2();
        if (n2 == 0) throw Error(ErrorCode::singular, "division by zero RationalComplex");
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n2;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / n2;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend RationalComplex operator+(RationalComplex a, const RationalComplex& b) { return a += b; }
    friend RationalComplex operator-(RationalComplex a, const RationalComplex& b) { return a -= b; }
    friend RationalComplex operator*(RationalComplex a, const RationalComplex& b) { return a *= b; }
    friend RationalComplex operator/(RationalComplex a, const RationalComplex& b) { return a /= b; }
    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }

    std::string re_str() const { return re_.get_str(); }
    std::string im_str() const { return im_.get_str(); }

    /// Exact square root of a nonnegative rational, if it is a perfect square.
    static std::optional<mpq_class> sqrt_exact(const mpq_class& q);

  private:
    mpq_class re_, im_;
};

inline std::optional<mpq_class> RationalComplex::sqrt_exact(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

inline mpq_class RationalComplex::parse_rational(const std::string& s) {
    std::string str = s;
    // Accept a decimal point by scaling to an exact rational.
    auto dot = str.find('.');
    if (dot != std::string::npos) {
        std::string digits = str.substr(0, dot) + str.substr(dot + 1);
        std::size_t frac_len = str.size() - dot - 1;
        std::string den = "1" + std::string(frac_len, '0');
        str = digits + "/" + den;
    }
    mpq_class q;
    if (q.set_str(str, 10) != 0)
        throw Error(ErrorCode::parse, "cannot parse rational '" + s + "'");
    q.canonicalize();
    return q;
}

// Small overload set so templated code works over both scalar domains.

inline Cplx conj_val(const Cplx& z) { return std::conj(z); }
inline RationalComplex conj_val(const RationalComplex& z) { return z.conj(); }

inline bool is_zero_val(const Cplx& z) { return z == Cplx(0.0, 0.0); }
inline bool is_zero_val(const RationalComplex& z) { return z.is_zero(); }

inline Cplx to_cplx(const Cplx& z) { return z; }
inline Cplx to_cplx(const RationalComplex& z) { return z.to_complex(); }

template <class S>
struct is_exact_scalar : std::false_type {};
template <>
struct is_exact_scalar<RationalComplex> : std::true_type {};

}  // namespace detrep
