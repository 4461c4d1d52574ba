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

#include "detrep/detrep.h"

#include <cstring>
#include <random>

#include "detrep/json_io.hpp"

struct detrep_poly {
    detrep::MultiPoly v;
};
struct detrep_matrix {
    detrep::AnyMatrix v;
};
struct detrep_representation {
    detrep::AnyRepresentation v;
};

namespace {

using detrep::AnyMatrix;
using detrep::AnyRepresentation;
using detrep::Cplx;
using detrep::Error;
using detrep::ErrorCode;
using detrep::Json;
using detrep::MultiDegree;
using detrep::MultiPoly;

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

detrep_status map_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return DETREP_ERR_INVALID_ARGUMENT;
        case ErrorCode::parse: return DETREP_ERR_PARSE;
        case ErrorCode::dimension: return DETREP_ERR_DIMENSION;
        case ErrorCode::mode: return DETREP_ERR_MODE;
        case ErrorCode::singular: return DETREP_ERR_SINGULAR;
        case ErrorCode::not_contraction: return DETREP_ERR_NOT_CONTRACTION;
        case ErrorCode::size_cap: return DETREP_ERR_SIZE_CAP;
        case ErrorCode::precondition: return DETREP_ERR_PRECONDITION;
        case ErrorCode::verification: return DETREP_ERR_VERIFICATION;
        case ErrorCode::internal: return DETREP_ERR_INTERNAL;
    }
    return DETREP_ERR_INTERNAL;
}

template <class F>
detrep_status wrap(F&& f) {
    try {
        f();
        return DETREP_OK;
    } catch (const Error& e) {
        set_error(e.what());
        return map_code(e.code());
    } catch (const nlohmann::json::exception& e) {
        set_error(e.what());
        return DETREP_ERR_PARSE;
    } catch (const std::exception& e) {
        set_error(e.what());
        return DETREP_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool cond, const char* what) {
    if (!cond) throw Error(ErrorCode::invalid_argument, what);
}

MultiDegree to_degree(const unsigned* n, size_t len) {
    require(n != nullptr || len == 0, "null degree array");
    MultiDegree d(len);
    for (size_t i = 0; i < len; ++i) d[i] = n[i];
    return d;
}

std::vector<Cplx> to_point(const double* re, const double* im, size_t len) {
    require(re != nullptr && im != nullptr, "null point array");
    std::vector<Cplx> z(len);
    for (size_t i = 0; i < len; ++i) z[i] = Cplx(re[i], im[i]);
    return z;
}

template <class Op>
detrep_status poly_binary(const detrep_poly* a, const detrep_poly* b, detrep_poly** out, Op op) {
    return wrap([&] {
        require(a && b && out, "null argument");
        if (a->v.mode() != b->v.mode())
            throw Error(ErrorCode::mode, "mixed exact/float operands; promote explicitly first");
        if (a->v.is_exact())
            *out = new detrep_poly{MultiPoly(op(a->v.exact(), b->v.exact()))};
        else
            *out = new detrep_poly{MultiPoly(op(a->v.floating(), b->v.floating()))};
    });
}

}  // namespace

extern "C" {

const char* detrep_version(void) { return "0.1.0"; }

const char* detrep_last_error(void) { return g_last_error.c_str(); }

void detrep_string_free(char* s) { delete[] s; }

/* ---- polynomials ------------------------------------------------------- */

detrep_status detrep_poly_from_json(const char* json, detrep_poly** out) {
    return wrap([&] {
        require(json && out, "null argument");
        *out = new detrep_poly{detrep::poly_from_json(Json::parse(json))};
    });
}

detrep_status detrep_poly_to_json(const detrep_poly* p, char** out) {
    return wrap([&] {
        require(p && out, "null argument");
        *out = dup_string(detrep::dump_json(detrep::poly_to_json(p->v)));
    });
}

void detrep_poly_free(detrep_poly* p) { delete p; }

detrep_status detrep_poly_num_vars(const detrep_poly* p, int* out) {
    return wrap([&] {
        require(p && out, "null argument");
        *out = p->v.num_vars();
    });
}

detrep_status detrep_poly_is_exact(const detrep_poly* p, int* out) {
    return wrap([&] {
        require(p && out, "null argument");
        *out = p->v.is_exact() ? 1 : 0;
    });
}

detrep_status detrep_poly_to_float(const detrep_poly* p, detrep_poly** out) {
    return wrap([&] {
        require(p && out, "null argument");
        *out = new detrep_poly{MultiPoly(p->v.as_float())};
    });
}

detrep_status detrep_poly_to_exact(const detrep_poly* p, detrep_poly** out) {
    return wrap([&] {
        require(p && out, "null argument");
        *out = new detrep_poly{MultiPoly(p->v.as_exact())};
    });
}

detrep_status detrep_poly_eval(const detrep_poly* p, const double* z_re, const double* z_im,
                               size_t len, double* out_re, double* out_im) {
    return wrap([&] {
        require(p && out_re && out_im, "null argument");
        Cplx v = detrep::poly_eval(p->v.as_float(), to_point(z_re, z_im, len));
        *out_re = v.real();
        *out_im = v.imag();
    });
}

detrep_status detrep_poly_degrees(const detrep_poly* p, unsigned* deg, size_t len, unsigned* tdeg) {
    return wrap([&] {
        require(p && deg && tdeg, "null argument");
        require(int(len) == p->v.num_vars(), "degree buffer length mismatch");
        auto [d, t] = std::visit([](const auto& q) { return detrep::poly_degrees(q); }, p->v.value);
        for (size_t i = 0; i < len; ++i) deg[i] = d[i];
        *tdeg = t;
    });
}

detrep_status detrep_poly_reverse(const detrep_poly* p, const unsigned* n, size_t len,
                                  detrep_poly** out) {
    return wrap([&] {
        require(p && out, "null argument");
        MultiDegree nd = to_degree(n, len);
        *out = new detrep_poly{std::visit(
            [&](const auto& q) { return MultiPoly(detrep::poly_reverse(q, nd)); }, p->v.value)};
    });
}

detrep_status detrep_poly_add(const detrep_poly* a, const detrep_poly* b, detrep_poly** out) {
    return poly_binary(a, b, out, [](const auto& x, const auto& y) { return x + y; });
}

detrep_status detrep_poly_mul(const detrep_poly* a, const detrep_poly* b, detrep_poly** out) {
    return poly_binary(a, b, out, [](const auto& x, const auto& y) { return x * y; });
}

detrep_status detrep_poly_scale(const detrep_poly* a, double re, double im, detrep_poly** out) {
    return wrap([&] {
        require(a && out, "null argument");
        if (a->v.is_exact()) {
            detrep::RationalComplex s = detrep::RationalComplex::from_double(re, im);
            *out = new detrep_poly{MultiPoly(a->v.exact() * s)};
        } else {
            *out = new detrep_poly{MultiPoly(a->v.floating() * Cplx(re, im))};
        }
    });
}

/* ---- matrices ----------------------------------------------------------- */

detrep_status detrep_matrix_from_json(const char* json, detrep_matrix** out) {
    return wrap([&] {
        require(json && out, "null argument");
        *out = new detrep_matrix{detrep::matrix_from_json(Json::parse(json))};
    });
}

detrep_status detrep_matrix_to_json(const detrep_matrix* m, char** out) {
    return wrap([&] {
        require(m && out, "null argument");
        *out = dup_string(detrep::dump_json(detrep::matrix_to_json(m->v)));
    });
}

void detrep_matrix_free(detrep_matrix* m) { delete m; }

detrep_status detrep_op_norm(const detrep_matrix* m, double* out) {
    return wrap([&] {
        require(m && out, "null argument");
        *out = detrep::op_norm(m->v.as_float());
    });
}

/* ---- representations ---------------------------------------------------- */

detrep_status detrep_representation_from_json(const char* json, detrep_representation** out) {
    return wrap([&] {
        require(json && out, "null argument");
        *out = new detrep_representation{detrep::representation_from_json(Json::parse(json))};
    });
}

detrep_status detrep_representation_to_json(const detrep_representation* r, char** out) {
    return wrap([&] {
        require(r && out, "null argument");
        *out = dup_string(detrep::dump_json(detrep::representation_to_json(r->v)));
    });
}

void detrep_representation_free(detrep_representation* r) { delete r; }

/* ---- operations ---------------------------------------------------------- */

detrep_status detrep_det_expand(const detrep_representation* rep, detrep_poly** out) {
    return wrap([&] {
        require(rep && out, "null argument");
        if (rep->v.k.is_exact())
            *out = new detrep_poly{MultiPoly(detrep::det_expand(rep->v.k.exact(), rep->v.n))};
        else
            *out = new detrep_poly{MultiPoly(detrep::det_expand(rep->v.k.floating(), rep->v.n))};
    });
}

detrep_status detrep_represent_unconstrained(const detrep_poly* p, int prune,
                                             detrep_representation** out) {
    return wrap([&] {
        require(p && out, "null argument");
        if (p->v.is_exact())
            *out = new detrep_representation{
                AnyRepresentation(detrep::represent_unconstrained(p->v.exact(), prune != 0))};
        else
            *out = new detrep_representation{
                AnyRepresentation(detrep::represent_unconstrained(p->v.floating(), prune != 0))};
    });
}

detrep_status detrep_reduce_norm(const detrep_representation* rep, int restarts, int iterations,
                                 detrep_representation** out) {
    return wrap([&] {
        require(rep && out, "null argument");
        detrep::ComplexRepresentation r{rep->v.n, rep->v.k.as_float()};
        *out = new detrep_representation{
            AnyRepresentation(detrep::reduce_norm_by_scaling(r, restarts, iterations))};
    });
}

detrep_status detrep_represent_bounded(const detrep_poly* p, char** json_out) {
    return wrap([&] {
        require(p && json_out, "null argument");
        detrep::BoundedRepresentation b = detrep::represent_bounded(p->v.as_float());
        *json_out = dup_string(detrep::dump_json(detrep::bounded_representation_to_json(b)));
    });
}

detrep_status detrep_represent_affine(const char* a_json, int mode, detrep_representation** out) {
    return wrap([&] {
        require(a_json && out, "null argument");
        Json j = Json::parse(a_json);
        if (!j.is_array() || j.empty())
            throw Error(ErrorCode::invalid_argument, "affine coefficients must be a JSON array");
        bool exactable = true;
        std::vector<detrep::RationalComplex> qa;
        std::vector<Cplx> fa;
        auto parse_part = [&](const Json& v, mpq_class& q, double& f) {
            if (v.is_string()) {
                q = detrep::RationalComplex::parse_rational(v.get<std::string>());
                f = q.get_d();
            } else if (v.is_number()) {
                f = v.get<double>();
                q = mpq_class(f);
            } else {
                throw Error(ErrorCode::parse, "affine coefficient parts must be numbers or strings");
            }
        };
        for (const auto& item : j) {
            mpq_class qre(0), qim(0);
            double fre = 0, fim = 0;
            if (item.is_array()) {
                if (item.size() != 2)
                    throw Error(ErrorCode::parse, "complex coefficient must be [re, im]");
                parse_part(item[0], qre, fre);
                parse_part(item[1], qim, fim);
            } else {
                parse_part(item, qre, fre);
            }
            qa.emplace_back(qre, qim);
            fa.emplace_back(fre, fim);
        }
        if (mode != 2) {
            auto exact = detrep::represent_affine_exact(qa);
            if (exact) {
                *out = new detrep_representation{AnyRepresentation(std::move(*exact))};
                return;
            }
            exactable = false;
            if (mode == 1)
                throw Error(ErrorCode::precondition,
                            "affine construction not exactly representable over the rationals");
        }
        (void)exactable;
        *out = new detrep_representation{AnyRepresentation(detrep::represent_affine(fa))};
    });
}

detrep_status detrep_verify(const detrep_poly* p, const detrep_representation* rep, double tol,
                            int assert_semistable, char** report_json) {
    return wrap([&] {
        require(p && rep && report_json, "null argument");
        detrep::VerificationReport report;
        if (p->v.is_exact() && rep->v.k.is_exact()) {
            detrep::RationalRepresentation r{rep->v.n, rep->v.k.exact()};
            report = detrep::verify_representation(p->v.exact(), r, tol, assert_semistable != 0);
        } else {
            detrep::ComplexRepresentation r{rep->v.n, rep->v.k.as_float()};
            report =
                detrep::verify_representation(p->v.as_float(), r, tol, assert_semistable != 0);
        }
        *report_json = dup_string(detrep::dump_json(detrep::verification_report_to_json(report)));
    });
}

detrep_status detrep_pmrp_check(const detrep_matrix* k, const unsigned* n, size_t n_len,
                                const detrep_poly* target, const unsigned* m, size_t m_len,
                                double tol, char** report_json) {
    return wrap([&] {
        require(k && target && report_json, "null argument");
        MultiDegree nd = to_degree(n, n_len), md = to_degree(m, m_len);
        detrep::PmrpReport report;
        if (k->v.is_exact() && target->v.is_exact())
            report = detrep::pmrp_check(k->v.exact(), nd, target->v.exact(), md);
        else
            report = detrep::pmrp_check(k->v.as_float(), nd, target->v.as_float(), md, tol);
        *report_json = dup_string(detrep::dump_json(detrep::pmrp_report_to_json(report)));
    });
}

detrep_status detrep_stability_radius(const detrep_poly* p, long budget, char** report_json) {
    return wrap([&] {
        require(p && report_json, "null argument");
        detrep::RadiusEstimate est = detrep::stability_radius(p->v.as_float(), budget);
        *report_json = dup_string(detrep::dump_json(detrep::radius_to_json(est)));
    });
}

detrep_status detrep_sup_norm(const detrep_poly* p, int grid, int refine, char** report_json) {
    return wrap([&] {
        require(p && report_json, "null argument");
        detrep::SupNormEstimate est = detrep::sup_norm_torus(p->v.as_float(), grid, refine);
        *report_json = dup_string(detrep::dump_json(detrep::supnorm_to_json(est)));
    });
}

detrep_status detrep_inner_eval_rational(const detrep_poly* p, const unsigned* n, size_t len,
                                         const double* z_re, const double* z_im, double* out_re,
                                         double* out_im) {
    return wrap([&] {
        require(p && out_re && out_im, "null argument");
        Cplx v = detrep::inner_eval_rational(p->v.as_float(), to_degree(n, len),
                                             to_point(z_re, z_im, len));
        *out_re = v.real();
        *out_im = v.imag();
    });
}

detrep_status detrep_inner_eval_julia(const detrep_matrix* k, const unsigned* n, size_t len,
                                      const double* z_re, const double* z_im, double* out_re,
                                      double* out_im) {
    return wrap([&] {
        require(k && out_re && out_im, "null argument");
        Cplx v = detrep::inner_eval_julia(k->v.as_float(), to_degree(n, len),
                                          to_point(z_re, z_im, len));
        *out_re = v.real();
        *out_im = v.imag();
    });
}

detrep_status detrep_inner_check(const detrep_poly* p, const unsigned* n, size_t len,
                                 const detrep_matrix* k, int samples, double tol,
                                 char** report_json) {
    return wrap([&] {
        require(p && report_json, "null argument");
        require(samples > 0, "samples must be positive");
        detrep::ComplexPoly pf = p->v.as_float();
        MultiDegree nd = to_degree(n, len);
        std::mt19937_64 rng(20260810u);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
        std::uniform_real_distribution<double> radius(0.0, 0.9);

        double max_torus_dev = 0.0;
        int torus_checked = 0;
        for (int s = 0; s < samples * 4 && torus_checked < samples; ++s) {
            std::vector<Cplx> z(pf.num_vars());
            for (auto& v : z) v = std::polar(1.0, angle(rng));
            if (std::abs(detrep::poly_eval(pf, z)) <= 1e-6) continue;
            double dev = std::abs(std::abs(detrep::inner_eval_rational(pf, nd, z)) - 1.0);
            max_torus_dev = std::max(max_torus_dev, dev);
            ++torus_checked;
        }

        Json j;
        j["torus_samples"] = torus_checked;
        j["max_torus_modulus_deviation"] = max_torus_dev;
        bool pass = torus_checked > 0 && max_torus_dev <= tol;

        if (k != nullptr) {
            double max_identity_dev = 0.0;
            int id_checked = 0;
            detrep::ComplexMatrix kf = k->v.as_float();
            for (int s = 0; s < samples * 4 && id_checked < samples; ++s) {
                std::vector<Cplx> z(pf.num_vars());
                for (auto& v : z) v = std::polar(radius(rng), angle(rng));
                if (std::abs(detrep::poly_eval(pf, z)) <= 1e-6) continue;
                Cplx rational = detrep::inner_eval_rational(pf, nd, z);
                Cplx julia = detrep::inner_eval_julia(kf, nd, z);
                double dev = std::abs(rational - julia) / (1.0 + std::abs(rational));
                max_identity_dev = std::max(max_identity_dev, dev);
                ++id_checked;
            }
            j["identity_samples"] = id_checked;
            j["max_identity_deviation"] = max_identity_dev;
            pass = pass && id_checked > 0 && max_identity_dev <= tol;
        }
        j["tolerance"] = tol;
        j["verdict"] = pass ? "pass" : "fail";
        *report_json = dup_string(detrep::dump_json(j));
    });
}

detrep_status detrep_extract_k(const detrep_poly* p, const char* realization_json, int samples,
                               double tol, detrep_representation** out) {
    return wrap([&] {
        require(p && realization_json && out, "null argument");
        detrep::Realization r = detrep::realization_from_json(Json::parse(realization_json));
        detrep::ComplexRepresentation rep =
            detrep::extract_k_from_realization(p->v.as_float(), r, samples, tol);
        *out = new detrep_representation{AnyRepresentation(std::move(rep))};
    });
}

detrep_status detrep_agler_lower_bound(const detrep_poly* p, const char* tuples_json,
                                       double* out) {
    return wrap([&] {
        require(p && tuples_json && out, "null argument");
        Json j = Json::parse(tuples_json);
        const Json& arr = j.is_array() ? j : j.at("tuples");
        std::vector<detrep::CommutingTuple<Cplx>> tuples;
        for (const auto& t : arr) tuples.push_back(detrep::tuple_from_json(t));
        *out = detrep::agler_lower_bound(p->v.as_float(), tuples);
    });
}

detrep_status detrep_cd_matrix(double t_re, double t_im, int d, char** report_json) {
    return wrap([&] {
        require(report_json, "null argument");
        detrep::CdResult r = detrep::cd_matrix(Cplx(t_re, t_im), d);
        *report_json = dup_string(detrep::dump_json(detrep::cd_result_to_json(r)));
    });
}

detrep_status detrep_cd_matrix_exact(const char* t, int d, char** report_json) {
    return wrap([&] {
        require(t && report_json, "null argument");
        detrep::RationalComplex tq(detrep::RationalComplex::parse_rational(t));
        detrep::CdExactResult r = detrep::cd_matrix_exact(tq, d);
        detrep::CdResult rf = detrep::cd_matrix(tq.to_complex(), d);
        Json j;
        j["matrix"] = detrep::matrix_to_json(AnyMatrix(r.b));
        j["min_eigenvalue"] = rf.min_eigenvalue;
        Json flags = Json::array();
        for (const auto& f : r.flagged) flags.push_back(Json::array({f[0], f[1], f[2]}));
        j["flagged_layers"] = std::move(flags);
        *report_json = dup_string(detrep::dump_json(j));
    });
}

detrep_status detrep_kvh_report(int d, double s, int grid, char** report_json) {
    return wrap([&] {
        require(report_json, "null argument");
        detrep::KvhReport r = detrep::kvh_report(d, s, grid);
        *report_json = dup_string(detrep::dump_json(detrep::kvh_report_to_json(r)));
    });
}

detrep_status detrep_kvh_optimal(char** report_json) {
    return wrap([&] {
        require(report_json, "null argument");
        detrep::KvhOptimal o = detrep::kvh_optimal_s();
        Json j;
        j["s_star"] = o.s_star;
        j["ratio"] = o.ratio;
        *report_json = dup_string(detrep::dump_json(j));
    });
}

detrep_status detrep_kvh_example(double r, long budget, char** report_json) {
    return wrap([&] {
        require(report_json, "null argument");
        detrep::KvhSection5 s = detrep::kvh_section5_example(r, budget);
        *report_json = dup_string(detrep::dump_json(detrep::kvh_section5_to_json(s)));
    });
}

detrep_status detrep_kvh_poly(int d, double s, detrep_poly** out) {
    return wrap([&] {
        require(out, "null argument");
        *out = new detrep_poly{MultiPoly(detrep::kvh_poly(d, s))};
    });
}

}  // extern "C"
