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

#include "detrep/json_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>

namespace detrep {

namespace {

Error parse_error(const std::string& what) { return Error(ErrorCode::parse, what); }

Expo expo_from_json(const Json& j, int vars) {
    if (!j.is_array() || int(j.size()) != vars) throw parse_error("bad exponent tuple");
    Expo e(vars);
    for (int i = 0; i < vars; ++i) e[i] = j[i].get<std::uint32_t>();
    return e;
}

MultiDegree degree_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("multi-degree must be an array");
    MultiDegree n;
    for (const auto& v : j) n.push_back(v.get<std::uint32_t>());
    return n;
}

}  // namespace

Json poly_to_json(const MultiPoly& p) {
    Json j;
    j["vars"] = p.num_vars();
    Json terms = Json::array();
    if (p.is_exact()) {
        j["mode"] = "exact";
        for (const auto& [e, c] : p.exact().terms()) {
            Json t;
            t["exp"] = e;
            t["re"] = c.re_str();
            t["im"] = c.im_str();
            terms.push_back(std::move(t));
        }
    } else {
        j["mode"] = "float";
        for (const auto& [e, c] : p.floating().terms()) {
            Json t;
            t["exp"] = e;
            t["re"] = c.real();
            t["im"] = c.imag();
            terms.push_back(std::move(t));
        }
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars")) throw parse_error("polynomial needs 'vars'");
    int vars = j.at("vars").get<int>();
    std::string mode = j.value("mode", "float");
    const Json& terms = j.contains("terms") ? j.at("terms") : Json::array();
    if (!terms.is_array()) throw parse_error("'terms' must be an array");
    if (mode == "exact") {
        RationalPoly p(vars);
        for (const auto& t : terms) {
            Expo e = expo_from_json(t.at("exp"), vars);
            auto parse_part = [&](const Json& v) -> mpq_class {
                if (v.is_string()) return RationalComplex::parse_rational(v.get<std::string>());
                if (v.is_number_integer()) return mpq_class(v.get<long>());
                if (v.is_number()) return mpq_class(v.get<double>());
                throw parse_error("exact coefficient must be a string or number");
            };
            p.add_term(e, RationalComplex(parse_part(t.at("re")), parse_part(t.at("im"))));
        }
        return MultiPoly(std::move(p));
    }
    if (mode != "float") throw parse_error("mode must be 'exact' or 'float'");
    ComplexPoly p(vars);
    for (const auto& t : terms) {
        Expo e = expo_from_json(t.at("exp"), vars);
        p.add_term(e, Cplx(t.at("re").get<double>(), t.at("im").get<double>()));
    }
    return MultiPoly(std::move(p));
}

Json matrix_to_json(const AnyMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    if (m.is_exact()) {
        j["mode"] = "exact";
        const auto& mat = m.exact();
        for (int i = 0; i < mat.rows(); ++i)
            for (int c = 0; c < mat.cols(); ++c)
                entries.push_back(Json::array({mat(i, c).re_str(), mat(i, c).im_str()}));
    } else {
        const auto& mat = m.floating();
        for (int i = 0; i < mat.rows(); ++i)
            for (int c = 0; c < mat.cols(); ++c)
                entries.push_back(Json::array({mat(i, c).real(), mat(i, c).imag()}));
    }
    j["entries"] = std::move(entries);
    return j;
}

AnyMatrix matrix_from_json(const Json& j) {
    if (!j.is_object()) throw parse_error("matrix must be an object");
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || int(entries.size()) != rows * cols)
        throw parse_error("matrix entry count mismatch");
    std::string mode = j.value("mode", "float");
    if (mode == "exact") {
        RationalMatrix m(rows, cols);
        for (int i = 0; i < rows * cols; ++i) {
            const Json& e = entries[i];
            if (!e.is_array() || e.size() != 2) throw parse_error("matrix entries are [re, im]");
            auto part = [&](const Json& v) -> mpq_class {
                if (v.is_string()) return RationalComplex::parse_rational(v.get<std::string>());
                if (v.is_number_integer()) return mpq_class(v.get<long>());
                if (v.is_number()) return mpq_class(v.get<double>());
                throw parse_error("exact entry must be a string or number");
            };
            m(i / cols, i % cols) = RationalComplex(part(e[0]), part(e[1]));
        }
        return AnyMatrix(std::move(m));
    }
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows * cols; ++i) {
        const Json& e = entries[i];
        if (!e.is_array() || e.size() != 2) throw parse_error("matrix entries are [re, im]");
        m(i / cols, i % cols) = Cplx(e[0].get<double>(), e[1].get<double>());
    }
    return AnyMatrix(std::move(m));
}

Json representation_to_json(const AnyRepresentation& rep) {
    Json j;
    j["n"] = rep.n;
    j["K"] = matrix_to_json(rep.k);
    return j;
}

AnyRepresentation representation_from_json(const Json& j) {
    AnyRepresentation rep;
    rep.n = degree_from_json(j.at("n"));
    rep.k = matrix_from_json(j.at("K"));
    if (std::uint64_t(rep.k.rows()) != degree_sum(rep.n) || rep.k.rows() != rep.k.cols())
        throw parse_error("K side must equal |n|");
    return rep;
}

Json bounded_representation_to_json(const BoundedRepresentation& rep) {
    Json j = representation_to_json(AnyRepresentation(ComplexRepresentation(rep.rep)));
    j["beta"] = rep.beta;
    j["kappa"] = rep.kappa;
    j["bound"] = rep.bound;
    return j;
}

Json tuple_to_json(const CommutingTuple<Cplx>& t) {
    Json j;
    j["d"] = t.dim();
    j["tolerance"] = t.tolerance();
    Json ms = Json::array();
    for (int i = 0; i < t.dim(); ++i) ms.push_back(matrix_to_json(AnyMatrix(t.matrix(i))));
    j["matrices"] = std::move(ms);
    return j;
}

CommutingTuple<Cplx> tuple_from_json(const Json& j) {
    const Json& ms = j.at("matrices");
    if (!ms.is_array() || ms.empty()) throw parse_error("tuple needs matrices");
    if (j.contains("d") && int(ms.size()) != j.at("d").get<int>())
        throw parse_error("tuple 'd' does not match matrix count");
    std::vector<ComplexMatrix> mats;
    for (const auto& m : ms) mats.push_back(matrix_from_json(m).as_float());
    return CommutingTuple<Cplx>(std::move(mats), j.value("tolerance", 1e-10));
}

Json realization_to_json(const Realization& r) {
    Json j;
    j["m"] = r.m;
    j["A"] = matrix_to_json(AnyMatrix(r.a));
    j["B"] = matrix_to_json(AnyMatrix(r.b));
    j["C"] = matrix_to_json(AnyMatrix(r.c));
    j["D"] = matrix_to_json(AnyMatrix(r.d));
    return j;
}

Realization realization_from_json(const Json& j) {
    Realization r;
    r.m = degree_from_json(j.at("m"));
    r.a = matrix_from_json(j.at("A")).as_float();
    r.b = matrix_from_json(j.at("B")).as_float();
    r.c = matrix_from_json(j.at("C")).as_float();
    r.d = matrix_from_json(j.at("D")).as_float();
    const int side = int(degree_sum(r.m));
    if (r.a.rows() != 1 || r.a.cols() != 1 || r.b.rows() != 1 || r.b.cols() != side ||
        r.c.rows() != side || r.c.cols() != 1 || r.d.rows() != side || r.d.cols() != side)
        throw parse_error("realization block shapes inconsistent with m");
    return r;
}

Json verification_report_to_json(const VerificationReport& r) {
    Json j;
    j["max_abs_residual"] = r.max_abs_residual;
    j["norm_of_K"] = r.norm_of_k;
    j["tolerance"] = r.tolerance;
    j["verdict"] = r.pass ? "pass" : "fail";
    if (r.bound_checked.has_value()) j["bound_checked"] = *r.bound_checked;
    Json res = Json::array();
    for (const auto& [e, v] : r.residuals) {
        Json t;
        t["exp"] = e;
        t["abs"] = v;
        res.push_back(std::move(t));
    }
    j["residuals"] = std::move(res);
    return j;
}

Json pmrp_report_to_json(const PmrpReport& r) {
    Json j;
    j["max_abs_residual"] = r.max_abs_residual;
    j["verdict"] = r.pass ? "pass" : "fail";
    Json res = Json::array();
    for (const auto& [e, v] : r.residuals) {
        Json t;
        t["exp"] = e;
        t["abs"] = v;
        res.push_back(std::move(t));
    }
    j["residuals"] = std::move(res);
    return j;
}

Json radius_to_json(const RadiusEstimate& r) {
    Json j;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["converged"] = r.converged;
    Json w = Json::array();
    for (const auto& z : r.witness) w.push_back(Json::array({z.real(), z.imag()}));
    j["witness"] = std::move(w);
    return j;
}

Json supnorm_to_json(const SupNormEstimate& r) {
    Json j;
    j["lower"] = r.lower;
    j["upper_heuristic"] = r.upper_heuristic;
    Json w = Json::array();
    for (const auto& z : r.argmax) w.push_back(Json::array({z.real(), z.imag()}));
    j["argmax"] = std::move(w);
    return j;
}

Json kvh_report_to_json(const KvhReport& r) {
    Json j;
    j["d"] = r.d;
    j["s"] = r.s;
    j["sup_lower"] = r.sup_lower;
    j["sup_upper_heuristic"] = r.sup_upper_heuristic;
    j["sup_note"] = r.sup_note;
    j["agler_value"] = r.agler_value;
    j["agler_closed_form"] = r.agler_closed_form;
    j["vn_ratio_lower"] = r.vn_ratio_lower;
    return j;
}

Json kvh_section5_to_json(const KvhSection5& r) {
    Json j;
    j["q"] = poly_to_json(MultiPoly(r.q));
    j["f_at_tuple_norm"] = r.f_at_tuple_norm;
    j["q_stable"] = r.q_stable;
    j["radius"] = radius_to_json(r.radius);
    return j;
}

Json cd_result_to_json(const CdResult& r) {
    Json j;
    j["matrix"] = matrix_to_json(AnyMatrix(r.b));
    j["min_eigenvalue"] = r.min_eigenvalue;
    Json flags = Json::array();
    for (const auto& f : r.flagged) flags.push_back(Json::array({f[0], f[1], f[2]}));
    j["flagged_layers"] = std::move(flags);
    return j;
}

namespace {

void dump_rec(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::null:
            out += "null";
            break;
        case Json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            break;
        case Json::value_t::number_integer: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%" PRId64, j.get<std::int64_t>());
            out += buf;
            break;
        }
        case Json::value_t::number_unsigned: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%" PRIu64, j.get<std::uint64_t>());
            out += buf;
            break;
        }
        case Json::value_t::number_float: {
            double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
            } else {
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.17g", v);
                out += buf;
            }
            break;
        }
        case Json::value_t::string:
            out += Json(j.get<std::string>()).dump();
            break;
        case Json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ',';
                first = false;
                dump_rec(v, out);
            }
            out += ']';
            break;
        }
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += Json(it.key()).dump();
                out += ':';
                dump_rec(it.value(), out);
            }
            out += '}';
            break;
        }
        default:
            throw Error(ErrorCode::internal, "unsupported JSON value type");
    }
}

}  // namespace

std::string dump_json(const Json& j) {
    std::string out;
    dump_rec(j, out);
    return out;
}

}  // namespace detrep
