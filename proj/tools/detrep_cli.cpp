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

// Command-line front end. All computation goes through the detrep C API;
// this file only shuttles JSON and flags.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "detrep/detrep.h"

namespace {

using nlohmann::json;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw CliError{code, message}; }

void check(detrep_status st) {
    if (st == DETREP_OK) return;
    int code = (st == DETREP_ERR_VERIFICATION) ? 2 : 1;
    fail(code, detrep_last_error());
}

std::string read_input(const std::string& path) {
    if (path.empty()) fail(1, "missing --input (use '-' for stdin)");
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) fail(1, "cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty() || out_path == "-") {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) fail(1, "cannot open output file: " + out_path);
    f << payload << "\n";
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    detrep_string_free(s);
    return out;
}

struct PolyHandle {
    detrep_poly* p = nullptr;
    ~PolyHandle() { detrep_poly_free(p); }
};
struct MatrixHandle {
    detrep_matrix* m = nullptr;
    ~MatrixHandle() { detrep_matrix_free(m); }
};
struct RepHandle {
    detrep_representation* r = nullptr;
    ~RepHandle() { detrep_representation_free(r); }
};

void load_poly(const json& j, PolyHandle& h, const std::string& mode) {
    check(detrep_poly_from_json(j.dump().c_str(), &h.p));
    if (mode == "exact") {
        detrep_poly* conv = nullptr;
        check(detrep_poly_to_exact(h.p, &conv));
        detrep_poly_free(h.p);
        h.p = conv;
    } else if (mode == "float") {
        detrep_poly* conv = nullptr;
        check(detrep_poly_to_float(h.p, &conv));
        detrep_poly_free(h.p);
        h.p = conv;
    } else if (!mode.empty()) {
        fail(1, "mode must be 'exact' or 'float'");
    }
}

std::vector<unsigned> degree_list(const json& j) {
    std::vector<unsigned> n;
    for (const auto& v : j) n.push_back(v.get<unsigned>());
    return n;
}

// Parse "1/3", "-0.5", "1/2+1/3i", "2i" into a [re, im] token pair.
json parse_coefficient_token(const std::string& token) {
    if (token.empty()) fail(1, "empty coefficient token");
    std::string s = token;
    bool imag = !s.empty() && (s.back() == 'i' || s.back() == 'I');
    if (!imag) return json::array({s, "0"});
    s.pop_back();
    if (s.empty()) return json::array({"0", "1"});
    if (s == "+" || s == "-") return json::array({"0", s + "1"});
    // Split at the last sign that is not leading and not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return json::array({"0", s});
    std::string re = s.substr(0, split);
    std::string im = s.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return json::array({re, im});
}

int exit_from_verdict(const std::string& payload) {
    json j = json::parse(payload);
    if (j.contains("verdict") && j["verdict"] != "pass") return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"determinantal representations of multivariable polynomials"};
    app.require_subcommand(1);

    std::string input, output, mode;
    double tol = 1e-9;
    int grid = 64, refine = 20, samples = 100;
    long budget = 200000;

    auto add_common = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input) cmd->add_option("--input", input, "input JSON file or '-' for stdin");
        cmd->add_option("--out", output, "output file (default stdout)");
        cmd->add_option("--mode", mode, "coefficient mode: exact|float");
        cmd->add_option("--tol", tol, "tolerance");
        return cmd;
    };

    auto* c_expand = add_common(app.add_subcommand("expand", "expand det(I - K Z_n)"));
    bool no_prune = false;
    int minimize_restarts = 0;
    auto* c_repr = add_common(app.add_subcommand("represent", "unconstrained representation"));
    c_repr->add_flag("--no-prune", no_prune, "keep the literal chain sizes");
    c_repr->add_option("--minimize", minimize_restarts,
                       "random-restart norm reduction over block-diagonal similarities "
                       "(no optimality claim); value is the restart count");
    auto* c_bounded =
        add_common(app.add_subcommand("represent-bounded", "norm-bounded representation"));
    std::string affine_a;
    auto* c_affine =
        add_common(app.add_subcommand("represent-affine", "rank-1 affine representation"), false);
    c_affine->add_option("--a", affine_a, "comma-separated coefficients, e.g. \"1/3,1/3,1/3\"")
        ->required();
    bool semistable = false;
    auto* c_verify = add_common(app.add_subcommand("verify", "verify a representation"));
    c_verify->add_flag("--semistable", semistable, "also check ||K|| >= 1/s(p)");
    auto* c_pmrp = add_common(app.add_subcommand("pmrp", "principal minor relation check"));
    auto* c_stab = add_common(app.add_subcommand("stability", "stability radius estimate"));
    c_stab->add_option("--budget", budget, "certification budget (cell evaluations)");
    auto* c_sup = add_common(app.add_subcommand("supnorm", "torus sup-norm estimate"));
    c_sup->add_option("--grid", grid, "grid points per dimension");
    c_sup->add_option("--refine", refine, "refinement steps");
    auto* c_inner = add_common(app.add_subcommand("inner-check", "rational inner function checks"));
    c_inner->add_option("--samples", samples, "sample count");
    auto* c_extract =
        add_common(app.add_subcommand("extract-k", "representation from a realization"));
    c_extract->add_option("--samples", samples, "sample count");
    auto* c_agler = add_common(app.add_subcommand("agler-bound", "Agler norm lower bound"));
    std::string cd_t = "1";
    int cd_d = 3;
    auto* c_cd = add_common(app.add_subcommand("cd-psd", "Christoffel-Darboux matrix"), false);
    c_cd->add_option("--t", cd_t, "parameter t (rational string in exact mode)");
    c_cd->add_option("--d", cd_d, "number of variables");
    int kvh_d = 3;
    double kvh_s = 1.0;
    auto* c_kvh = add_common(app.add_subcommand("kvh", "quadratic family report"), false);
    c_kvh->add_option("--d", kvh_d, "number of variables");
    c_kvh->add_option("--s", kvh_s, "family parameter s");
    c_kvh->add_option("--grid", grid, "torus grid per dimension");
    double example_r = 0.9;
    auto* c_example = add_common(
        app.add_subcommand("kvh-example", "stable polynomial that is not an Agler denominator"),
        false);
    c_example->add_option("--r", example_r, "parameter r in (5/6, 1)")->required();
    c_example->add_option("--budget", budget, "stability certification budget");

    CLI11_PARSE(app, argc, argv);

    try {
        std::string payload;
        int exit_code = 0;

        if (app.got_subcommand(c_expand)) {
            json j = json::parse(read_input(input));
            RepHandle rep;
            check(detrep_representation_from_json(j.dump().c_str(), &rep.r));
            PolyHandle out;
            check(detrep_det_expand(rep.r, &out.p));
            char* s = nullptr;
            check(detrep_poly_to_json(out.p, &s));
            payload = take_string(s);
        } else if (app.got_subcommand(c_repr)) {
            json j = json::parse(read_input(input));
            PolyHandle p;
            load_poly(j, p, mode.empty() ? "exact" : mode);  // construction verbs default exact
            RepHandle rep;
            check(detrep_represent_unconstrained(p.p, no_prune ? 0 : 1, &rep.r));
            if (minimize_restarts > 0) {
                detrep_representation* reduced = nullptr;
                check(detrep_reduce_norm(rep.r, minimize_restarts, 400, &reduced));
                detrep_representation_free(rep.r);
                rep.r = reduced;
            }
            char* s = nullptr;
            check(detrep_representation_to_json(rep.r, &s));
            payload = take_string(s);
        } else if (app.got_subcommand(c_bounded)) {
            json j = json::parse(read_input(input));
            PolyHandle p;
            load_poly(j, p, mode.empty() ? "float" : mode);
            char* s = nullptr;
            check(detrep_represent_bounded(p.p, &s));
            payload = take_string(s);
        } else if (app.got_subcommand(c_affine)) {
            json arr = json::array();
            std::stringstream ss(affine_a);
            std::string token;
            while (std::getline(ss, token, ',')) arr.push_back(parse_coefficient_token(token));
            int affine_mode = mode == "exact" ? 1 : (mode == "float" ? 2 : 0);
            RepHandle rep;
            check(detrep_represent_affine(arr.dump().c_str(), affine_mode, &rep.r));
            char* s = nullptr;
            check(detrep_representation_to_json(rep.r, &s));
            payload = take_string(s);
        } else if (app.got_subcommand(c_verify)) {
            json j = json::parse(read_input(input));
            PolyHandle p;
            load_poly(j.at("p"), p, mode);
            RepHandle rep;
            check(detrep_representation_from_json(j.at("rep").dump().c_str(), &rep.r));
            char* s = nullptr;
            check(detrep_verify(p.p, rep.r, tol, semistable ? 1 : 0, &s));
            payload = take_string(s);
            exit_code = exit_from_verdict(payload);
        } else if (app.got_subcommand(c_pmrp)) {
            json j = json::parse(read_input(input));
            MatrixHandle k;
            check(detrep_matrix_from_json(j.at("K").dump().c_str(), &k.m));
            PolyHandle target;
            load_poly(j.at("target"), target, mode);
            auto n = degree_list(j.at("n"));
            auto m = degree_list(j.at("m"));
            char* s = nullptr;
            check(detrep_pmrp_check(k.m, n.data(), n.size(), target.p, m.data(), m.size(), tol,
                                    &s));
            payload = take_string(s);
            exit_code = exit_from_verdict(payload);
        } else if (app.got_subcommand(c_stab)) {
            json j = json::parse(read_input(input));
            PolyHandle p;
            load_poly(j, p, mode.empty() ? "float" : mode);
            char* s = nullptr;
            check(detrep_stability_radius(p.p, budget, &s));
            payload = take_string(s);
        } else if (app.got_subcommand(c_sup)) {
            json j = json::parse(read_input(input));
            PolyHandle p;
            load_poly(j, p, mode.empty() ? "float" : mode);
            char* s = nullptr;
            check(detrep_sup_norm(p.p, grid, refine, &s));
            payload = take_string(s);
        } else if (app.got_subcommand(c_inner)) {
            json j = json::parse(read_input(input));
            PolyHandle p;
            load_poly(j.at("p"), p, mode.empty() ? "float" : mode);
            auto n = degree_list(j.at("n"));
            MatrixHandle k;
            if (j.contains("K")) check(detrep_matrix_from_json(j.at("K").dump().c_str(), &k.m));
            char* s = nullptr;
            double inner_tol = tol == 1e-9 ? 1e-8 : tol;
            check(detrep_inner_check(p.p, n.data(), n.size(), k.m, samples, inner_tol, &s));
            payload = take_string(s);
            exit_code = exit_from_verdict(payload);
        } else if (app.got_subcommand(c_extract)) {
            json j = json::parse(read_input(input));
            PolyHandle p;
            load_poly(j.at("p"), p, mode.empty() ? "float" : mode);
            RepHandle rep;
            check(detrep_extract_k(p.p, j.at("realization").dump().c_str(), samples,
                                   tol == 1e-9 ? 1e-8 : tol, &rep.r));
            char* s = nullptr;
            check(detrep_representation_to_json(rep.r, &s));
            payload = take_string(s);
        } else if (app.got_subcommand(c_agler)) {
            json j = json::parse(read_input(input));
            PolyHandle p;
            load_poly(j.at("p"), p, mode.empty() ? "float" : mode);
            double value = 0;
            check(detrep_agler_lower_bound(p.p, j.at("tuples").dump().c_str(), &value));
            json out;
            out["lower_bound"] = value;
            payload = out.dump();
        } else if (app.got_subcommand(c_cd)) {
            char* s = nullptr;
            if (mode == "exact") {
                check(detrep_cd_matrix_exact(cd_t.c_str(), cd_d, &s));
            } else {
                check(detrep_cd_matrix(std::stod(cd_t), 0.0, cd_d, &s));
            }
            payload = take_string(s);
            json j = json::parse(payload);
            double tol_psd = tol == 1e-9 ? 1e-9 : tol;
            exit_code = j.at("min_eigenvalue").get<double>() >= -tol_psd ? 0 : 2;
        } else if (app.got_subcommand(c_kvh)) {
            char* s = nullptr;
            check(detrep_kvh_report(kvh_d, kvh_s, grid, &s));
            payload = take_string(s);
            if (kvh_d == 3) {
                json j = json::parse(payload);
                char* opt = nullptr;
                check(detrep_kvh_optimal(&opt));
                j["optimal"] = json::parse(take_string(opt));
                payload = j.dump();
            }
        } else if (app.got_subcommand(c_example)) {
            char* s = nullptr;
            check(detrep_kvh_example(example_r, budget, &s));
            payload = take_string(s);
        }

        emit(output, payload);
        return exit_code;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
