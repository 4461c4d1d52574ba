// Exercises the shared-library surface exactly as an external client would:
// JSON in, handles, JSON out, error codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>

#include "detrep/detrep.h"

namespace {

struct Poly {
    detrep_poly* p = nullptr;
    ~Poly() { detrep_poly_free(p); }
};
struct Rep {
    detrep_representation* r = nullptr;
    ~Rep() { detrep_representation_free(r); }
};
struct Mat {
    detrep_matrix* m = nullptr;
    ~Mat() { detrep_matrix_free(m); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    detrep_string_free(s);
    return out;
}

const char* kMeanPoly = R"({
  "vars": 3, "mode": "exact",
  "terms": [
    {"exp": [0,0,0], "re": "1", "im": "0"},
    {"exp": [1,0,0], "re": "-1/3", "im": "0"},
    {"exp": [0,1,0], "re": "-1/3", "im": "0"},
    {"exp": [0,0,1], "re": "-1/3", "im": "0"}
  ]})";

}  // namespace

TEST_CASE("poly round trip and eval") {
    Poly p;
    REQUIRE(detrep_poly_from_json(kMeanPoly, &p.p) == DETREP_OK);
    int vars = 0, exact = 0;
    CHECK(detrep_poly_num_vars(p.p, &vars) == DETREP_OK);
    CHECK(vars == 3);
    CHECK(detrep_poly_is_exact(p.p, &exact) == DETREP_OK);
    CHECK(exact == 1);

    double re[3] = {1, 1, 1}, im[3] = {0, 0, 0};
    double vr = 0, vi = 0;
    CHECK(detrep_poly_eval(p.p, re, im, 3, &vr, &vi) == DETREP_OK);
    CHECK(std::abs(vr) < 1e-15);
    CHECK(std::abs(vi) < 1e-15);

    char* s = nullptr;
    REQUIRE(detrep_poly_to_json(p.p, &s) == DETREP_OK);
    std::string once = take(s);
    REQUIRE(detrep_poly_to_json(p.p, &s) == DETREP_OK);
    CHECK(once == take(s));  // byte-identical output
    CHECK(once.find("\"mode\":\"exact\"") != std::string::npos);
}

TEST_CASE("parse errors carry DETREP_ERR_PARSE and a message") {
    Poly p;
    CHECK(detrep_poly_from_json("{not json", &p.p) == DETREP_ERR_PARSE);
    CHECK(std::string(detrep_last_error()).size() > 0);
    CHECK(detrep_poly_from_json(R"({"vars": 0, "terms": []})", &p.p) != DETREP_OK);
}

TEST_CASE("mixed-mode arithmetic is rejected") {
    Poly a, b, sum;
    REQUIRE(detrep_poly_from_json(kMeanPoly, &a.p) == DETREP_OK);
    REQUIRE(detrep_poly_from_json(
                R"({"vars": 3, "mode": "float", "terms": [{"exp": [1,0,0], "re": 1.0, "im": 0.0}]})",
                &b.p) == DETREP_OK);
    CHECK(detrep_poly_add(a.p, b.p, &sum.p) == DETREP_ERR_MODE);
    Poly bf;
    REQUIRE(detrep_poly_to_exact(b.p, &bf.p) == DETREP_OK);
    CHECK(detrep_poly_add(a.p, bf.p, &sum.p) == DETREP_OK);
}

TEST_CASE("represent + verify round trip through the C surface") {
    Poly p;
    REQUIRE(detrep_poly_from_json(kMeanPoly, &p.p) == DETREP_OK);
    Rep rep;
    REQUIRE(detrep_represent_unconstrained(p.p, 1, &rep.r) == DETREP_OK);
    char* s = nullptr;
    REQUIRE(detrep_verify(p.p, rep.r, 1e-9, 0, &s) == DETREP_OK);
    std::string report = take(s);
    CHECK(report.find("\"verdict\":\"pass\"") != std::string::npos);
    CHECK(report.find("\"max_abs_residual\":0") != std::string::npos);

    Poly back;
    REQUIRE(detrep_det_expand(rep.r, &back.p) == DETREP_OK);
    int exact = 0;
    CHECK(detrep_poly_is_exact(back.p, &exact) == DETREP_OK);
    CHECK(exact == 1);
}

TEST_CASE("represent-affine produces the all-ones/3 matrix") {
    Rep rep;
    REQUIRE(detrep_represent_affine(R"(["1/3", "1/3", "1/3"])", 0, &rep.r) == DETREP_OK);
    char* s = nullptr;
    REQUIRE(detrep_representation_to_json(rep.r, &s) == DETREP_OK);
    std::string json = take(s);
    CHECK(json.find("\"mode\":\"exact\"") != std::string::npos);
    CHECK(json.find("\"1/3\"") != std::string::npos);

    // Force-exact fails when a square root is irrational.
    Rep rep2;
    CHECK(detrep_represent_affine(R"(["1/3", "1/2"])", 1, &rep2.r) == DETREP_ERR_PRECONDITION);
    CHECK(detrep_represent_affine(R"(["1/3", "1/2"])", 0, &rep2.r) == DETREP_OK);
}

TEST_CASE("bounded representation report") {
    Poly p;
    REQUIRE(detrep_poly_from_json(
                R"({"vars": 2, "mode": "float", "terms": [
                    {"exp": [0,0], "re": 1.0, "im": 0.0},
                    {"exp": [1,0], "re": -0.5, "im": 0.0},
                    {"exp": [0,1], "re": -0.5, "im": 0.0}]})",
                &p.p) == DETREP_OK);
    char* s = nullptr;
    REQUIRE(detrep_represent_bounded(p.p, &s) == DETREP_OK);
    std::string json = take(s);
    CHECK(json.find("\"beta\":1") != std::string::npos);
    CHECK(json.find("\"kappa\":1") != std::string::npos);
}

TEST_CASE("pmrp, stability, supnorm, inner checks") {
    Mat k;
    REQUIRE(detrep_matrix_from_json(
                R"({"rows": 2, "cols": 2, "mode": "exact",
                    "entries": [["1/2","0"], ["0","0"], ["0","0"], ["-1/3","0"]]})",
                &k.m) == DETREP_OK);
    unsigned n[2] = {1, 1};
    Poly target;
    REQUIRE(detrep_poly_from_json(
                R"({"vars": 2, "mode": "exact", "terms": [
                    {"exp": [0,0], "re": "1", "im": "0"},
                    {"exp": [1,0], "re": "-1/2", "im": "0"},
                    {"exp": [0,1], "re": "1/3", "im": "0"},
                    {"exp": [1,1], "re": "-1/6", "im": "0"}]})",
                &target.p) == DETREP_OK);
    char* s = nullptr;
    REQUIRE(detrep_pmrp_check(k.m, n, 2, target.p, n, 2, 0.0, &s) == DETREP_OK);
    CHECK(take(s).find("\"verdict\":\"pass\"") != std::string::npos);

    Poly p;
    REQUIRE(detrep_poly_from_json(
                R"({"vars": 1, "mode": "float", "terms": [
                    {"exp": [0], "re": 1.0, "im": 0.0}, {"exp": [1], "re": -0.5, "im": 0.0}]})",
                &p.p) == DETREP_OK);
    REQUIRE(detrep_stability_radius(p.p, 10000, &s) == DETREP_OK);
    std::string radius = take(s);
    CHECK(radius.find("\"upper\":2") != std::string::npos);

    REQUIRE(detrep_sup_norm(p.p, 32, 20, &s) == DETREP_OK);
    std::string sup = take(s);
    CHECK(sup.find("\"lower\":1.5") != std::string::npos);

    unsigned n1[1] = {1};
    REQUIRE(detrep_inner_check(p.p, n1, 1, nullptr, 50, 1e-8, &s) == DETREP_OK);
    CHECK(take(s).find("\"verdict\":\"pass\"") != std::string::npos);

    double zr = 0.3, zi = 0.1, vr = 0, vi = 0;
    REQUIRE(detrep_inner_eval_rational(p.p, n1, 1, &zr, &zi, &vr, &vi) == DETREP_OK);
    // (z - 0.5) / (1 - 0.5 z)
    std::complex<double> z(zr, zi);
    std::complex<double> want = (z - 0.5) / (1.0 - 0.5 * z);
    CHECK(std::abs(std::complex<double>(vr, vi) - want) < 1e-12);
}

TEST_CASE("agler bound and kvh reports") {
    Poly p;
    REQUIRE(detrep_kvh_poly(3, 1.0, &p.p) == DETREP_OK);
    const char* tuple_json = R"({"tuples": [{
        "d": 3,
        "matrices": [
          {"rows": 1, "cols": 1, "entries": [[0.5, 0.0]]},
          {"rows": 1, "cols": 1, "entries": [[-0.5, 0.0]]},
          {"rows": 1, "cols": 1, "entries": [[0.0, 0.5]]}]}]})";
    double bound = 0;
    REQUIRE(detrep_agler_lower_bound(p.p, tuple_json, &bound) == DETREP_OK);
    CHECK(bound > 0);

    char* s = nullptr;
    REQUIRE(detrep_kvh_report(2, 1.0, 32, &s) == DETREP_OK);
    std::string rep = take(s);
    CHECK(rep.find("\"agler_closed_form\":4") != std::string::npos);
    CHECK(rep.find("\"agler_value\":3.99999999") != std::string::npos);

    REQUIRE(detrep_kvh_optimal(&s) == DETREP_OK);
    CHECK(take(s).find("\"s_star\":0.7675918") != std::string::npos);

    REQUIRE(detrep_cd_matrix(1.0, 0.0, 3, &s) == DETREP_OK);
    std::string cd = take(s);
    CHECK(cd.find("\"min_eigenvalue\"") != std::string::npos);

    REQUIRE(detrep_cd_matrix_exact("1", 3, &s) == DETREP_OK);
    CHECK(take(s).find("\"1/3\"") != std::string::npos);
}

TEST_CASE("contract violations map to typed statuses") {
    Poly p;
    REQUIRE(detrep_poly_from_json(
                R"({"vars": 1, "mode": "float", "terms": [
                    {"exp": [0], "re": 2.0, "im": 0.0}, {"exp": [1], "re": 1.0, "im": 0.0}]})",
                &p.p) == DETREP_OK);
    Rep rep;
    CHECK(detrep_represent_unconstrained(p.p, 1, &rep.r) == DETREP_ERR_PRECONDITION);

    CHECK(detrep_cd_matrix(0.2, 0.0, 3, nullptr) == DETREP_ERR_INVALID_ARGUMENT);
    char* s = nullptr;
    CHECK(detrep_cd_matrix(0.2, 0.0, 3, &s) == DETREP_ERR_PRECONDITION);
}
