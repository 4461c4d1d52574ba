#include <doctest.h>

#include "detrep/json_io.hpp"

using namespace detrep;

TEST_CASE("polynomial JSON round trip, both modes") {
    RationalPoly p(2);
    p.add_term({0, 0}, RationalComplex(1));
    p.add_term({1, 2}, RationalComplex(mpq_class(-2, 3), mpq_class(1, 7)));
    MultiPoly mp{p};
    Json j = poly_to_json(mp);
    CHECK(j["mode"] == "exact");
    MultiPoly back = poly_from_json(j);
    REQUIRE(back.is_exact());
    CHECK(back.exact() == p);

    ComplexPoly f(3);
    f.add_term({1, 0, 2}, Cplx(0.125, -3.5));
    MultiPoly mf{f};
    Json jf = poly_to_json(mf);
    CHECK(jf["mode"] == "float");
    MultiPoly backf = poly_from_json(jf);
    REQUIRE(!backf.is_exact());
    CHECK(backf.floating() == f);
}

TEST_CASE("matrix and representation JSON round trip") {
    RationalMatrix m(2, 2);
    m(0, 0) = RationalComplex(mpq_class(1, 3), mpq_class(-1, 2));
    m(1, 1) = RationalComplex(5);
    AnyMatrix am{m};
    AnyMatrix back = matrix_from_json(matrix_to_json(am));
    REQUIRE(back.is_exact());
    CHECK(back.exact() == m);

    AnyRepresentation rep;
    rep.n = {1, 1};
    rep.k = am;
    AnyRepresentation rback = representation_from_json(representation_to_json(rep));
    CHECK(rback.n == rep.n);
    CHECK(rback.k.exact() == m);

    // K side must match |n|.
    Json bad = representation_to_json(rep);
    bad["n"] = Json::array({3, 1});
    CHECK_THROWS_AS(representation_from_json(bad), Error);
}

TEST_CASE("tuple and realization JSON round trip") {
    ComplexMatrix t1(2, 2), t2(2, 2);
    t1(0, 1) = Cplx(0.5, 0);
    t2(0, 1) = Cplx(0, 0.25);
    CommutingTuple<Cplx> tup({t1, t2}, 1e-10);
    CommutingTuple<Cplx> tback = tuple_from_json(tuple_to_json(tup));
    CHECK(tback.dim() == 2);
    CHECK((tback.matrix(0) - t1).frobenius() == 0.0);

    Realization r;
    r.m = {1, 1};
    r.a = ComplexMatrix(1, 1);
    r.b = ComplexMatrix(1, 2);
    r.c = ComplexMatrix(2, 1);
    r.d = ComplexMatrix(2, 2);
    r.a(0, 0) = Cplx(0.1, 0.2);
    r.b(0, 1) = Cplx(-1, 0);
    Realization rback = realization_from_json(realization_to_json(r));
    CHECK(rback.a(0, 0) == r.a(0, 0));
    CHECK(rback.b(0, 1) == r.b(0, 1));

    Json bad = realization_to_json(r);
    bad["m"] = Json::array({2, 2});
    CHECK_THROWS_AS(realization_from_json(bad), Error);
}

TEST_CASE("dump_json is deterministic with 17-digit floats") {
    Json j;
    j["x"] = 1.0 / 3.0;
    j["arr"] = Json::array({Cplx(1, 0).real(), 2.5});
    j["s"] = "quote\"me";
    j["flag"] = true;
    std::string a = dump_json(j);
    std::string b = dump_json(j);
    CHECK(a == b);
    CHECK(a.find("0.33333333333333331") != std::string::npos);
    CHECK(a.find("\"quote\\\"me\"") != std::string::npos);

    // Non-finite doubles serialize as null.
    Json inf;
    inf["v"] = std::numeric_limits<double>::infinity();
    CHECK(dump_json(inf) == "{\"v\":null}");

    // Keys are emitted in sorted order regardless of insertion order.
    Json k1, k2;
    k1["b"] = 1;
    k1["a"] = 2;
    k2["a"] = 2;
    k2["b"] = 1;
    CHECK(dump_json(k1) == dump_json(k2));
}

TEST_CASE("poly JSON parse errors") {
    CHECK_THROWS(poly_from_json(Json::parse(R"({"terms": []})")));
    CHECK_THROWS(poly_from_json(Json::parse(R"({"vars": 2, "mode": "nope", "terms": []})")));
    CHECK_THROWS(poly_from_json(
        Json::parse(R"({"vars": 2, "mode": "float", "terms": [{"exp": [1], "re": 1, "im": 0}]})")));
}
