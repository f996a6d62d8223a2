#include "doctest.h"
#include "trignum/report.hpp"
#include "trignum/verify.hpp"

using namespace trignum;

TEST_CASE("typed JSON round-trips") {
    IntPoly p = cyclotomic(105).poly;
    CHECK(poly_from_json(poly_json(p)) == p);

    // a coefficient beyond 64 bits survives the string fallback
    Integer big("123456789012345678901234567890");
    IntPoly huge({Integer(1), big, Integer(-1)});
    CHECK(poly_from_json(poly_json(huge)) == huge);

    auto ctx = field_context(20);
    CycloElement x = ctx->embed_sin(ReducedAngle{1, 5});
    CHECK(element_from_json(element_json(x)) == x);

    RadicalExpr r = make_radical(Integer(-1), Integer(1), 3, Integer(2));
    CHECK(radical_from_json(radical_json(r)) == r);
}

TEST_CASE("report documents parse back to themselves") {
    for (const json& doc : {cyclo_report(12), phi_at_i_report(12),
                            minpoly_report(canonical_cos(ReducedAngle{1, 5})),
                            classification_report(classify_all(6)),
                            pair_table_report(figure3_table())}) {
        json reparsed = json::parse(doc.dump());
        CHECK(reparsed == doc);
    }
}

TEST_CASE("reports are deterministic") {
    CHECK(cyclo_report(60).dump(2) == cyclo_report(60).dump(2));
    CHECK(classification_report(classify_all(12)).dump() ==
          classification_report(classify_all(12)).dump());
    CHECK(render_pair_table(figure3_table()) == render_pair_table(figure3_table()));
}

TEST_CASE("relation rendering") {
    Verdict v = theorem2_verdict(make_rational(1, 5), make_rational(2, 5));
    CHECK(render_relation(v) == "2*cos(pi*1/5) - 2*cos(pi*2/5) = 1");
    QuadVerdict q = oracle_quadratic(make_rational(1, 8), make_rational(3, 8), 2);
    CHECK(render_quad_relation(q) == "(1-sqrt(2))*cos(pi*1/8) + cos(pi*3/8) = 0");
}

TEST_CASE("verify suite runner") {
    CHECK_THROWS_AS(verify::run_suite("nonsense"), std::invalid_argument);
    auto results = verify::run_suite("figure1");
    CHECK(!results.empty());
    for (const auto& r : results) CHECK(r.pass);
}
