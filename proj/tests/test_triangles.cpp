#include <fstream>
#include <sstream>

#include "doctest.h"
#include "trignum/triangles.hpp"

using namespace trignum;

TEST_CASE("shape validation") {
    CHECK_NOTHROW(TriangleShape(1, 2, 3, 6));
    CHECK_THROWS_AS(TriangleShape(2, 1, 3, 6), std::invalid_argument);   // not sorted
    CHECK_THROWS_AS(TriangleShape(1, 2, 4, 6), std::invalid_argument);   // wrong sum
    CHECK_THROWS_AS(TriangleShape(2, 2, 2, 6), std::invalid_argument);   // common factor
    TriangleShape t(1, 2, 3, 6);
    CHECK(t.angle(3) == make_rational(1, 2));
    CHECK(t.angle_denominator(3) == 2);
    CHECK(t.right());
    CHECK_FALSE(t.isosceles());
    CHECK(t.str() == "pi*(1,2,3)/6");
}

TEST_CASE("admissible denominators from the degree filter") {
    const auto& allowed = allowed_N_values();
    CHECK(allowed == std::vector<long>({2, 3, 4, 5, 6, 8, 10, 12, 15, 16, 17, 20, 24, 30}));
    CHECK(std::find(allowed.begin(), allowed.end(), 17) != allowed.end());
    // 7 and 32 fail the degree test
    CHECK(degree_of_cos(7) == 3);
    CHECK(degree_of_cos(32) == 16);
}

TEST_CASE("sin ratio pair table") {
    CHECK(sin_ratio_biquadratic(2, 12));
    CHECK_FALSE(sin_ratio_biquadratic(5, 8));
    CHECK(sin_ratio_biquadratic(8, 24));
    CHECK_FALSE(sin_ratio_biquadratic(5, 10));
    CHECK(sin_ratio_biquadratic(5, 5));
    CHECK_FALSE(sin_ratio_biquadratic(2, 5));
    CHECK_THROWS_AS(sin_ratio_biquadratic(7, 8), std::invalid_argument);

    const auto& table = figure3_table();
    for (size_t i = 0; i < table.Ns.size(); ++i)
        for (size_t j = 0; j < table.Ns.size(); ++j)
            CHECK(table.admissible[i][j] == table.admissible[j][i]);
    CHECK(table.vacuous == std::vector<std::pair<long, long>>(
                               {{2, 2}, {3, 3}, {4, 4}, {6, 6}}));
}

TEST_CASE("high school verdicts") {
    CHECK(is_high_school(TriangleShape(1, 2, 3, 6), Mode::Verified));
    CHECK(is_high_school(TriangleShape(3, 4, 5, 12), Mode::Verified));
    CHECK_FALSE(is_high_school(TriangleShape(1, 2, 4, 7), Mode::Verified));

    HighSchoolVerdict v = classify_shape(TriangleShape(1, 2, 4, 7));
    CHECK(v.obstruction == Obstruction::DegreeFilter);
    CHECK(v.detail_N1 == 7);

    // isosceles with repeated denominator 8: named obstruction
    HighSchoolVerdict iso = classify_shape(TriangleShape(1, 1, 6, 8));
    CHECK_FALSE(iso.high_school);
    CHECK(iso.obstruction == Obstruction::IsoscelesHalfDenominator);
    CHECK(iso.detail_N1 == 8);
    CHECK(iso.detail_N2 == 4);

    // scalene rejected by the pair table: angles 1/15, 2/15, 4/5
    HighSchoolVerdict pair = classify_shape(TriangleShape(1, 2, 12, 15));
    CHECK_FALSE(pair.high_school);
    CHECK(pair.obstruction == Obstruction::PairTable);
}

TEST_CASE("classification lists") {
    auto small = classify_all(5);
    REQUIRE(small.size() == 4);
    CHECK(small[0].shape == TriangleShape(1, 1, 1, 3));
    CHECK(small[1].shape == TriangleShape(1, 1, 2, 4));
    CHECK(small[2].shape == TriangleShape(1, 1, 3, 5));
    CHECK(small[3].shape == TriangleShape(1, 2, 2, 5));

    auto full = classify_all(12);
    CHECK(full.size() == 14);
    long iso = 0, right = 0, neither = 0;
    for (const auto& t : full) {
        if (t.shape.isosceles()) ++iso;
        if (t.shape.right()) ++right;
        if (!t.shape.isosceles() && !t.shape.right()) ++neither;
    }
    CHECK(iso == 7);
    CHECK(right == 3);
    CHECK(neither == 5);
}

TEST_CASE("side ratio verification") {
    auto rad = [](long a, long b, long d, long c = 1) {
        return make_radical(Integer(a), Integer(b), d, Integer(c));
    };
    CHECK(verify_ratio(TriangleShape(1, 1, 3, 5),
                       SideRatios{{rad(2, 0, 1), rad(2, 0, 1), rad(1, 1, 5)}}));
    CHECK(verify_ratio(TriangleShape(1, 5, 6, 12),
                       SideRatios{{rad(-1, 1, 3), rad(1, 1, 3), rad(0, 2, 2)}}));
    CHECK_FALSE(verify_ratio(TriangleShape(1, 1, 1, 3),
                             SideRatios{{rad(1, 0, 1), rad(1, 0, 1), rad(2, 0, 1)}}));
    // scaling a witness by a common factor keeps it valid
    CHECK(verify_ratio(TriangleShape(1, 1, 3, 5),
                       SideRatios{{rad(4, 0, 1), rad(4, 0, 1), rad(2, 2, 5)}}));
}

TEST_CASE("golden and silver diagonal ratio identities") {
    // (5,5): the squared sine ratio is the square of the golden ratio
    auto ctx20 = field_context(20);
    CycloElement w1 = ctx20->embed_sin(ReducedAngle{2, 5});
    CycloElement w2 = ctx20->embed_sin(ReducedAngle{1, 5});
    CycloElement ratio_sq = ctx20->mul(ctx20->mul(w1, w1), ctx20->inv(ctx20->mul(w2, w2)));
    CycloElement golden = ctx20->scale(make_rational(1, 2),
                                       ctx20->add(ctx20->one(), ctx20->embed_sqrt(5)));
    CHECK(ratio_sq == ctx20->mul(golden, golden));

    // (8,8): the analogous value is (1 + sqrt(2))^2
    auto ctx32 = field_context(32);
    CycloElement v1 = ctx32->embed_sin(ReducedAngle{3, 8});
    CycloElement v2 = ctx32->embed_sin(ReducedAngle{1, 8});
    CycloElement vr = ctx32->mul(ctx32->mul(v1, v1), ctx32->inv(ctx32->mul(v2, v2)));
    CycloElement silver = ctx32->add(ctx32->one(), ctx32->embed_sqrt(2));
    CHECK(vr == ctx32->mul(silver, silver));
}

TEST_CASE("radical positivity") {
    CHECK(radical_positive(make_radical(Integer(-1), Integer(1), 3, Integer(1))));   // sqrt(3) - 1
    CHECK_FALSE(radical_positive(make_radical(Integer(1), Integer(-1), 3, Integer(1))));
    CHECK(radical_positive(make_radical(Integer(3), Integer(-1), 2, Integer(5))));   // (3 - sqrt 2)/5
    CHECK_FALSE(radical_positive(make_radical(Integer(0), Integer(0), 1, Integer(1))));
}

TEST_CASE("fixture file round-trips and matches the embedded table") {
    const auto& ref = reference_triangles();
    std::string rendered = render_triangle_fixture(ref);
    std::istringstream in(rendered);
    auto parsed = parse_triangle_fixture(in);
    REQUIRE(parsed.size() == ref.size());
    for (size_t i = 0; i < ref.size(); ++i) {
        CHECK(parsed[i].shape == ref[i].shape);
        CHECK(parsed[i].sides == ref[i].sides);
    }

    std::ifstream file(std::string(TRIGNUM_SOURCE_DIR) + "/data/high_school_triangles.txt");
    REQUIRE(file.good());
    auto shipped = parse_triangle_fixture(file);
    REQUIRE(shipped.size() == ref.size());
    for (size_t i = 0; i < ref.size(); ++i) {
        CHECK(shipped[i].shape == ref[i].shape);
        CHECK(shipped[i].sides == ref[i].sides);
    }
}

TEST_CASE("angle denominator lcm equals N") {
    for (long N = 3; N <= 40; ++N)
        for (long a = 1; 3 * a <= N; ++a)
            for (long b = a; 2 * b <= N - a; ++b) {
                long c = N - a - b;
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                TriangleShape t(a, b, c, N);
                long l = lcm_long(lcm_long(t.angle_denominator(1), t.angle_denominator(2)),
                                  t.angle_denominator(3));
                CHECK(l == N);
            }
}
