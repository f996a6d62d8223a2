#include <set>
#include <thread>

#include "doctest.h"
#include "oracle_helpers.hpp"
#include "trignum/cyclotomic.hpp"

using namespace trignum;

TEST_CASE("totient") {
    CHECK(totient(1) == 1);
    CHECK(totient(12) == testing::brute_totient(12));
    CHECK(totient(12) == 4);
    for (long n = 1; n <= 100; n += 2) CHECK(totient(2 * n) == totient(n));
    for (long n = 1; n <= 60; ++n) CHECK(totient(n) == testing::brute_totient(n));
}

TEST_CASE("moebius") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(105) == -1);  // 3 * 5 * 7
    CHECK(moebius(9) == 0);
    for (long n = 1; n <= 60; ++n) CHECK(moebius(n) == testing::brute_moebius(n));
}

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic(1).poly == IntPoly({Integer(-1), Integer(1)}));
    CHECK(cyclotomic(2).poly == IntPoly({Integer(1), Integer(1)}));
    CHECK(cyclotomic(3).poly == IntPoly({Integer(1), Integer(1), Integer(1)}));
    CHECK(cyclotomic(4).poly == IntPoly({Integer(1), Integer(0), Integer(1)}));
    CHECK(cyclotomic(6).poly == testing::numeric_cyclotomic(6));
    CHECK(cyclotomic(9).poly == cyclotomic(3).poly.substitute_power(3));
    CHECK(cyclotomic(9).poly == IntPoly({Integer(1), Integer(0), Integer(0), Integer(1), Integer(0),
                                         Integer(0), Integer(1)}));
    for (long n = 1; n <= 40; ++n) CHECK(cyclotomic(n).poly == testing::numeric_cyclotomic(n));
}

TEST_CASE("coefficients in the reversed labelling") {
    CHECK(cyclo_coefficient(5, 0) == 1);
    for (long n = 1; n <= 50; ++n) CHECK(cyclo_coefficient(n, 1) == -moebius(n));
    CHECK(cyclo_coefficient(4, 5) == 0);
    CHECK_THROWS_AS(cyclo_coefficient(4, -1), std::invalid_argument);
}

TEST_CASE("leading triples") {
    CHECK(leading_triple(2) == std::array<int, 3>{1, 0, 0});
    CHECK(leading_triple(15) == std::array<int, 3>{-1, 0, 1});
    CHECK(leading_triple(9) == std::array<int, 3>{0, 0, 1});
    std::set<std::array<int, 3>> seen;
    for (long n = 1; n <= 30; ++n) seen.insert(leading_triple(n));
    CHECK(seen.size() == 13);
}

TEST_CASE("value at i") {
    CHECK(phi_at_i(4) == GaussianInt(Integer(0), Integer(0)));
    CHECK(phi_at_i(12) == GaussianInt(Integer(3), Integer(0)));
    CHECK(phi_at_i(3) == GaussianInt(Integer(0), Integer(1)));
    CHECK(phi_at_i(1) == GaussianInt(Integer(-1), Integer(1)));
    CHECK(phi_at_i(2) == GaussianInt(Integer(1), Integer(1)));
    CHECK(phi_at_i(8) == GaussianInt(Integer(2), Integer(0)));
    CHECK(phi_at_i_class(36) == PhiAtIClass::FourTimesPrimePower);
    CHECK(phi_at_i_class(60) == PhiAtIClass::One);
}

TEST_CASE("quadratic fields") {
    CHECK(QuadField(2).d_hat == 8);
    CHECK(QuadField(5).d_hat == 5);
    CHECK(QuadField(6).d_hat == 24);
    CHECK(QuadField(13).d_hat == 13);
    CHECK_THROWS_AS(QuadField(4), std::invalid_argument);
    CHECK_THROWS_AS(QuadField(12), std::invalid_argument);
    CHECK_THROWS_AS(QuadField(1), std::invalid_argument);

    CHECK_FALSE(irreducible_over_quadratic(8, 2));
    CHECK_FALSE(irreducible_over_quadratic(5, 5));
    CHECK(irreducible_over_quadratic(7, 2));
    CHECK_THROWS_AS(irreducible_over_quadratic(8, 12), std::invalid_argument);
}

TEST_CASE("memo table is safe under concurrent access") {
    std::vector<std::thread> workers;
    std::vector<Integer> results(8);
    for (int w = 0; w < 8; ++w)
        workers.emplace_back([w, &results] {
            Integer acc(0);
            for (long n = 1; n <= 150; ++n) acc += cyclo_coefficient(n, 2);
            results[w] = acc;
        });
    for (auto& t : workers) t.join();
    for (int w = 1; w < 8; ++w) CHECK(results[w] == results[0]);
}
