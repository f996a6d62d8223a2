#include <random>

#include "doctest.h"
#include "oracle_helpers.hpp"
#include "trignum/cyclotomic.hpp"

using namespace trignum;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_deg, bool monic) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-9, 9);
    std::vector<Integer> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    if (monic || (c.back() == 0)) c.back() = 1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("polynomial multiplication") {
    IntPoly zm1{Integer(-1), Integer(1)}, zp1{Integer(1), Integer(1)};
    CHECK(zm1 * zp1 == IntPoly({Integer(-1), Integer(0), Integer(1)}));

    // product of the first three cyclotomics of 4 is z^4 - 1, not z^4 + z^3 - z - 1
    IntPoly prod = cyclotomic(1).poly * cyclotomic(2).poly * cyclotomic(4).poly;
    CHECK(prod == IntPoly({Integer(-1), Integer(0), Integer(0), Integer(0), Integer(1)}));

    CHECK((zm1 * IntPoly::zero()).is_zero());
    CHECK(IntPoly::zero().degree() == -1);
}

TEST_CASE("exact division") {
    IntPoly z4m1{Integer(-1), Integer(0), Integer(0), Integer(0), Integer(1)};
    IntPoly z2p1{Integer(1), Integer(0), Integer(1)};
    CHECK(IntPoly::div_exact(z4m1, z2p1) == IntPoly({Integer(-1), Integer(0), Integer(1)}));

    // (z^6 - 1) / ((z-1)(z+1)(z^2+z+1)); quotient frozen from the
    // numeric root-product oracle for the 6th cyclotomic polynomial
    IntPoly expected = testing::numeric_cyclotomic(6);
    CHECK(expected == IntPoly({Integer(1), Integer(-1), Integer(1)}));
    IntPoly z6m1{Integer(-1), Integer(0), Integer(0), Integer(0), Integer(0), Integer(0), Integer(1)};
    IntPoly divisor = IntPoly({Integer(-1), Integer(1)}) * IntPoly({Integer(1), Integer(1)}) *
                      IntPoly({Integer(1), Integer(1), Integer(1)});
    CHECK(IntPoly::div_exact(z6m1, divisor) == expected);

    CHECK(IntPoly::div_exact(z2p1, z2p1) == IntPoly::one());
    CHECK_THROWS_AS(IntPoly::div_exact(z2p1, IntPoly({Integer(1), Integer(1)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(IntPoly::divmod(z2p1, IntPoly({Integer(1), Integer(2)})),
                    std::invalid_argument);  // non-monic divisor
}

TEST_CASE("divmod inverts multiplication") {
    std::mt19937 rng(20240517);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly a = random_poly(rng, 8, false);
        IntPoly b = random_poly(rng, 5, true);
        CHECK(IntPoly::div_exact(a * b, b) == a);
    }
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
    for (int trial = 0; trial < 500; ++trial) {
        Rational p = make_rational(num(rng), den(rng));
        Rational r = make_rational(num(rng), den(rng));
        CHECK((p + r) - r == p);
    }
}

TEST_CASE("gaussian integers") {
    IntPoly z2p1{Integer(1), Integer(0), Integer(1)};
    GaussianInt i{Integer(0), Integer(1)};
    CHECK(eval_gaussian(z2p1, i) == GaussianInt(Integer(0), Integer(0)));
    CHECK(eval_gaussian(IntPoly({Integer(-1), Integer(1)}), i) == GaussianInt(Integer(-1), Integer(1)));
    CHECK(eval_gaussian(IntPoly({Integer(7)}), i) == GaussianInt(Integer(7), Integer(0)));

    std::mt19937 rng(99);
    std::uniform_int_distribution<long> c(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        GaussianInt x{Integer(c(rng)), Integer(c(rng))}, y{Integer(c(rng)), Integer(c(rng))};
        CHECK(x * y == y * x);
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
}

TEST_CASE("palindromic predicate") {
    CHECK(IntPoly({Integer(1), Integer(1), Integer(1)}).is_palindromic());
    CHECK_FALSE(IntPoly({Integer(-1), Integer(1)}).is_palindromic());
    CHECK(IntPoly({Integer(1)}).is_palindromic());
}

TEST_CASE("printing") {
    CHECK(cyclotomic(12).poly.str() == "z^4 - z^2 + 1");
    CHECK(IntPoly::zero().str() == "0");
    CHECK(IntPoly({Integer(2), Integer(1)}).str() == "z + 2");
    CHECK(IntPoly({Integer(0), Integer(-3)}).str() == "-3*z");
}

TEST_CASE("primitive integer form") {
    RatPoly p{make_rational(1, 2), make_rational(-3, 4)};
    CHECK(primitive_integer_form(p) == IntPoly({Integer(-2), Integer(3)}));
    CHECK(primitive_integer_form(RatPoly()) == IntPoly());
}
