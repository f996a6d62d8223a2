#include "doctest.h"
#include "trignum/cyclofield.hpp"

using namespace trignum;

TEST_CASE("angle reduction") {
    CHECK(reduce_angle(make_rational(2, 10)) == ReducedAngle{1, 5});
    CHECK(reduce_angle(make_rational(7, 3)) == ReducedAngle{1, 3});
    CHECK(reduce_angle(Rational(3)) == ReducedAngle{1, 1});
    CHECK(reduce_angle(make_rational(-1, 5)) == ReducedAngle{9, 5});
    CHECK(reduce_angle(Rational(0)) == ReducedAngle{0, 1});
}

TEST_CASE("chebyshev-like family") {
    CHECK(chebyshev_like(0) == IntPoly({Integer(2)}));
    CHECK(chebyshev_like(1) == IntPoly({Integer(0), Integer(1)}));
    // one recursion step: R_2 = z R_1 - R_0
    CHECK(chebyshev_like(2) == IntPoly({Integer(-2), Integer(0), Integer(1)}));
    for (int n = 3; n <= 10; ++n) {
        Integer v = chebyshev_like(n).eval(Integer(0));
        CHECK((v == -2 || v == 0 || v == 2));
    }
}

TEST_CASE("cosine minimal polynomials") {
    CHECK(cos_min_poly(1) == IntPoly({Integer(2), Integer(1)}));
    CHECK(cos_min_poly(2) == IntPoly({Integer(0), Integer(1)}));
    CHECK(cos_min_poly(3) == IntPoly({Integer(-1), Integer(1)}));
    CHECK(cos_min_poly(4) == IntPoly({Integer(-2), Integer(0), Integer(1)}));
    CHECK(cos_min_poly(5) == IntPoly({Integer(-1), Integer(-1), Integer(1)}));
    // |P_N(0)| = p at N = 2 p^j
    CHECK(abs(cos_min_poly(6).eval(Integer(0))) == 3);
    CHECK(abs(cos_min_poly(10).eval(Integer(0))) == 5);
}

TEST_CASE("sine minimal polynomials") {
    CHECK(sin_min_poly(5) ==
          IntPoly({Integer(5), Integer(0), Integer(-5), Integer(0), Integer(1)}));
    CHECK(sin_min_poly(12) ==
          IntPoly({Integer(1), Integer(0), Integer(-4), Integer(0), Integer(1)}));
    CHECK(sin_min_poly(2) == IntPoly({Integer(2), Integer(1)}));
    CHECK(degree_of_sin(2) == 1);
    CHECK(sin_min_poly(1) == cos_min_poly(2));  // sin of integer multiples vanishes
}

TEST_CASE("cosine degrees") {
    CHECK(degree_of_cos(3) == 1);
    CHECK(degree_of_cos(7) == 3);
    CHECK(degree_of_cos(30) == 8);
    // p_N = 1 exactly at N in {1, 2, 3}
    for (long N = 1; N <= 50; ++N) CHECK((degree_of_cos(N) == 1) == (N <= 3));
}

TEST_CASE("canonical cosine data") {
    MinPolyInfo a = canonical_cos(reduce_angle(make_rational(1, 5)));
    CHECK(a.poly == cos_min_poly(5));
    CHECK(a.sign_exponent % 2 == 0);  // the number is +2cos(pi/5)

    MinPolyInfo b = canonical_cos(reduce_angle(Rational(1)));
    CHECK(b.poly == IntPoly({Integer(2), Integer(1)}));
    CHECK(b.sign_exponent % 2 == 0);  // 2(-1)^2 cos(pi) = -2 solves z + 2 = 0

    // r = 2/5: the canonical number is -2cos(2pi/5), a root of P_5
    MinPolyInfo c = canonical_cos(reduce_angle(make_rational(2, 5)));
    CHECK(c.sign_exponent % 2 == 1);
    auto ctx = field_context(10);
    CycloElement root = ctx->scale(Rational(-2), ctx->embed_cos(ReducedAngle{2, 5}));
    CHECK(ctx->eval_poly(c.poly, root).is_zero());
}

TEST_CASE("sine sign exponent representative independence") {
    // Lemma's sign formula evaluated on shifted representatives still
    // produces a root of the same polynomial.
    for (long N : {2L, 6L, 10L, 12L, 30L}) {
        auto ctx = field_context(4 * N);
        for (long k = 0; k < 2 * N; ++k) {
            if (std::gcd(k, N) != 1) continue;
            MinPolyInfo info = canonical_sin(ReducedAngle{k, N});
            CycloElement s = ctx->embed_sin(ReducedAngle{k, N});
            CycloElement root = ctx->scale(Rational(info.sign_exponent % 2 ? -2 : 2), s);
            CHECK(ctx->eval_poly(info.poly, root).is_zero());
        }
    }
}
