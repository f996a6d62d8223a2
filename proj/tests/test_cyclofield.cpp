#include <random>

#include "doctest.h"
#include "trignum/cyclofield.hpp"

using namespace trignum;

TEST_CASE("root embeddings") {
    auto ctx = field_context(4);
    CHECK(ctx->root_power(1) == CycloElement(4, {Integer(0), Integer(1)}, Integer(1)));
    CHECK(ctx->root_power(2) == ctx->from_rational(Rational(-1)));
    CHECK(embed_root(5, 5) == field_context(5)->one());
}

TEST_CASE("cosine and sine embeddings") {
    CHECK(embed_cos(ReducedAngle{1, 3}, 6).as_rational() == make_rational(1, 2));
    CHECK(embed_cos(ReducedAngle{1, 2}, 4).is_zero());
    auto ctx = field_context(10);
    CycloElement two_cos = ctx->scale(Rational(2), ctx->embed_cos(ReducedAngle{1, 5}));
    CHECK(ctx->eval_poly(cos_min_poly(5), two_cos).is_zero());

    CHECK(embed_sin(ReducedAngle{1, 6}, 24).as_rational() == make_rational(1, 2));
    auto ctx16 = field_context(16);
    CycloElement two_sin = ctx16->scale(Rational(2), ctx16->embed_sin(ReducedAngle{1, 4}));
    CHECK(ctx16->eval_poly(IntPoly({Integer(-2), Integer(0), Integer(1)}), two_sin).is_zero());
    auto ctx48 = field_context(48);
    CycloElement s12 = ctx48->scale(Rational(2), ctx48->embed_sin(ReducedAngle{1, 12}));
    CHECK(ctx48->eval_poly(sin_min_poly(12), s12).is_zero());

    CHECK_THROWS_AS(embed_cos(ReducedAngle{1, 5}, 12), conductor_mismatch);
    CHECK_THROWS_AS(embed_sin(ReducedAngle{1, 4}, 8), conductor_mismatch);
}

TEST_CASE("field multiplication and inversion") {
    auto ctx = field_context(5);
    CHECK(ctx->mul(ctx->root_power(1), ctx->root_power(4)) == ctx->one());
    CHECK_THROWS_AS(ctx->inv(ctx->zero()), std::invalid_argument);

    auto ctx10 = field_context(10);
    CycloElement x = ctx10->scale(Rational(2), ctx10->embed_cos(ReducedAngle{1, 5}));
    CHECK(ctx10->mul(x, ctx10->inv(x)) == ctx10->one());

    auto ctx4 = field_context(4);
    CycloElement a = ctx4->add(ctx4->one(), ctx4->root_power(1));
    CycloElement b = ctx4->sub(ctx4->one(), ctx4->root_power(1));
    CHECK(ctx4->mul(a, b) == ctx4->from_rational(Rational(2)));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> coeff(-4, 4);
    for (long m : {7L, 12L, 36L, 60L}) {
        auto ctx = field_context(m);
        auto random_elem = [&] {
            std::vector<Integer> c(totient(m));
            for (auto& x : c) x = coeff(rng);
            return CycloElement(m, std::move(c), Integer(1 + std::abs(coeff(rng))));
        };
        for (int trial = 0; trial < 20; ++trial) {
            CycloElement a = random_elem(), b = random_elem(), c = random_elem();
            CHECK(ctx->mul(a, b) == ctx->mul(b, a));
            CHECK(ctx->mul(ctx->mul(a, b), c) == ctx->mul(a, ctx->mul(b, c)));
            CHECK(ctx->mul(a, ctx->add(b, c)) ==
                  ctx->add(ctx->mul(a, b), ctx->mul(a, c)));
            if (!a.is_zero()) CHECK(ctx->mul(a, ctx->inv(a)) == ctx->one());
        }
    }
}

TEST_CASE("galois automorphisms") {
    auto ctx = field_context(8);
    CHECK(ctx->galois(3, ctx->from_rational(make_rational(5, 3))) ==
          ctx->from_rational(make_rational(5, 3)));
    CycloElement c = ctx->embed_cos(ReducedAngle{1, 4});
    CHECK(ctx->galois(-1, c) == c);  // conjugation fixes real elements
    CycloElement z = ctx->root_power(1);
    CHECK(ctx->galois(3, ctx->galois(3, z)) == z);  // sigma_3^2 = sigma_9 = id
    CHECK_THROWS_AS(ctx->galois(2, z), std::invalid_argument);

    // homomorphism property
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> coeff(-3, 3);
    auto ctx15 = field_context(15);
    auto random_elem = [&] {
        std::vector<Integer> c(totient(15));
        for (auto& x : c) x = coeff(rng);
        return CycloElement(15, std::move(c), Integer(1));
    };
    for (long a : {2L, 4L, 7L, 11L}) {
        for (int trial = 0; trial < 10; ++trial) {
            CycloElement x = random_elem(), y = random_elem();
            CHECK(ctx15->galois(a, ctx15->mul(x, y)) ==
                  ctx15->mul(ctx15->galois(a, x), ctx15->galois(a, y)));
            CHECK(ctx15->galois(a, ctx15->add(x, y)) ==
                  ctx15->add(ctx15->galois(a, x), ctx15->galois(a, y)));
        }
    }
    // sigma_a . sigma_b = sigma_(ab mod m)
    CycloElement w = ctx15->root_power(1);
    CHECK(ctx15->galois(2, ctx15->galois(7, w)) == ctx15->galois(14, w));
}

TEST_CASE("rank and nullspace") {
    auto ctx = field_context(10);
    std::vector<CycloElement> fam{ctx->one(), ctx->embed_cos(ReducedAngle{1, 5}),
                                  ctx->embed_cos(ReducedAngle{2, 5})};
    CHECK(rank_over_Q(fam) == 2);
    auto rels = nullspace_over_Q(fam);
    REQUIRE(rels.size() == 1);
    CHECK(rels[0] == std::vector<Integer>({Integer(1), Integer(-2), Integer(2)}));

    std::vector<CycloElement> single{field_context(1)->one()};
    CHECK(rank_over_Q(single) == 1);

    auto ctx14 = field_context(14);
    std::vector<CycloElement> indep{ctx14->one(), ctx14->embed_cos(ReducedAngle{1, 7}),
                                    ctx14->embed_cos(ReducedAngle{2, 7})};
    CHECK(rank_over_Q(indep) == 3);
    CHECK(nullspace_over_Q(indep).empty());
}

TEST_CASE("minimal polynomials of field elements") {
    CHECK(min_poly(embed_root(4, 1)) == IntPoly({Integer(1), Integer(0), Integer(1)}));
    auto ctx = field_context(10);
    CHECK(min_poly(ctx->scale(Rational(2), ctx->embed_cos(ReducedAngle{1, 5}))) ==
          cos_min_poly(5));
    CHECK(min_poly(ctx->from_rational(Rational(3))) == IntPoly({Integer(-3), Integer(1)}));
    CHECK(min_poly(ctx->zero()) == IntPoly({Integer(0), Integer(1)}));
    // non-integral elements get the primitive integer multiple
    CHECK(min_poly(ctx->from_rational(make_rational(1, 2))) == IntPoly({Integer(-1), Integer(2)}));

    // annihilation and degree divisibility on random elements
    std::mt19937 rng(555);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (long m : {9L, 20L, 36L}) {
        auto c = field_context(m);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Integer> v(totient(m));
            for (auto& x : v) x = coeff(rng);
            CycloElement e(m, std::move(v), Integer(2));
            IntPoly mp = min_poly(e);
            CHECK(c->eval_poly(mp, e).is_zero());
            CHECK(totient(m) % mp.degree() == 0);
        }
    }
}

TEST_CASE("square root embeddings") {
    auto ctx = field_context(120);
    CycloElement r2 = ctx->embed_sqrt(2), r3 = ctx->embed_sqrt(3), r5 = ctx->embed_sqrt(5);
    CHECK(ctx->mul(r2, r2) == ctx->from_rational(Rational(2)));
    // positivity anchors through cosine values
    CHECK(r2 == ctx->scale(Rational(2), ctx->embed_cos(ReducedAngle{1, 4})));
    CHECK(r3 == ctx->scale(Rational(2), ctx->embed_cos(ReducedAngle{1, 6})));
    CHECK(r5 == ctx->sub(ctx->scale(Rational(4), ctx->embed_cos(ReducedAngle{1, 5})), ctx->one()));
    CHECK(ctx->embed_sqrt(6) == ctx->mul(r2, r3));
    CHECK(ctx->embed_sqrt(10) == ctx->mul(r2, r5));
    CHECK_THROWS_AS(ctx->embed_sqrt(7), conductor_mismatch);  // 28 does not divide 120
    CHECK_THROWS_AS(ctx->embed_sqrt(4), std::invalid_argument);
}

TEST_CASE("biquadratic membership") {
    auto ctx48 = field_context(48);
    auto s = ctx48->scale(Rational(2), ctx48->embed_sin(ReducedAngle{1, 12}));
    auto desc = in_biquadratic(s);
    REQUIRE(desc.has_value());
    CHECK(*desc == BiquadDescriptor{2, 3});

    auto ctx14 = field_context(14);
    CHECK_FALSE(in_biquadratic(ctx14->embed_cos(ReducedAngle{1, 7})).has_value());

    auto rational_case = in_biquadratic(ctx14->from_rational(Rational(5)));
    REQUIRE(rational_case.has_value());
    CHECK(*rational_case == BiquadDescriptor{});

    auto ctx8 = field_context(8);
    auto quad = in_biquadratic(ctx8->embed_sqrt(2));
    REQUIRE(quad.has_value());
    CHECK(*quad == BiquadDescriptor{2, std::nullopt});

    // degree 4 but cyclic: 2cos(pi/8) generates a quartic field that is
    // not biquadratic
    auto ctx16 = field_context(16);
    CHECK_FALSE(
        in_biquadratic(ctx16->scale(Rational(2), ctx16->embed_cos(ReducedAngle{1, 8}))).has_value());
}

TEST_CASE("ratio membership route matches the direct one") {
    auto ctx = field_context(240);
    for (auto [k1, N1, k2, N2] : {std::array<long, 4>{1, 5, 2, 5}, {1, 4, 1, 3}, {1, 5, 1, 4},
                                  {1, 12, 1, 4}, {1, 15, 2, 15}}) {
        CycloElement a = ctx->embed_sin(ReducedAngle{k1, N1});
        CycloElement b = ctx->embed_sin(ReducedAngle{k2, N2});
        bool via_ratio = ratio_in_biquadratic(*ctx, a, b);
        bool direct = in_biquadratic(ctx->mul(a, ctx->inv(b))).has_value();
        CHECK(via_ratio == direct);
    }
}

TEST_CASE("factorization over quadratic and biquadratic fields") {
    // Q_8 over Q(sqrt(2)): z^2 - 2 -+ sqrt(2)
    auto f8 = factor_over_biquadratic(sin_min_poly(8), BiquadDescriptor{2, std::nullopt}, 32);
    REQUIRE(f8.size() == 2);
    CHECK(f8[0].coeffs == std::vector<BiquadElem>{BiquadElem{Rational(-2), Rational(-1), 0, 0},
                                                  BiquadElem{0, 0, 0, 0},
                                                  BiquadElem{Rational(1), 0, 0, 0}});
    CHECK(f8[1].coeffs == std::vector<BiquadElem>{BiquadElem{Rational(-2), Rational(1), 0, 0},
                                                  BiquadElem{0, 0, 0, 0},
                                                  BiquadElem{Rational(1), 0, 0, 0}});

    // Q_16 over Q(sqrt(2)): z^4 - 4z^2 + 2 -+ sqrt(2)
    auto f16 = factor_over_biquadratic(sin_min_poly(16), BiquadDescriptor{2, std::nullopt}, 64);
    REQUIRE(f16.size() == 2);
    CHECK(f16[0].str() == "z^4 - 4*z^2 + 2 - sqrt(2)");
    CHECK(f16[1].str() == "z^4 - 4*z^2 + 2 + sqrt(2)");

    // Q_5 stays irreducible over Q(sqrt(2))
    auto f5 = factor_over_biquadratic(sin_min_poly(5), BiquadDescriptor{2, std::nullopt}, 40);
    REQUIRE(f5.size() == 1);
    CHECK(f5[0].coeffs.size() == 5);

    // the quadratic factors of Q_8 over Q(sqrt(2)) cannot split further:
    // their roots have degree 4 over Q, so no linear factor lives in a
    // quadratic field
    auto ctx32 = field_context(32);
    CycloElement root8 = ctx32->scale(Rational(2), ctx32->embed_sin(ReducedAngle{1, 8}));
    CHECK(min_poly(root8).degree() == 4);

    // a polynomial that does not split in the given field
    CHECK_THROWS_AS(
        factor_over_biquadratic(IntPoly({Integer(-7), Integer(0), Integer(1)}),
                                BiquadDescriptor{2, std::nullopt}, 8),
        std::invalid_argument);
}

TEST_CASE("conductor helpers") {
    CHECK(cos_conductor(ReducedAngle{1, 5}) == 10);
    CHECK(sin_conductor(ReducedAngle{1, 5}) == 20);
    CHECK(sqrt_conductor(2) == 8);
    CHECK(sqrt_conductor(5) == 5);
}
