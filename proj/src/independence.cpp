#include "trignum/independence.hpp"

#include <algorithm>

namespace trignum {

std::string reason_name(Reason r) {
    switch (r) {
        case Reason::AngleSumOrDiffInteger: return "angle-sum-or-difference-integer";
        case Reason::SmallDenominator: return "rational-cosine";
        case Reason::FiveFivePair: return "five-five-pair";
        case Reason::CriterionIndependent: return "criterion-independent";
        case Reason::OracleRank: return "oracle-rank";
    }
    return "?";
}

std::optional<Rational> niven_check(const Rational& r) {
    ReducedAngle a = reduce_angle(r);
    if (a.N > 3) return std::nullopt;
    // N <= 3: 2cos(pi k/N) for the canonical 0 <= k < 2N
    long k = a.k;
    if (a.N == 1) return Rational(k == 0 ? 2 : -2);
    if (a.N == 2) return Rational(0);
    return Rational((k == 1 || k == 5) ? 1 : -1);
}

namespace {

long common_cos_conductor(std::span<const ReducedAngle> as) {
    long m = 1;
    for (const auto& a : as) m = lcm_long(m, 2 * a.N);
    return m;
}

// {1, cos(pi r_1), ..., cos(pi r_k)} embedded in one conductor.
std::vector<CycloElement> cos_family(std::span<const ReducedAngle> as,
                                     std::shared_ptr<FieldContext>& ctx_out) {
    long m = common_cos_conductor(as);
    auto ctx = field_context(m);
    std::vector<CycloElement> xs{ctx->one()};
    for (const auto& a : as) xs.push_back(ctx->embed_cos(a));
    ctx_out = ctx;
    return xs;
}

void verify_relation(const std::vector<CycloElement>& xs, const std::vector<Integer>& lambda,
                     FieldContext& ctx) {
    CycloElement acc = ctx.zero();
    for (size_t i = 0; i < xs.size(); ++i)
        acc = ctx.add(acc, ctx.scale(Rational(lambda[i]), xs[i]));
    if (!acc.is_zero())
        throw verification_error("dependence relation fails exact substitution");
}

Verdict dependent_via_oracle(std::span<const Rational> rs, Reason reason) {
    std::vector<ReducedAngle> as;
    for (const auto& r : rs) as.push_back(reduce_angle(r));
    std::shared_ptr<FieldContext> ctx;
    auto xs = cos_family(as, ctx);
    auto relations = nullspace_over_Q(xs);
    Verdict v;
    v.angles.assign(rs.begin(), rs.end());
    v.independent = relations.empty();
    v.reason = reason;
    if (!v.independent) {
        v.relation = relations.at(0);
        verify_relation(xs, *v.relation, *ctx);
    }
    return v;
}

}  // namespace

Verdict theorem2_verdict(const Rational& r1, const Rational& r2) {
    ReducedAngle a1 = reduce_angle(r1), a2 = reduce_angle(r2);
    Verdict v;
    v.angles = {r1, r2};

    // r1 - r2 or r1 + r2 integer comes first, matching the hypothesis order.
    Rational diff = r1 - r2, sum = r1 + r2;
    bool diff_int = diff.get_den() == 1, sum_int = sum.get_den() == 1;
    if (diff_int || sum_int) {
        // cos(pi r1) = (-1)^w cos(pi r2) with w the integer in question.
        Integer w = diff_int ? Integer(diff.get_num()) : Integer(sum.get_num());
        bool even = mpz_even_p(w.get_mpz_t());
        v.independent = false;
        v.reason = Reason::AngleSumOrDiffInteger;
        v.relation = std::vector<Integer>{Integer(0), Integer(1), Integer(even ? -1 : 1)};
        std::shared_ptr<FieldContext> ctx;
        std::vector<ReducedAngle> as{a1, a2};
        auto xs = cos_family(as, ctx);
        verify_relation(xs, *v.relation, *ctx);
        return v;
    }

    if (a1.N <= 3 || a2.N <= 3) {
        // The small-denominator cosine is rational; produce that relation.
        v.independent = false;
        v.reason = Reason::SmallDenominator;
        Rational c = *niven_check(a1.N <= 3 ? r1 : r2);  // value of 2cos
        std::vector<Integer> lambda(3, Integer(0));
        lambda[0] = c.get_num();
        lambda[a1.N <= 3 ? 1 : 2] = -2 * c.get_den();
        if (lambda[0] == 0) lambda[a1.N <= 3 ? 1 : 2] = 1;
        auto canon = canonical_integer_vector({Rational(lambda[0]), Rational(lambda[1]), Rational(lambda[2])});
        v.relation = canon;
        std::shared_ptr<FieldContext> ctx;
        std::vector<ReducedAngle> as{a1, a2};
        auto xs = cos_family(as, ctx);
        verify_relation(xs, *v.relation, *ctx);
        return v;
    }

    if (a1.N == 5 && a2.N == 5) {
        std::array<Rational, 2> rs{r1, r2};
        Verdict dep = dependent_via_oracle(rs, Reason::FiveFivePair);
        if (dep.independent)
            throw verification_error("theorem2: (5,5) pair unexpectedly independent");
        return dep;
    }

    v.independent = true;
    v.reason = Reason::CriterionIndependent;
    return v;
}

std::optional<Verdict> theorem33_verdict(const Rational& r1, const Rational& r2, long d) {
    QuadField K(d);  // validates d
    ReducedAngle a1 = reduce_angle(r1), a2 = reduce_angle(r2);
    if (std::gcd(d, a1.N) != 1 || std::gcd(d, a2.N) != 1) return std::nullopt;
    // Under the coprimality hypothesis the criterion transfers verbatim.
    return theorem2_verdict(r1, r2);
}

Verdict oracle_Q(std::span<const Rational> rs) {
    if (rs.empty()) throw std::invalid_argument("oracle_Q: empty angle list");
    return dependent_via_oracle(rs, Reason::OracleRank);
}

QuadVerdict oracle_quadratic(const Rational& r1, const Rational& r2, long d) {
    QuadField K(d);
    ReducedAngle a1 = reduce_angle(r1), a2 = reduce_angle(r2);
    long m0 = lcm_long(2 * a1.N, 2 * a2.N);

    QuadVerdict qv;
    qv.d = d;
    qv.angles = {r1, r2};

    if (m0 % K.d_hat != 0) {
        // sqrt(d) is not in Q(zeta_m0): conjugating sqrt(d) -> -sqrt(d)
        // splits any Q(sqrt(d))-relation into two rational ones, so the
        // quadratic question degenerates to the rational one.
        std::array<Rational, 2> rs{r1, r2};
        Verdict v = dependent_via_oracle(rs, Reason::OracleRank);
        qv.independent = v.independent;
        if (!v.independent) {
            std::array<QuadCoeff, 3> rel;
            for (int i = 0; i < 3; ++i) rel[i] = QuadCoeff{Rational((*v.relation)[i]), Rational(0)};
            qv.relation = rel;
        }
        return qv;
    }

    auto ctx = field_context(m0);
    CycloElement one = ctx->one();
    CycloElement sq = ctx->embed_sqrt(d);
    CycloElement z1 = ctx->embed_cos(a1);
    CycloElement z2 = ctx->embed_cos(a2);
    std::vector<CycloElement> xs{one, sq, z1, ctx->mul(sq, z1), z2, ctx->mul(sq, z2)};
    auto rels = nullspace_over_Q(xs);
    qv.independent = rels.empty();
    if (!qv.independent) {
        const auto& mu = rels[0];
        CycloElement acc = ctx->zero();
        for (size_t i = 0; i < xs.size(); ++i)
            acc = ctx->add(acc, ctx->scale(Rational(mu[i]), xs[i]));
        if (!acc.is_zero())
            throw verification_error("oracle_quadratic: relation fails substitution");
        qv.relation = std::array<QuadCoeff, 3>{
            QuadCoeff{Rational(mu[0]), Rational(mu[1])},
            QuadCoeff{Rational(mu[2]), Rational(mu[3])},
            QuadCoeff{Rational(mu[4]), Rational(mu[5])},
        };
    }
    return qv;
}

bool moebius_cos_identity(long n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("moebius_cos_identity: n must be odd and >= 3");
    auto ctx = field_context(2 * n);
    CycloElement acc = ctx->zero();
    for (long j = 1; 2 * j < n; ++j) {
        if (std::gcd(j, n) != 1) continue;
        CycloElement c = ctx->embed_cos(ReducedAngle{j, n});
        acc = ctx->add(acc, ctx->scale(Rational(j % 2 ? -2 : 2), c));
    }
    bool ok = acc.is_rational() && acc.as_rational() == Rational(moebius(n));
    if (!ok)
        throw verification_error("moebius identity fails at n = " + std::to_string(n));
    return true;
}

bool five_shift_identity() {
    // s^-2 P_5(s z + t) with (s, t) = (-1, 1)
    RatPoly p5 = to_rational(cos_min_poly(5));
    RatPoly shifted = p5.compose(RatPoly{Rational(1), Rational(-1)});  // P_5(1 - z)
    return shifted == p5;
}

}  // namespace trignum
