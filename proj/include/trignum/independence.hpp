#ifndef TRIGNUM_INDEPENDENCE_HPP
#define TRIGNUM_INDEPENDENCE_HPP

#include "trignum/cyclofield.hpp"

namespace trignum {

enum class Reason {
    AngleSumOrDiffInteger,  // cos(pi r1) = +-cos(pi r2) forced
    SmallDenominator,       // some cos(pi r) is rational (N <= 3)
    FiveFivePair,           // the (5,5) relation
    CriterionIndependent,   // the two-condition criterion holds
    OracleRank,             // decided by exact rank
};

std::string reason_name(Reason r);

// Outcome of an independence question for {1, cos(pi r_1), ..., cos(pi r_k)}.
// Dependent verdicts always carry an exact relation vector lambda with
// lambda_0 * 1 + sum_j lambda_j cos(pi r_j) = 0, verified in the field.
struct Verdict {
    bool independent;
    Reason reason;
    std::vector<Rational> angles;
    std::optional<std::vector<Integer>> relation;
};

// The rational value of 2cos(pi r) when there is one (N(r) <= 3).
std::optional<Rational> niven_check(const Rational& r);

// Are 1, cos(pi r1), cos(pi r2) linearly independent over Q?
// Decided by the two-condition criterion; dependent relations are
// produced exactly and verified through the field oracle.
Verdict theorem2_verdict(const Rational& r1, const Rational& r2);

// The same question over Q(sqrt(d)). The criterion only speaks when
// gcd(d, N(r_j)) = 1 for both angles; otherwise nullopt (inapplicable)
// and oracle_quadratic is the authority.
std::optional<Verdict> theorem33_verdict(const Rational& r1, const Rational& r2, long d);

// Exact rank decision for {1, cos(pi r_1), ..., cos(pi r_k)} over Q.
Verdict oracle_Q(std::span<const Rational> rs);

// One coefficient a + b sqrt(d) of a quadratic-field relation.
struct QuadCoeff {
    Rational a, b;
    bool operator==(const QuadCoeff& o) const = default;
};

struct QuadVerdict {
    bool independent;
    long d;
    std::vector<Rational> angles;
    // lambda_0 * 1 + lambda_1 cos(pi r1) + lambda_2 cos(pi r2) = 0
    std::optional<std::array<QuadCoeff, 3>> relation;
};

// Rank decision for {1, cos(pi r1), cos(pi r2)} over Q(sqrt(d)), via the
// six-element family {1, sqrt(d), z1, sqrt(d) z1, z2, sqrt(d) z2} over Q.
QuadVerdict oracle_quadratic(const Rational& r1, const Rational& r2, long d);

// Checks 2 sum_{1<=j<n/2, gcd(j,n)=1} (-1)^j cos(pi j/n) = mu(n) exactly
// for odd n >= 3; a mismatch raises verification_error.
bool moebius_cos_identity(long n);

// The quadratic shift identity: s^-2 P_5(s z + t) = P_5 at (s,t) = (-1,1).
bool five_shift_identity();

}  // namespace trignum

#endif
