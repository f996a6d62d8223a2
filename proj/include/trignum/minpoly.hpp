#ifndef TRIGNUM_MINPOLY_HPP
#define TRIGNUM_MINPOLY_HPP

#include "trignum/cyclotomic.hpp"

namespace trignum {

// A rational angle r = k/N in lowest terms, canonicalized to 0 <= k < 2N
// (cos(pi r) and sin(pi r) depend on r mod 2 only).
struct ReducedAngle {
    long k = 0;
    long N = 1;

    Rational value() const { return make_rational(k, N); }
    bool operator==(const ReducedAngle& o) const { return k == o.k && N == o.N; }
};

ReducedAngle reduce_angle(const Rational& r);

// R_n: the monic integer polynomial with z^n + z^-n = R_n(z + z^-1).
// R_0 = 2, R_1 = z, R_n = z R_{n-1} - R_{n-2}.
IntPoly chebyshev_like(int n);

// P_N, the minimal polynomial over Q of 2(-1)^(1+k) cos(pi k/N); built
// from the defining coefficient sum and checked symbolically against
// the cyclotomic polynomial of 2N before being cached.
const IntPoly& cos_min_poly(long N);

// Q_N, the minimal polynomial over Q of 2(-1)^(k_r) sin(pi r):
// P_{2N} for odd N, P_N for N in 4Z, P_{N/2} for N in 2+4Z.
const IntPoly& sin_min_poly(long N);

// Degree p_N of cos(pi k/N) over Q: 1 for N = 1, phi(2N)/2 otherwise.
long degree_of_cos(long N);

// Degree q_N of sin(pi k/N) over Q.
long degree_of_sin(long N);

enum class TrigKind { Cos, Sin };

struct MinPolyInfo {
    TrigKind kind;
    ReducedAngle angle;
    IntPoly poly;
    long degree;
    // Parity exponent s with 2(-1)^s cos(pi r) (resp. sin) a root of poly.
    long sign_exponent;
};

MinPolyInfo canonical_cos(const ReducedAngle& angle);
MinPolyInfo canonical_sin(const ReducedAngle& angle);

}  // namespace trignum

#endif
