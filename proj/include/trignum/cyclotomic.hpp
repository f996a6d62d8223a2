#ifndef TRIGNUM_CYCLOTOMIC_HPP
#define TRIGNUM_CYCLOTOMIC_HPP

#include <array>

#include "trignum/polynomial.hpp"

namespace trignum {

long totient(long n);
int moebius(long n);

struct CyclotomicRecord {
    long n;
    IntPoly poly;   // the n-th cyclotomic polynomial, monic, degree phi(n)
    long phi;
    bool squarefree;
    int mu;
};

// Memoized, thread-safe. Generated by exact division of z^n - 1 by the
// product of the records of all proper divisors of n.
const CyclotomicRecord& cyclotomic(long n);

// Coefficient a(j,n) in the reversed labelling: a(0,n) multiplies
// z^phi(n), and a(j,n) = 0 for j > phi(n).
Integer cyclo_coefficient(long n, long j);

// (a(1,n), a(2,n), a(3,n)), validated against the eight admissible
// triples for squarefree n and the five (leading zero) triples
// otherwise. A value outside the tables is a verification failure.
std::array<int, 3> leading_triple(long n);

extern const std::array<std::array<int, 3>, 8> kSquarefreeTriples;
extern const std::array<std::array<int, 3>, 5> kNonSquarefreeTriples;

enum class PhiAtIClass { SixValueSet, Zero, FourTimesPrimePower, One };

// The value of the n-th cyclotomic polynomial at i, checked against the
// closed case table: for 4 | n it is 0 (n = 4), p (n = 4p^j) or 1;
// otherwise one of the six units -1, -1+i, -i, i, 1, 1+i.
GaussianInt phi_at_i(long n);
PhiAtIClass phi_at_i_class(long n);

struct QuadField {
    long d;      // squarefree, >= 2
    long d_hat;  // discriminant: d if d = 1 mod 4, else 4d

    explicit QuadField(long d_);
};

// The n-th cyclotomic polynomial stays irreducible over Q(sqrt(d))
// exactly when the field discriminant does not divide n.
bool irreducible_over_quadratic(long n, long d);

}  // namespace trignum

#endif
