#ifndef TRIGNUM_NUMERIC_HPP
#define TRIGNUM_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trignum {

// Exact scalars. All integer arithmetic in this library is unbounded;
// coefficient growth in cyclotomic products and fraction-free pivots
// overflows machine words long before the interesting cases appear.
using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when a runtime self-check of a mathematical claim fails.
// These are loud by design: the library doubles as its own verifier.
class verification_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

// (a + b) reduced to canonical form; den must be nonzero.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

// Parses "k/N" or a bare integer "k". Exact; no floating point anywhere.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

// Trial-division factorization, ascending primes. Intended for the
// desk-scale arguments of this library (n well below 2^40).
std::vector<std::pair<long, int>> factorize(long n);

bool is_squarefree(long n);
long radical(long n);

// Kronecker symbol (top | bottom).
int kronecker_symbol(long top, long bottom);

// Smallest primitive root mod p^e (p odd prime).
long primitive_root(long prime_power);

// Generators of the unit group (Z/m)^*.
std::vector<long> unit_group_generators(long m);

long mod_pow(long base, long exp, long mod);

}  // namespace trignum

#endif
