#include "trignum/numeric.hpp"

#include <cstdlib>

namespace trignum {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : text) {
        if (ch == '.' || ch == 'e' || ch == 'E')
            throw std::invalid_argument("angles and scalars are exact fractions, got: " + text);
    }
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& n) { return n.get_str(); }

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(long n) {
    if (n < 1) throw std::invalid_argument("is_squarefree: n must be positive");
    for (auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

long radical(long n) {
    long r = 1;
    for (auto& [p, e] : factorize(n)) r *= p;
    return r;
}

int kronecker_symbol(long top, long bottom) {
    return mpz_kronecker_si(Integer(top).get_mpz_t(), bottom);
}

long mod_pow(long base, long exp, long mod) {
    Integer r;
    mpz_powm(r.get_mpz_t(), Integer(base).get_mpz_t(), Integer(exp).get_mpz_t(),
             Integer(mod).get_mpz_t());
    return r.get_si();
}

long primitive_root(long q) {
    auto fac = factorize(q);
    if (fac.size() != 1 || fac[0].first == 2)
        throw std::invalid_argument("primitive_root: expected odd prime power");
    long p = fac[0].first;
    long phi = q / p * (p - 1);
    auto phi_primes = factorize(phi);
    for (long g = 2; g < q; ++g) {
        if (std::gcd(g, q) != 1) continue;
        bool ok = true;
        for (auto& [r, e] : phi_primes)
            if (mod_pow(g, phi / r, q) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

namespace {

// x ≡ g (mod q), x ≡ 1 (mod m/q); gcd(q, m/q) = 1.
long crt_lift(long g, long q, long m) {
    long rest = m / q;
    if (rest == 1) return ((g % m) + m) % m;
    Integer inv_rest_mod_q, inv_q_mod_rest;
    if (mpz_invert(inv_rest_mod_q.get_mpz_t(), Integer(rest).get_mpz_t(), Integer(q).get_mpz_t()) == 0 ||
        mpz_invert(inv_q_mod_rest.get_mpz_t(), Integer(q).get_mpz_t(), Integer(rest).get_mpz_t()) == 0)
        throw std::logic_error("crt_lift: moduli not coprime");
    Integer v = (Integer(g) * rest * inv_rest_mod_q + Integer(q) * inv_q_mod_rest) % m;
    v = ((v % m) + m) % m;
    return v.get_si();
}

}  // namespace

std::vector<long> unit_group_generators(long m) {
    if (m < 1) throw std::invalid_argument("unit_group_generators: m must be positive");
    if (m <= 2) return {};
    // Local generators per prime power, lifted by CRT (g at one factor, 1 elsewhere).
    std::vector<long> gens;
    for (auto& [p, e] : factorize(m)) {
        long q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        if (p == 2) {
            if (e == 1) continue;
            if (e == 2) {
                gens.push_back(crt_lift(3, q, m));
            } else {
                gens.push_back(crt_lift(q - 1, q, m));  // -1
                gens.push_back(crt_lift(3, q, m));
            }
        } else {
            gens.push_back(crt_lift(primitive_root(q), q, m));
        }
    }
    return gens;
}

}  // namespace trignum
