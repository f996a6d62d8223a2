#ifndef TRIGNUM_CYCLOFIELD_HPP
#define TRIGNUM_CYCLOFIELD_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "trignum/linalg.hpp"
#include "trignum/minpoly.hpp"

namespace trignum {

class conductor_mismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/* An element of Q(zeta_m) in the power basis mod the m-th cyclotomic
 * polynomial: (num[0] + num[1] zeta + ... + num[phi-1] zeta^(phi-1)) / den.
 * Canonical: den > 0 and gcd of den with the coefficient content is 1.
 * Immutable after construction.
 */
class CycloElement {
  public:
    CycloElement() : m_(1), num_(1, Integer(0)), den_(1) {}
    CycloElement(long m, std::vector<Integer> num, Integer den);

    long conductor() const { return m_; }
    const std::vector<Integer>& num() const { return num_; }
    const Integer& den() const { return den_; }

    Rational coeff(size_t i) const;
    bool is_zero() const;
    bool is_rational() const;
    Rational as_rational() const;  // requires is_rational()

    bool operator==(const CycloElement& o) const;
    bool operator!=(const CycloElement& o) const { return !(*this == o); }

  private:
    long m_;
    std::vector<Integer> num_;
    Integer den_;
};

/* Per-conductor workspace: the reduction modulus, a lazily grown table
 * of reduced zeta powers, and cached square-root embeddings. Thread-safe;
 * all returned values are copies.
 */
class FieldContext {
  public:
    explicit FieldContext(long m);
    FieldContext(const FieldContext&) = delete;

    long conductor() const { return m_; }
    long phi() const { return phi_; }

    CycloElement zero() const;
    CycloElement one() const;
    CycloElement from_rational(const Rational& q) const;
    CycloElement from_int_coeffs(std::vector<Integer> raw, Integer den) const;

    // zeta_m^e for any integer exponent e (taken mod m).
    CycloElement root_power(long e);

    CycloElement embed_cos(const ReducedAngle& a);  // needs 2N | m
    CycloElement embed_sin(const ReducedAngle& a);  // needs 4N | m

    // The positive square root of squarefree d >= 2; needs d_hat | m.
    // Built as a quadratic-character sum and verified by exact squaring.
    CycloElement embed_sqrt(long d);

    CycloElement add(const CycloElement& a, const CycloElement& b) const;
    CycloElement sub(const CycloElement& a, const CycloElement& b) const;
    CycloElement mul(const CycloElement& a, const CycloElement& b) const;
    CycloElement scale(const Rational& s, const CycloElement& a) const;
    CycloElement inv(const CycloElement& a) const;

    // The automorphism zeta -> zeta^a; a must be coprime to m.
    CycloElement galois(long a_exp, const CycloElement& x);

    CycloElement eval_poly(const IntPoly& p, const CycloElement& x) const;

  private:
    long m_, phi_;
    std::vector<Integer> modulus_;  // coefficients of the m-th cyclotomic polynomial
    std::mutex mutex_;
    std::vector<std::vector<Integer>> zeta_pow_;  // grown on demand
    std::map<long, CycloElement> sqrt_cache_;

    std::vector<Integer> reduce(std::vector<Integer> raw) const;
    const std::vector<Integer>& zeta_power_locked(long e);
    void check(const CycloElement& x) const;
};

// Shared registry of contexts, one per conductor.
std::shared_ptr<FieldContext> field_context(long m);

// ---- free-function surface (conductors taken from the elements) ----

CycloElement embed_root(long m, long k);
CycloElement embed_cos(const ReducedAngle& a, long m);
CycloElement embed_sin(const ReducedAngle& a, long m);
CycloElement embed_sqrt(long d, long m);
CycloElement field_add(const CycloElement& a, const CycloElement& b);
CycloElement field_sub(const CycloElement& a, const CycloElement& b);
CycloElement field_mul(const CycloElement& a, const CycloElement& b);
CycloElement field_inv(const CycloElement& a);
CycloElement galois(long a_exp, const CycloElement& x);

// Exact rank of the family over Q, and the canonical relation basis
// (coprime integers, positive first nonzero entry).
long rank_over_Q(std::span<const CycloElement> xs);
std::vector<std::vector<Integer>> nullspace_over_Q(std::span<const CycloElement> xs);

// Lowest-degree primitive integer polynomial annihilating x (monic when
// x is an algebraic integer), found as the first linear dependence among
// the powers of x.
IntPoly min_poly(const CycloElement& x);

// Degree of Q(x) over Q if it is at most `bound`, otherwise nullopt.
std::optional<long> bounded_degree(const CycloElement& x, long bound);

struct BiquadDescriptor {
    std::optional<long> d1, d2;  // d1 < d2 when both present

    bool operator==(const BiquadDescriptor& o) const { return d1 == o.d1 && d2 == o.d2; }
    std::string str() const;
};

// Whether x lies in a (possibly degenerate) biquadratic field, i.e. has
// degree 1, 2 or 4 and is fixed by every squared automorphism. When it
// does, the descriptor lists the two smallest d with sqrt(d) in Q(x).
std::optional<BiquadDescriptor> in_biquadratic(const CycloElement& x);

// Same decision for the ratio a/b without forming the quotient.
bool ratio_in_biquadratic(FieldContext& ctx, const CycloElement& a, const CycloElement& b);

// (a + b sqrt(d)) / c with gcd(a,b,c) = 1, c >= 1; d = 1 means rational.
struct RadicalExpr {
    Integer a, b;
    long d = 1;
    Integer c = 1;

    bool operator==(const RadicalExpr& o) const = default;
    std::string str() const;
};

RadicalExpr make_radical(Integer a, Integer b, long d, Integer c);

// Coordinates of an element of Q(sqrt(d1), sqrt(d2)) over the basis
// {1, sqrt(d1), sqrt(d2), sqrt(d3)}, d3 the squarefree part of d1*d2.
struct BiquadElem {
    Rational c0, c1, c2, c3;

    bool operator==(const BiquadElem& o) const = default;
    bool is_rational() const { return c1 == 0 && c2 == 0 && c3 == 0; }
};

struct BiquadPoly {
    BiquadDescriptor field;
    std::vector<BiquadElem> coeffs;  // ascending degree, monic in practice

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const BiquadPoly& o) const = default;
    std::string str(const std::string& var = "z") const;
};

// Irreducible factors of p over K, obtained by grouping the roots of p
// into orbits of the automorphisms fixing K pointwise and expanding each
// orbit product. p must split in Q(zeta_m). Factors are sorted
// canonically and multiply back to p exactly.
std::vector<BiquadPoly> factor_over_biquadratic(const IntPoly& p, const BiquadDescriptor& K,
                                                long m);

// Smallest conductors housing the respective values.
long cos_conductor(const ReducedAngle& a);
long sin_conductor(const ReducedAngle& a);
long sqrt_conductor(long d);

}  // namespace trignum

#endif
