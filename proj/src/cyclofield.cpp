#include "trignum/cyclofield.hpp"

#include <algorithm>

namespace trignum {

// ---------------------------------------------------------------- element

CycloElement::CycloElement(long m, std::vector<Integer> num, Integer den)
    : m_(m), num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("CycloElement: zero denominator");
    if (num_.size() != static_cast<size_t>(totient(m)))
        throw std::invalid_argument("CycloElement: coefficient vector length != phi(m)");
    if (den_ < 0) {
        den_ = -den_;
        for (auto& x : num_) x = -x;
    }
    Integer g = den_;
    for (const auto& x : num_) g = int_gcd(g, x);
    if (g > 1) {
        Integer q;
        for (auto& x : num_) {
            mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            x = q;
        }
        mpz_divexact(q.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        den_ = q;
    }
    bool zero = true;
    for (const auto& x : num_)
        if (x != 0) { zero = false; break; }
    if (zero) den_ = 1;
}

Rational CycloElement::coeff(size_t i) const {
    if (i >= num_.size()) return Rational(0);
    return make_rational(num_[i], den_);
}

bool CycloElement::is_zero() const {
    for (const auto& x : num_)
        if (x != 0) return false;
    return true;
}

bool CycloElement::is_rational() const {
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

Rational CycloElement::as_rational() const {
    if (!is_rational()) throw std::invalid_argument("as_rational: element not rational");
    return make_rational(num_[0], den_);
}

bool CycloElement::operator==(const CycloElement& o) const {
    if (m_ != o.m_) throw conductor_mismatch("comparing elements of different conductors");
    return den_ == o.den_ && num_ == o.num_;
}

// ---------------------------------------------------------------- context

FieldContext::FieldContext(long m) : m_(m) {
    if (m < 1) throw std::invalid_argument("FieldContext: conductor must be positive");
    const auto& rec = cyclotomic(m);
    phi_ = rec.phi;
    modulus_ = rec.poly.coeffs();
    zeta_pow_.push_back([&] {
        std::vector<Integer> one(phi_, Integer(0));
        one[0] = 1;
        return one;
    }());
}

std::vector<Integer> FieldContext::reduce(std::vector<Integer> raw) const {
    // Synthetic division by the monic modulus.
    for (size_t i = raw.size(); i-- > static_cast<size_t>(phi_);) {
        Integer f = std::move(raw[i]);
        if (f == 0) continue;
        for (long j = 0; j < phi_; ++j) raw[i - phi_ + j] -= f * modulus_[j];
    }
    raw.resize(phi_, Integer(0));
    return raw;
}

const std::vector<Integer>& FieldContext::zeta_power_locked(long e) {
    while (static_cast<long>(zeta_pow_.size()) <= e) {
        const auto& prev = zeta_pow_.back();
        std::vector<Integer> next(phi_, Integer(0));
        for (long j = 1; j < phi_; ++j) next[j] = prev[j - 1];
        const Integer& top = prev[phi_ - 1];
        if (top != 0)
            for (long j = 0; j < phi_; ++j) next[j] -= top * modulus_[j];
        zeta_pow_.push_back(std::move(next));
    }
    return zeta_pow_[e];
}

CycloElement FieldContext::zero() const {
    return CycloElement(m_, std::vector<Integer>(phi_, Integer(0)), Integer(1));
}

CycloElement FieldContext::one() const { return from_rational(Rational(1)); }

CycloElement FieldContext::from_rational(const Rational& q) const {
    std::vector<Integer> num(phi_, Integer(0));
    num[0] = q.get_num();
    return CycloElement(m_, std::move(num), Integer(q.get_den()));
}

CycloElement FieldContext::from_int_coeffs(std::vector<Integer> raw, Integer den) const {
    return CycloElement(m_, reduce(std::move(raw)), std::move(den));
}

CycloElement FieldContext::root_power(long e) {
    e %= m_;
    if (e < 0) e += m_;
    std::lock_guard<std::mutex> lock(mutex_);
    return CycloElement(m_, zeta_power_locked(e), Integer(1));
}

CycloElement FieldContext::embed_cos(const ReducedAngle& a) {
    if (m_ % (2 * a.N) != 0)
        throw conductor_mismatch("embed_cos: conductor " + std::to_string(m_) +
                                 " lacks 2N = " + std::to_string(2 * a.N));
    long e = a.k % (2 * a.N) * (m_ / (2 * a.N)) % m_;
    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<Integer> num = zeta_power_locked(e);
    const auto& conj = zeta_power_locked((m_ - e) % m_);
    for (long j = 0; j < phi_; ++j) num[j] += conj[j];
    return CycloElement(m_, std::move(num), Integer(2));
}

CycloElement FieldContext::embed_sin(const ReducedAngle& a) {
    if (m_ % (4 * a.N) != 0)
        throw conductor_mismatch("embed_sin: conductor " + std::to_string(m_) +
                                 " lacks 4N = " + std::to_string(4 * a.N));
    // sin(pi k/N) = cos(pi (N - 2k) / (2N))
    return embed_cos(reduce_angle(make_rational(a.N - 2 * a.k, 2 * a.N)));
}

CycloElement FieldContext::embed_sqrt(long d) {
    QuadField K(d);
    if (m_ % K.d_hat != 0)
        throw conductor_mismatch("embed_sqrt: conductor " + std::to_string(m_) +
                                 " lacks the discriminant " + std::to_string(K.d_hat));
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = sqrt_cache_.find(d);
        if (it != sqrt_cache_.end()) return it->second;
    }
    const long D = K.d_hat;
    const long step = m_ / D;
    std::vector<Integer> num(phi_, Integer(0));
    {
        std::lock_guard<std::mutex> lock(mutex_);
        for (long a = 1; a < D; ++a) {
            if (std::gcd(a, D) != 1) continue;
            int chi = kronecker_symbol(D, a);
            if (chi == 0) continue;
            const auto& pw = zeta_power_locked(a * step % m_);
            if (chi > 0)
                for (long j = 0; j < phi_; ++j) num[j] += pw[j];
            else
                for (long j = 0; j < phi_; ++j) num[j] -= pw[j];
        }
    }
    // The character sum equals sqrt(D); halve it when D = 4d.
    CycloElement root(m_, std::move(num), Integer(D == d ? 1 : 2));
    if (!(mul(root, root) == from_rational(Rational(d))))
        throw verification_error("embed_sqrt(" + std::to_string(d) + "): square check failed");
    std::lock_guard<std::mutex> lock(mutex_);
    return sqrt_cache_.emplace(d, std::move(root)).first->second;
}

void FieldContext::check(const CycloElement& x) const {
    if (x.conductor() != m_)
        throw conductor_mismatch("element conductor " + std::to_string(x.conductor()) +
                                 " does not match context " + std::to_string(m_));
}

CycloElement FieldContext::add(const CycloElement& a, const CycloElement& b) const {
    check(a);
    check(b);
    Integer den = int_lcm(a.den(), b.den());
    Integer sa = den / a.den(), sb = den / b.den();
    std::vector<Integer> num(phi_);
    for (long j = 0; j < phi_; ++j) num[j] = a.num()[j] * sa + b.num()[j] * sb;
    return CycloElement(m_, std::move(num), std::move(den));
}

CycloElement FieldContext::sub(const CycloElement& a, const CycloElement& b) const {
    return add(a, scale(Rational(-1), b));
}

CycloElement FieldContext::mul(const CycloElement& a, const CycloElement& b) const {
    check(a);
    check(b);
    std::vector<Integer> raw(2 * phi_ - 1, Integer(0));
    for (long i = 0; i < phi_; ++i) {
        if (a.num()[i] == 0) continue;
        for (long j = 0; j < phi_; ++j) {
            if (b.num()[j] == 0) continue;
            raw[i + j] += a.num()[i] * b.num()[j];
        }
    }
    return CycloElement(m_, reduce(std::move(raw)), Integer(a.den() * b.den()));
}

CycloElement FieldContext::scale(const Rational& s, const CycloElement& a) const {
    check(a);
    std::vector<Integer> num(phi_);
    for (long j = 0; j < phi_; ++j) num[j] = a.num()[j] * s.get_num();
    return CycloElement(m_, std::move(num), Integer(a.den() * s.get_den()));
}

namespace {

// Extended Euclid over Q[z]: returns u with u * a = 1 mod b (b monic,
// gcd(a, b) = 1 as polynomials).
RatPoly invert_mod(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = b, r1 = a;
    RatPoly s0, s1 = RatPoly::one();
    while (!r1.is_zero()) {
        Rational lead = r1.leading();
        RatPoly r1m = make_rational(lead.get_den(), lead.get_num()) * r1;
        auto [q, r] = RatPoly::divmod(r0, r1m);
        q = make_rational(lead.get_den(), lead.get_num()) * q;
        RatPoly r2 = r0 - q * r1;
        RatPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0)
        throw std::invalid_argument("invert_mod: element is a zero divisor");
    return make_rational(r0[0].get_den(), r0[0].get_num()) * s0;
}

}  // namespace

CycloElement FieldContext::inv(const CycloElement& a) const {
    check(a);
    if (a.is_zero()) throw std::invalid_argument("field_inv: zero element");
    std::vector<Rational> ac;
    ac.reserve(phi_);
    for (long j = 0; j < phi_; ++j) ac.emplace_back(a.num()[j]);
    RatPoly apoly{std::move(ac)};
    std::vector<Rational> mc;
    mc.reserve(phi_ + 1);
    for (const auto& c : modulus_) mc.emplace_back(c);
    RatPoly u = invert_mod(apoly, RatPoly(std::move(mc)));
    // a/den inverse = den * u
    Integer common(1);
    for (const auto& c : u.coeffs()) common = int_lcm(common, Integer(c.get_den()));
    std::vector<Integer> num(phi_, Integer(0));
    for (int j = 0; j <= u.degree(); ++j) {
        Rational c = u[j];
        num[j] = c.get_num() * (common / c.get_den());
    }
    for (auto& x : num) x *= a.den();
    return CycloElement(m_, std::move(num), std::move(common));
}

CycloElement FieldContext::galois(long a_exp, const CycloElement& x) {
    check(x);
    long a = a_exp % m_;
    if (a < 0) a += m_;
    if (std::gcd(a, m_) != 1)
        throw std::invalid_argument("galois: exponent " + std::to_string(a_exp) +
                                    " not coprime to " + std::to_string(m_));
    std::vector<Integer> num(phi_, Integer(0));
    std::lock_guard<std::mutex> lock(mutex_);
    for (long i = 0; i < phi_; ++i) {
        if (x.num()[i] == 0) continue;
        const auto& pw = zeta_power_locked(a * i % m_);
        for (long j = 0; j < phi_; ++j) num[j] += x.num()[i] * pw[j];
    }
    return CycloElement(m_, std::move(num), x.den());
}

CycloElement FieldContext::eval_poly(const IntPoly& p, const CycloElement& x) const {
    CycloElement acc = zero();
    for (int i = p.degree(); i >= 0; --i)
        acc = add(mul(acc, x), from_rational(Rational(p[i])));
    return acc;
}

// ---------------------------------------------------------------- registry

std::shared_ptr<FieldContext> field_context(long m) {
    static std::mutex reg_mutex;
    static std::map<long, std::weak_ptr<FieldContext>> registry;
    std::lock_guard<std::mutex> lock(reg_mutex);
    auto& slot = registry[m];
    if (auto ctx = slot.lock()) return ctx;
    auto ctx = std::make_shared<FieldContext>(m);
    slot = ctx;
    return ctx;
}

CycloElement embed_root(long m, long k) { return field_context(m)->root_power(k); }
CycloElement embed_cos(const ReducedAngle& a, long m) { return field_context(m)->embed_cos(a); }
CycloElement embed_sin(const ReducedAngle& a, long m) { return field_context(m)->embed_sin(a); }
CycloElement embed_sqrt(long d, long m) { return field_context(m)->embed_sqrt(d); }

CycloElement field_add(const CycloElement& a, const CycloElement& b) {
    return field_context(a.conductor())->add(a, b);
}
CycloElement field_sub(const CycloElement& a, const CycloElement& b) {
    return field_context(a.conductor())->sub(a, b);
}
CycloElement field_mul(const CycloElement& a, const CycloElement& b) {
    return field_context(a.conductor())->mul(a, b);
}
CycloElement field_inv(const CycloElement& a) { return field_context(a.conductor())->inv(a); }
CycloElement galois(long a_exp, const CycloElement& x) {
    return field_context(x.conductor())->galois(a_exp, x);
}

// ------------------------------------------------------------- rank, minpoly

namespace {

long common_conductor(std::span<const CycloElement> xs) {
    if (xs.empty()) throw std::invalid_argument("empty element family");
    long m = xs.front().conductor();
    for (const auto& x : xs)
        if (x.conductor() != m) throw conductor_mismatch("family spans several conductors");
    return m;
}

std::vector<std::vector<Integer>> columns_of(std::span<const CycloElement> xs) {
    std::vector<std::vector<Integer>> cols;
    cols.reserve(xs.size());
    for (const auto& x : xs) cols.push_back(x.num());
    return cols;
}

// Relation weights on the actual elements: scale the integer-vector
// relation by each element's denominator, then re-canonicalize.
std::vector<std::vector<Integer>> relation_weights(std::span<const CycloElement> xs,
                                                   const std::vector<std::vector<Integer>>& null_mu) {
    std::vector<std::vector<Integer>> out;
    out.reserve(null_mu.size());
    for (const auto& mu : null_mu) {
        std::vector<Rational> lam(mu.size());
        for (size_t i = 0; i < mu.size(); ++i) lam[i] = Rational(mu[i] * xs[i].den());
        out.push_back(canonical_integer_vector(lam));
    }
    return out;
}

}  // namespace

long rank_over_Q(std::span<const CycloElement> xs) {
    common_conductor(xs);
    return rank_of(columns_of(xs));
}

std::vector<std::vector<Integer>> nullspace_over_Q(std::span<const CycloElement> xs) {
    common_conductor(xs);
    return relation_weights(xs, rank_nullspace(columns_of(xs)).nullspace);
}

namespace {

IntPoly relation_to_poly(std::span<const CycloElement> powers,
                         const std::vector<std::vector<Integer>>& nullspace) {
    if (nullspace.size() != 1)
        throw std::logic_error("min_poly: first dependence is not one-dimensional");
    auto lam = relation_weights(powers, nullspace)[0];
    std::vector<Integer> coeffs(lam.begin(), lam.end());
    IntPoly p{std::move(coeffs)};
    if (p.leading() < 0) p = -p;
    return primitive_part(p);
}

}  // namespace

IntPoly min_poly(const CycloElement& x) {
    auto ctx = field_context(x.conductor());
    std::vector<CycloElement> powers{ctx->one()};
    std::vector<std::vector<Integer>> cols{powers[0].num()};
    for (long t = 1; t <= ctx->phi(); ++t) {
        powers.push_back(ctx->mul(powers.back(), x));
        cols.push_back(powers.back().num());
        auto rn = rank_nullspace(cols);
        if (rn.rank <= t) return relation_to_poly(powers, rn.nullspace);
    }
    throw verification_error("min_poly: no dependence up to phi(m) — impossible");
}

std::optional<long> bounded_degree(const CycloElement& x, long bound) {
    auto ctx = field_context(x.conductor());
    std::vector<CycloElement> powers{ctx->one()};
    std::vector<std::vector<Integer>> cols{powers[0].num()};
    for (long t = 1; t <= std::min(bound, ctx->phi()); ++t) {
        powers.push_back(ctx->mul(powers.back(), x));
        cols.push_back(powers.back().num());
        if (rank_of(cols) <= t) return t;
    }
    return std::nullopt;
}

// ---------------------------------------------------------- biquadratic

std::string BiquadDescriptor::str() const {
    if (!d1) return "Q";
    std::string s = "Q(sqrt(" + std::to_string(*d1) + ")";
    if (d2) s += ", sqrt(" + std::to_string(*d2) + ")";
    return s + ")";
}

namespace {

void validate_descriptor(const BiquadDescriptor& K) {
    if (!K.d1 && K.d2) throw std::invalid_argument("descriptor: d2 without d1");
    if (K.d1) QuadField probe(*K.d1);
    if (K.d2) {
        QuadField probe(*K.d2);
        if (*K.d2 <= *K.d1) throw std::invalid_argument("descriptor: need d1 < d2");
    }
}

// Squarefree d >= 2 whose quadratic field lives inside Q(zeta_m).
std::vector<long> candidate_radicands(long m) {
    std::vector<long> out;
    for (long d = 2; d <= m; ++d) {
        if (!is_squarefree(d)) continue;
        long d_hat = (d % 4 == 1) ? d : 4 * d;
        if (m % d_hat == 0) out.push_back(d);
    }
    return out;
}

std::vector<long> units_mod(long m) {
    std::vector<long> out;
    for (long a = 1; a < m; ++a)
        if (std::gcd(a, m) == 1) out.push_back(a);
    if (m == 1) out.push_back(0);  // the trivial group
    return out;
}

}  // namespace

std::optional<BiquadDescriptor> in_biquadratic(const CycloElement& x) {
    auto ctx = field_context(x.conductor());
    const long m = ctx->conductor();

    auto deg = bounded_degree(x, 4);
    if (!deg || (*deg != 1 && *deg != 2 && *deg != 4)) return std::nullopt;
    for (long g : unit_group_generators(m))
        if (!(ctx->galois(g * g % m, x) == x)) return std::nullopt;

    if (*deg == 1) return BiquadDescriptor{};

    // Q(x) is the fixed field of the stabilizer; sqrt(d) lies in it iff
    // the quadratic character of d is trivial on every stabilizing a.
    std::vector<long> stab;
    for (long a : units_mod(m))
        if (ctx->galois(a, x) == x) stab.push_back(a);

    std::vector<long> ds;
    for (long d : candidate_radicands(m)) {
        long D = (d % 4 == 1) ? d : 4 * d;
        bool fixed = true;
        for (long a : stab)
            if (kronecker_symbol(D, a) != 1) { fixed = false; break; }
        if (fixed) ds.push_back(d);
    }
    if (*deg == 2) {
        if (ds.size() != 1)
            throw verification_error("in_biquadratic: quadratic element with " +
                                     std::to_string(ds.size()) + " radicands");
        return BiquadDescriptor{ds[0], std::nullopt};
    }
    if (ds.size() != 3)
        throw verification_error("in_biquadratic: quartic element with " +
                                 std::to_string(ds.size()) + " radicands");
    return BiquadDescriptor{ds[0], ds[1]};
}

bool ratio_in_biquadratic(FieldContext& ctx, const CycloElement& a, const CycloElement& b) {
    if (b.is_zero()) throw std::invalid_argument("ratio_in_biquadratic: zero denominator");
    const long m = ctx.conductor();

    // Degree of a/b over Q, tested without division: the first t with
    // {a^i b^(t-i)} dependent equals the degree of the ratio.
    std::vector<CycloElement> pa{ctx.one()}, pb{ctx.one()};
    long deg = 0;
    for (long t = 1; t <= 4; ++t) {
        pa.push_back(ctx.mul(pa.back(), a));
        pb.push_back(ctx.mul(pb.back(), b));
        std::vector<std::vector<Integer>> cols;
        for (long i = 0; i <= t; ++i) cols.push_back(ctx.mul(pa[i], pb[t - i]).num());
        if (rank_of(cols) <= t) { deg = t; break; }
    }
    if (deg != 1 && deg != 2 && deg != 4) return false;

    for (long g : unit_group_generators(m)) {
        long s = g * g % m;
        if (!(ctx.mul(ctx.galois(s, a), b) == ctx.mul(ctx.galois(s, b), a))) return false;
    }
    return true;
}

// ---------------------------------------------------------- factorization

std::string RadicalExpr::str() const {
    std::string s;
    if (a != 0 || b == 0) s += a.get_str();
    if (b != 0) {
        if (b > 0 && !s.empty()) s += "+";
        if (b == -1)
            s += "-";
        else if (b != 1)
            s += b.get_str() + "*";
        s += "sqrt(" + std::to_string(d) + ")";
    }
    if (c != 1) s = "(" + s + ")/" + c.get_str();
    return s;
}

RadicalExpr make_radical(Integer a, Integer b, long d, Integer c) {
    if (c == 0) throw std::invalid_argument("RadicalExpr: zero denominator");
    if (d < 1 || !is_squarefree(d)) throw std::invalid_argument("RadicalExpr: d must be squarefree");
    if (d == 1) {
        a += b;  // sqrt(1) folds into the rational part
        b = 0;
    }
    if (b == 0) d = 1;
    if (c < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    Integer g = int_gcd(int_gcd(a, b), c);
    if (g > 1) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        a = q;
        mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
        b = q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        c = q;
    }
    return RadicalExpr{std::move(a), std::move(b), d, std::move(c)};
}

std::string BiquadPoly::str(const std::string& var) const {
    // Flattened rendering: every nonzero part of every coefficient is
    // printed as its own monomial, grouped by descending degree.
    if (coeffs.empty()) return "0";
    long d1 = field.d1.value_or(1);
    long d2 = field.d2.value_or(1);
    long g = std::gcd(d1, d2);
    long d3 = field.d2 ? d1 / g * (d2 / g) : 1;
    std::string out;
    auto append = [&](const Rational& q, long d, int i) {
        if (q == 0) return;
        bool neg = q < 0;
        Rational mag = neg ? Rational(-q) : q;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string body;
        bool unit = (mag == 1);
        if (!unit || (d == 1 && i == 0)) body += to_string(mag);
        if (d != 1) {
            if (!body.empty()) body += "*";
            body += "sqrt(" + std::to_string(d) + ")";
        }
        if (i > 0) {
            if (!body.empty()) body += "*";
            body += var;
            if (i > 1) body += "^" + std::to_string(i);
        }
        if (body.empty()) body = to_string(mag);
        out += body;
    };
    for (int i = degree(); i >= 0; --i) {
        const BiquadElem& c = coeffs[i];
        append(c.c0, 1, i);
        append(c.c1, d1, i);
        append(c.c2, d2, i);
        append(c.c3, d3, i);
    }
    return out.empty() ? "0" : out;
}

namespace {

// The part of {1, sqrt(d1), sqrt(d2), sqrt(d3)} that exists inside the
// working conductor. Orbit coefficients always land in that part.
struct FactorBasis {
    std::vector<CycloElement> elems;
    std::vector<int> slots;  // position of each element in (c0, c1, c2, c3)
};

FactorBasis field_basis(FieldContext& ctx, const BiquadDescriptor& K) {
    FactorBasis basis;
    basis.elems.push_back(ctx.one());
    basis.slots.push_back(0);
    auto add_sqrt = [&](long d, int slot) {
        if (ctx.conductor() % QuadField(d).d_hat) return;
        basis.elems.push_back(ctx.embed_sqrt(d));
        basis.slots.push_back(slot);
    };
    if (K.d1) add_sqrt(*K.d1, 1);
    if (K.d2) {
        add_sqrt(*K.d2, 2);
        long g = std::gcd(*K.d1, *K.d2);
        add_sqrt(*K.d1 / g * (*K.d2 / g), 3);
    }
    return basis;
}

std::optional<BiquadElem> express_in_basis(const CycloElement& x, const FactorBasis& basis) {
    std::vector<CycloElement> family = basis.elems;
    family.push_back(x);
    auto rn = rank_nullspace(columns_of(family));
    if (rn.rank == static_cast<long>(family.size())) return std::nullopt;
    auto lam = relation_weights(family, rn.nullspace).at(0);
    const Integer& lx = lam.back();
    if (lx == 0) throw verification_error("express_in_basis: degenerate basis");
    BiquadElem e;
    for (size_t i = 0; i + 1 < lam.size(); ++i) {
        Rational c = make_rational(-lam[i], lx);
        switch (basis.slots[i]) {
            case 0: e.c0 = c; break;
            case 1: e.c1 = c; break;
            case 2: e.c2 = c; break;
            case 3: e.c3 = c; break;
        }
    }
    return e;
}

bool biquad_elem_less(const BiquadElem& a, const BiquadElem& b) {
    if (a.c0 != b.c0) return a.c0 < b.c0;
    if (a.c1 != b.c1) return a.c1 < b.c1;
    if (a.c2 != b.c2) return a.c2 < b.c2;
    return a.c3 < b.c3;
}

bool biquad_poly_less(const BiquadPoly& a, const BiquadPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeffs[i] != b.coeffs[i]) return biquad_elem_less(a.coeffs[i], b.coeffs[i]);
    }
    return false;
}

// All elements 2cos(pi j/M) available in Q(zeta_m).
std::vector<CycloElement> trigonometric_candidates(FieldContext& ctx) {
    std::vector<CycloElement> out;
    const long m = ctx.conductor();
    for (long M = 1; 2 * M <= m; ++M) {
        if (m % (2 * M)) continue;
        for (long j = 0; j <= M; ++j) {
            if (std::gcd(j, M) != 1) continue;
            out.push_back(ctx.scale(Rational(2), ctx.embed_cos(ReducedAngle{j, M})));
        }
    }
    return out;
}

}  // namespace

std::vector<BiquadPoly> factor_over_biquadratic(const IntPoly& p, const BiquadDescriptor& K,
                                                long m) {
    validate_descriptor(K);
    if (p.degree() < 1 || !p.is_monic())
        throw std::invalid_argument("factor_over_biquadratic: need a monic nonconstant polynomial");
    if (K.d1 && m % QuadField(*K.d1).d_hat)
        throw conductor_mismatch("factor_over_biquadratic: conductor lacks d1's discriminant");
    if (K.d2 && m % QuadField(*K.d2).d_hat)
        throw conductor_mismatch("factor_over_biquadratic: conductor lacks d2's discriminant");

    // Root discovery. Cyclotomic inputs keep their natural conductor n;
    // everything else is searched among the trigonometric elements.
    long work_m = m;
    std::vector<CycloElement> roots;
    for (long n = 1; n <= m; ++n) {
        if (m % n) continue;
        if (totient(n) != p.degree()) continue;
        if (cyclotomic(n).poly == p) {
            work_m = n;
            auto ctx = field_context(n);
            for (long j = 1; j <= n; ++j)
                if (std::gcd(j, n) == 1) roots.push_back(ctx->root_power(j));
            break;
        }
    }
    auto ctx = field_context(work_m);
    if (roots.empty()) {
        for (auto& cand : trigonometric_candidates(*ctx))
            if (ctx->eval_poly(p, cand).is_zero()) roots.push_back(cand);
        if (static_cast<int>(roots.size()) != p.degree())
            throw std::invalid_argument("factor_over_biquadratic: polynomial does not split in the field (" +
                                        std::to_string(roots.size()) + " of " +
                                        std::to_string(p.degree()) + " roots found)");
    }

    // Automorphisms of Q(zeta_work_m) extending automorphisms of
    // Q(zeta_m) that fix K pointwise: project the character kernel.
    long D1 = K.d1 ? QuadField(*K.d1).d_hat : 1;
    long D2 = K.d2 ? QuadField(*K.d2).d_hat : 1;
    std::vector<char> in_subgroup(work_m, 0);
    for (long a = 1; a <= m; ++a) {
        if (std::gcd(a, m) != 1) continue;
        if (D1 > 1 && kronecker_symbol(D1, a) != 1) continue;
        if (D2 > 1 && kronecker_symbol(D2, a) != 1) continue;
        in_subgroup[a % work_m] = 1;
    }
    std::vector<long> subgroup;
    for (long a = 1; a < work_m; ++a)
        if (in_subgroup[a]) subgroup.push_back(a);
    if (work_m == 1) subgroup.push_back(1);

    // Every automorphism available: single orbit, p itself irreducible.
    if (static_cast<long>(subgroup.size()) == ctx->phi()) {
        BiquadPoly only{K, {}};
        for (const auto& c : p.coeffs()) only.coeffs.push_back(BiquadElem{Rational(c), 0, 0, 0});
        return {only};
    }

    // Orbit decomposition and expansion.
    auto find_root = [&](const CycloElement& x) -> size_t {
        for (size_t i = 0; i < roots.size(); ++i)
            if (roots[i] == x) return i;
        throw verification_error("factor_over_biquadratic: automorphism left the root set");
    };
    FactorBasis basis = field_basis(*ctx, K);
    std::vector<char> used(roots.size(), 0);
    std::vector<BiquadPoly> factors;
    std::vector<std::vector<CycloElement>> factor_field_coeffs;
    for (size_t start = 0; start < roots.size(); ++start) {
        if (used[start]) continue;
        std::vector<size_t> orbit;
        for (long a : subgroup) {
            size_t idx = find_root(ctx->galois(a, roots[start]));
            if (!used[idx]) {
                used[idx] = 1;
                orbit.push_back(idx);
            }
        }
        std::vector<CycloElement> coeffs{ctx->one()};
        for (size_t idx : orbit) {
            coeffs.push_back(ctx->one());
            for (size_t k = coeffs.size() - 1; k-- > 0;) {
                CycloElement t = ctx->mul(roots[idx], coeffs[k]);
                coeffs[k] = (k == 0) ? ctx->scale(Rational(-1), t)
                                     : ctx->sub(coeffs[k - 1], t);
            }
        }
        BiquadPoly factor{K, {}};
        for (const auto& c : coeffs) {
            auto expr = express_in_basis(c, basis);
            if (!expr)
                throw verification_error("factor_over_biquadratic: orbit coefficient outside K");
            factor.coeffs.push_back(*expr);
        }
        factors.push_back(std::move(factor));
        factor_field_coeffs.push_back(std::move(coeffs));
    }

    // The factors must multiply back to p exactly.
    std::vector<CycloElement> prod{ctx->one()};
    for (const auto& fc : factor_field_coeffs) {
        std::vector<CycloElement> next(prod.size() + fc.size() - 1, ctx->zero());
        for (size_t i = 0; i < prod.size(); ++i)
            for (size_t j = 0; j < fc.size(); ++j)
                next[i + j] = ctx->add(next[i + j], ctx->mul(prod[i], fc[j]));
        prod = std::move(next);
    }
    bool ok = static_cast<int>(prod.size()) == p.degree() + 1;
    for (int i = 0; ok && i <= p.degree(); ++i)
        ok = prod[i] == ctx->from_rational(Rational(p[i]));
    if (!ok) throw verification_error("factor_over_biquadratic: factor product differs from input");

    std::sort(factors.begin(), factors.end(), biquad_poly_less);
    return factors;
}

long cos_conductor(const ReducedAngle& a) { return 2 * a.N; }
long sin_conductor(const ReducedAngle& a) { return 4 * a.N; }
long sqrt_conductor(long d) { return QuadField(d).d_hat; }

}  // namespace trignum
