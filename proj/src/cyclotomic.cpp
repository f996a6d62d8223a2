#include "trignum/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace trignum {

long totient(long n) {
    if (n < 1) throw std::invalid_argument("totient: n must be positive");
    long phi = n;
    for (auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

int moebius(long n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be positive");
    int mu = 1;
    for (auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

namespace {

std::mutex cyclo_mutex;
std::map<long, std::shared_ptr<const CyclotomicRecord>> cyclo_cache;

std::shared_ptr<const CyclotomicRecord> cyclotomic_locked(long n) {
    auto it = cyclo_cache.find(n);
    if (it != cyclo_cache.end()) return it->second;

    // z^n - 1 divided by the product of Phi_d over proper divisors d | n.
    IntPoly divisor_product = IntPoly::one();
    for (long d = 1; d <= n / 2; ++d) {
        if (n % d) continue;
        divisor_product = divisor_product * cyclotomic_locked(d)->poly;
    }
    std::vector<Integer> zn(n + 1, Integer(0));
    zn[0] = -1;
    zn[n] = 1;
    IntPoly phi_n = IntPoly::div_exact(IntPoly(std::move(zn)), divisor_product);

    auto rec = std::make_shared<CyclotomicRecord>(
        CyclotomicRecord{n, std::move(phi_n), totient(n), is_squarefree(n), moebius(n)});
    if (rec->poly.degree() != rec->phi || !rec->poly.is_monic())
        throw verification_error("cyclotomic(" + std::to_string(n) + "): degree or leading coefficient off");
    if (rec->phi >= 1 && rec->poly[rec->phi - 1] != -rec->mu)
        throw verification_error("cyclotomic(" + std::to_string(n) + "): a(1,n) != -mu(n)");
    cyclo_cache.emplace(n, rec);
    return rec;
}

}  // namespace

const CyclotomicRecord& cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    return *cyclotomic_locked(n);
}

Integer cyclo_coefficient(long n, long j) {
    if (j < 0) throw std::invalid_argument("cyclo_coefficient: j must be nonnegative");
    const auto& rec = cyclotomic(n);
    if (j > rec.phi) return 0;
    return rec.poly[static_cast<int>(rec.phi - j)];
}

const std::array<std::array<int, 3>, 8> kSquarefreeTriples = {{
    {1, 1, 1}, {1, 1, 0}, {1, 0, 0}, {1, 0, -1},
    {-1, 1, 0}, {-1, 1, -1}, {-1, 0, 1}, {-1, 0, 0},
}};

const std::array<std::array<int, 3>, 5> kNonSquarefreeTriples = {{
    {0, 1, 0}, {0, 0, 1}, {0, 0, 0}, {0, 0, -1}, {0, -1, 0},
}};

std::array<int, 3> leading_triple(long n) {
    const auto& rec = cyclotomic(n);
    if (cyclo_coefficient(n, 0) != 1)
        throw verification_error("leading_triple: a(0,n) != 1 at n = " + std::to_string(n));
    std::array<int, 3> t;
    for (long j = 1; j <= 3; ++j) {
        Integer c = cyclo_coefficient(n, j);
        if (c < -1 || c > 1)
            throw verification_error("leading_triple: |a(" + std::to_string(j) + "," +
                                     std::to_string(n) + ")| > 1");
        t[j - 1] = static_cast<int>(c.get_si());
    }
    bool listed = false;
    if (rec.squarefree) {
        for (auto& cand : kSquarefreeTriples) listed = listed || cand == t;
    } else {
        for (auto& cand : kNonSquarefreeTriples) listed = listed || cand == t;
    }
    if (!listed)
        throw verification_error("leading_triple: pattern violation at n = " + std::to_string(n));
    return t;
}

PhiAtIClass phi_at_i_class(long n) {
    if (n % 4) return PhiAtIClass::SixValueSet;
    if (n == 4) return PhiAtIClass::Zero;
    long q = n / 4;
    auto fac = factorize(q);
    if (fac.size() == 1) return PhiAtIClass::FourTimesPrimePower;
    return PhiAtIClass::One;
}

GaussianInt phi_at_i(long n) {
    GaussianInt v = eval_gaussian(cyclotomic(n).poly, GaussianInt(Integer(0), Integer(1)));
    switch (phi_at_i_class(n)) {
        case PhiAtIClass::SixValueSet: {
            static const GaussianInt allowed[] = {
                {Integer(-1), Integer(0)}, {Integer(-1), Integer(1)}, {Integer(0), Integer(-1)},
                {Integer(0), Integer(1)}, {Integer(1), Integer(0)},  {Integer(1), Integer(1)},
            };
            for (const auto& a : allowed)
                if (v == a) return v;
            throw verification_error("phi_at_i(" + std::to_string(n) + ") outside the six-value set");
        }
        case PhiAtIClass::Zero:
            if (!(v == GaussianInt(Integer(0), Integer(0))))
                throw verification_error("phi_at_i(4) != 0");
            return v;
        case PhiAtIClass::FourTimesPrimePower: {
            long p = factorize(n / 4)[0].first;
            if (!(v == GaussianInt(Integer(p), Integer(0))))
                throw verification_error("phi_at_i(" + std::to_string(n) + ") != " + std::to_string(p));
            return v;
        }
        case PhiAtIClass::One:
            if (!(v == GaussianInt(Integer(1), Integer(0))))
                throw verification_error("phi_at_i(" + std::to_string(n) + ") != 1");
            return v;
    }
    throw std::logic_error("phi_at_i: unreachable");
}

QuadField::QuadField(long d_) : d(d_) {
    if (d < 2) throw std::invalid_argument("QuadField: d must be >= 2");
    if (!is_squarefree(d)) throw std::invalid_argument("QuadField: d must be squarefree");
    d_hat = (d % 4 == 1) ? d : 4 * d;
}

bool irreducible_over_quadratic(long n, long d) {
    if (n < 1) throw std::invalid_argument("irreducible_over_quadratic: n must be positive");
    QuadField K(d);
    return n % K.d_hat != 0;
}

}  // namespace trignum
