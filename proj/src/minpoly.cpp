#include "trignum/minpoly.hpp"

#include <map>
#include <mutex>

namespace trignum {

ReducedAngle reduce_angle(const Rational& r) {
    Integer num = r.get_num();
    Integer den = r.get_den();  // already canonical, den > 0
    long N = den.get_si();
    Integer k = num % (2 * den);
    if (k < 0) k += 2 * den;
    return ReducedAngle{k.get_si(), N};
}

IntPoly chebyshev_like(int n) {
    if (n < 0) throw std::invalid_argument("chebyshev_like: n must be nonnegative");
    IntPoly prev{Integer(2)};        // R_0
    if (n == 0) return prev;
    IntPoly cur = IntPoly::variable();  // R_1
    for (int i = 2; i <= n; ++i) {
        IntPoly next = IntPoly::variable() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

std::mutex table_mutex;
std::map<long, IntPoly> p_cache;
std::map<long, IntPoly> q_cache;

// z^d * P(z + z^-1) expanded as a plain polynomial, d = deg P.
IntPoly symmetrize(const IntPoly& p) {
    int d = p.degree();
    IntPoly zz{Integer(1), Integer(0), Integer(1)};  // z^2 + 1
    IntPoly out;
    IntPoly zz_pow = IntPoly::one();
    for (int i = 0; i <= d; ++i) {
        if (p[i] != 0) out += p[i] * (zz_pow * IntPoly::monomial(d - i, Integer(1)));
        zz_pow = zz_pow * zz;
    }
    return out;
}

IntPoly build_cos_min_poly(long N) {
    if (N == 1) return IntPoly{Integer(2), Integer(1)};  // z + 2
    long d = totient(2 * N) / 2;
    IntPoly p;
    for (long j = 0; j < d; ++j)
        p += cyclo_coefficient(2 * N, j) * chebyshev_like(static_cast<int>(d - j));
    p += IntPoly{cyclo_coefficient(2 * N, d)};
    if (symmetrize(p) != cyclotomic(2 * N).poly)
        throw verification_error("cos_min_poly(" + std::to_string(N) +
                                 "): symmetrized polynomial does not reproduce the cyclotomic of " +
                                 std::to_string(2 * N));
    return p;
}

}  // namespace

const IntPoly& cos_min_poly(long N) {
    if (N < 1) throw std::invalid_argument("cos_min_poly: N must be positive");
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = p_cache.find(N);
    if (it == p_cache.end()) it = p_cache.emplace(N, build_cos_min_poly(N)).first;
    return it->second;
}

const IntPoly& sin_min_poly(long N) {
    if (N < 1) throw std::invalid_argument("sin_min_poly: N must be positive");
    {
        std::lock_guard<std::mutex> lock(table_mutex);
        auto it = q_cache.find(N);
        if (it != q_cache.end()) return it->second;
    }
    long target = (N % 2 == 1) ? 2 * N : (N % 4 == 0 ? N : N / 2);
    IntPoly q = cos_min_poly(target);
    std::lock_guard<std::mutex> lock(table_mutex);
    return q_cache.emplace(N, std::move(q)).first->second;
}

long degree_of_cos(long N) {
    if (N < 1) throw std::invalid_argument("degree_of_cos: N must be positive");
    return N == 1 ? 1 : totient(2 * N) / 2;
}

long degree_of_sin(long N) {
    if (N < 1) throw std::invalid_argument("degree_of_sin: N must be positive");
    if (N == 2) return 1;
    if (N % 4 == 2 && N >= 6) return totient(N) / 2;
    return totient(N);
}

MinPolyInfo canonical_cos(const ReducedAngle& angle) {
    MinPolyInfo info{TrigKind::Cos, angle, cos_min_poly(angle.N), degree_of_cos(angle.N),
                     1 + angle.k};
    if (info.poly.degree() != info.degree)
        throw verification_error("canonical_cos: degree table mismatch at N = " +
                                 std::to_string(angle.N));
    return info;
}

MinPolyInfo canonical_sin(const ReducedAngle& angle) {
    // k_r = 1 + N/4 |2r - 1| for N in 2+4Z (an integer there), else 0;
    // evaluated on the canonical representative, only the parity matters.
    long k_r = 0;
    if (angle.N % 4 == 2) k_r = 1 + std::abs(2 * angle.k - angle.N) / 4;
    MinPolyInfo info{TrigKind::Sin, angle, sin_min_poly(angle.N), degree_of_sin(angle.N), k_r};
    if (info.poly.degree() != info.degree)
        throw verification_error("canonical_sin: degree table mismatch at N = " +
                                 std::to_string(angle.N));
    return info;
}

}  // namespace trignum
