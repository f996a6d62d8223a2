#ifndef TRIGNUM_TEST_ORACLE_HELPERS_HPP
#define TRIGNUM_TEST_ORACLE_HELPERS_HPP

// Test-only oracles, independent of the library's exact code paths.

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "trignum/polynomial.hpp"

namespace trignum::testing {

// Expands prod over gcd(j,n)=1 of (z - e^(2 pi i j / n)) numerically and
// rounds the coefficients. Valid while rounding error stays below 1/2,
// which holds comfortably for the n used in tests.
inline IntPoly numeric_cyclotomic(long n) {
    std::vector<std::complex<double>> coeffs{1.0};
    const double tau = 6.283185307179586476925287;
    for (long j = 1; j <= n; ++j) {
        if (std::gcd(j, n) != 1) continue;
        std::complex<double> root = std::polar(1.0, tau * static_cast<double>(j) / n);
        coeffs.push_back(0.0);
        for (size_t k = coeffs.size() - 1; k > 0; --k)
            coeffs[k] = coeffs[k - 1] - root * coeffs[k];
        coeffs[0] = -root * coeffs[0];
    }
    std::vector<Integer> out;
    for (const auto& c : coeffs) {
        double r = std::round(c.real());
        if (std::abs(c.real() - r) > 0.25 || std::abs(c.imag()) > 0.25)
            throw std::runtime_error("numeric cyclotomic oracle lost too much precision");
        out.emplace_back(static_cast<long>(r));
    }
    return IntPoly(std::move(out));
}

inline long brute_totient(long n) {
    long count = 0;
    for (long j = 1; j <= n; ++j)
        if (std::gcd(j, n) == 1) ++count;
    return count;
}

inline int brute_moebius(long n) {
    int mu = 1;
    for (long p = 2; p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    return mu;
}

}  // namespace trignum::testing

#endif
