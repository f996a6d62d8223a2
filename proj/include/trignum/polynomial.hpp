#ifndef TRIGNUM_POLYNOMIAL_HPP
#define TRIGNUM_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "trignum/numeric.hpp"

namespace trignum {

/* Dense univariate polynomials, coefficients stored in ascending degree
 * with trailing zeros trimmed. Everything in scope has degree <= ~512,
 * so no sparse representation and no FFT; plain schoolbook arithmetic,
 * always exact.
 */
template <class T>
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<T> ascending) : c_(ascending) { trim(); }
    explicit Poly(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly{T(1)}; }
    static Poly variable() { return Poly{T(0), T(1)}; }
    static Poly monomial(int deg, const T& coeff) {
        std::vector<T> c(deg + 1, T(0));
        c[deg] = coeff;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    // Coefficient of z^i; zero outside the stored range.
    T operator[](int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
        return c_[i];
    }

    const T& leading() const {
        if (is_zero()) throw std::invalid_argument("leading(): zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && leading() == T(1); }

    bool is_palindromic() const {
        std::vector<T> r(c_.rbegin(), c_.rend());
        return r == c_;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Poly operator-() const {
        std::vector<T> c(c_);
        for (auto& x : c) x = -x;
        return Poly(std::move(c));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    friend Poly operator*(const T& s, Poly p) {
        for (auto& x : p.c_) x *= s;
        p.trim();
        return p;
    }

    T eval(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // p(z^k)
    Poly substitute_power(int k) const {
        if (k < 1) throw std::invalid_argument("substitute_power: k must be positive");
        if (is_zero()) return Poly();
        std::vector<T> c(static_cast<size_t>(degree()) * k + 1, T(0));
        for (size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
        return Poly(std::move(c));
    }

    // p(q(z)) by Horner.
    Poly compose(const Poly& q) const {
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly{*it};
        return acc;
    }

    // Quotient and remainder with a monic divisor; exact in T.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (!b.is_monic()) throw std::invalid_argument("divmod: divisor must be monic");
        std::vector<T> rem = a.c_;
        int db = b.degree();
        if (a.degree() < db) return {Poly(), a};
        std::vector<T> quot(a.degree() - db + 1, T(0));
        for (int i = a.degree(); i >= db; --i) {
            T f = rem[i];
            if (f == 0) continue;
            quot[i - db] = f;
            for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    // Exact division; a nonzero remainder indicates a caller bug.
    static Poly div_exact(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::invalid_argument("div_exact: nonzero remainder");
        return q;
    }

    std::string str(const std::string& var = "z") const;

  private:
    std::vector<T> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

template <class T>
std::string Poly<T>::str(const std::string& var) const {
    using trignum::to_string;
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        T c = (*this)[i];
        if (c == 0) continue;
        bool neg = c < 0;
        T a = neg ? T(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mag = to_string(a);
        if (i == 0) {
            out += mag;
        } else {
            if (a != 1) out += mag + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RatPoly to_rational(const IntPoly& p);
IntPoly to_integer_exact(const RatPoly& p);

// gcd of coefficients (nonnegative); zero polynomial has content 0.
Integer content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

// Clears denominators and divides by the content; leading coefficient
// made positive. The canonical integer form of a rational polynomial.
IntPoly primitive_integer_form(const RatPoly& p);

struct GaussianInt {
    Integer re, im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }

    Integer norm() const { return re * re + im * im; }
    std::string str() const;
};

// Horner evaluation of p at a Gaussian integer.
GaussianInt eval_gaussian(const IntPoly& p, const GaussianInt& x);

}  // namespace trignum

#endif
