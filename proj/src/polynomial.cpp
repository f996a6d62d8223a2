#include "trignum/polynomial.hpp"

namespace trignum {

RatPoly to_rational(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return RatPoly(std::move(c));
}

IntPoly to_integer_exact(const RatPoly& p) {
    std::vector<Integer> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        if (x.get_den() != 1)
            throw std::invalid_argument("to_integer_exact: non-integer coefficient " + to_string(x));
        c.push_back(x.get_num());
    }
    return IntPoly(std::move(c));
}

Integer content(const IntPoly& p) {
    Integer g(0);
    for (const auto& x : p.coeffs()) g = int_gcd(g, x);
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Integer g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Integer> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        c.push_back(q);
    }
    return IntPoly(std::move(c));
}

IntPoly primitive_integer_form(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    Integer den(1);
    for (const auto& x : p.coeffs()) den = int_lcm(den, x.get_den());
    std::vector<Integer> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(Integer(x.get_num() * (den / x.get_den())));
    return primitive_part(IntPoly(std::move(c)));
}

std::string GaussianInt::str() const {
    if (im == 0) return re.get_str();
    std::string out;
    if (re != 0) out += re.get_str();
    if (im > 0 && !out.empty()) out += "+";
    if (im == -1)
        out += "-";
    else if (im != 1)
        out += im.get_str() + "*";
    out += "i";
    return out;
}

GaussianInt eval_gaussian(const IntPoly& p, const GaussianInt& x) {
    GaussianInt acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + GaussianInt(p[i], Integer(0));
    return acc;
}

}  // namespace trignum
