#include "trignum/report.hpp"

#include <sstream>

namespace trignum {

json json_int(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Integer parse_json_int(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

json json_rational(const Rational& q) { return to_string(q); }

json poly_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(json_int(c));
    return arr;
}

IntPoly poly_from_json(const json& j) {
    std::vector<Integer> c;
    for (const auto& v : j) c.push_back(parse_json_int(v));
    return IntPoly(std::move(c));
}

json element_json(const CycloElement& x) {
    json num = json::array();
    for (const auto& v : x.num()) num.push_back(json_int(v));
    return json{{"conductor", x.conductor()}, {"num", num}, {"den", json_int(x.den())}};
}

CycloElement element_from_json(const json& j) {
    std::vector<Integer> num;
    for (const auto& v : j.at("num")) num.push_back(parse_json_int(v));
    return CycloElement(j.at("conductor").get<long>(), std::move(num),
                        parse_json_int(j.at("den")));
}

json radical_json(const RadicalExpr& x) {
    return json{{"a", json_int(x.a)}, {"b", json_int(x.b)}, {"d", x.d}, {"c", json_int(x.c)}};
}

RadicalExpr radical_from_json(const json& j) {
    return make_radical(parse_json_int(j.at("a")), parse_json_int(j.at("b")),
                        j.at("d").get<long>(), parse_json_int(j.at("c")));
}

json relation_json(const std::vector<Integer>& lambda) {
    json arr = json::array();
    for (const auto& v : lambda) arr.push_back(json_int(v));
    return arr;
}

json cyclo_report(long n) {
    const auto& rec = cyclotomic(n);
    auto triple = leading_triple(n);
    return json{{"n", n},
                {"coefficients", poly_json(rec.poly)},
                {"display", rec.poly.str()},
                {"phi", rec.phi},
                {"moebius", rec.mu},
                {"squarefree", rec.squarefree},
                {"leading_triple", {triple[0], triple[1], triple[2]}},
                {"palindromic", rec.poly.is_palindromic()}};
}

namespace {

const char* phi_class_name(PhiAtIClass c) {
    switch (c) {
        case PhiAtIClass::SixValueSet: return "unit-set";
        case PhiAtIClass::Zero: return "zero";
        case PhiAtIClass::FourTimesPrimePower: return "prime";
        case PhiAtIClass::One: return "one";
    }
    return "?";
}

}  // namespace

json phi_at_i_report(long n) {
    GaussianInt v = phi_at_i(n);
    return json{{"n", n},
                {"re", json_int(v.re)},
                {"im", json_int(v.im)},
                {"display", v.str()},
                {"class", phi_class_name(phi_at_i_class(n))}};
}

json minpoly_report(const MinPolyInfo& info) {
    return json{{"kind", info.kind == TrigKind::Cos ? "cos" : "sin"},
                {"k", info.angle.k},
                {"N", info.angle.N},
                {"degree", info.degree},
                {"sign_exponent", info.sign_exponent},
                {"coefficients", poly_json(info.poly)},
                {"display", info.poly.str()}};
}

namespace {

json angles_json(const std::vector<Rational>& rs) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(json_rational(r));
    return arr;
}

}  // namespace

json verdict_report(const Verdict& v) {
    json out{{"independent", v.independent},
             {"reason", reason_name(v.reason)},
             {"angles", angles_json(v.angles)}};
    if (v.relation) {
        out["relation"] = relation_json(*v.relation);
        out["relation_display"] = render_relation(v);
    }
    return out;
}

json quad_verdict_report(const QuadVerdict& v) {
    json out{{"independent", v.independent}, {"d", v.d}, {"angles", angles_json(v.angles)}};
    if (v.relation) {
        json rel = json::array();
        for (const auto& c : *v.relation)
            rel.push_back(json{{"a", json_rational(c.a)}, {"b", json_rational(c.b)}});
        out["relation"] = rel;
        out["relation_display"] = render_quad_relation(v);
    }
    return out;
}

namespace {

json biquad_elem_json(const BiquadElem& e) {
    return json{{"c0", json_rational(e.c0)},
                {"c1", json_rational(e.c1)},
                {"c2", json_rational(e.c2)},
                {"c3", json_rational(e.c3)}};
}

}  // namespace

json factors_report(const IntPoly& p, const std::vector<BiquadPoly>& factors) {
    json fs = json::array();
    for (const auto& f : factors) {
        json coeffs = json::array();
        for (const auto& c : f.coeffs) coeffs.push_back(biquad_elem_json(c));
        fs.push_back(json{{"degree", f.degree()}, {"coefficients", coeffs}, {"display", f.str()}});
    }
    json field;
    BiquadDescriptor K = factors.empty() ? BiquadDescriptor{} : factors.front().field;
    return json{{"polynomial", poly_json(p)},
                {"polynomial_display", p.str()},
                {"field", K.str()},
                {"factors", fs}};
}

json triangle_report(const ReferenceTriangle& t) {
    json sides = json::array();
    std::string display;
    for (int i = 0; i < 3; ++i) {
        sides.push_back(radical_json(t.sides.x[i]));
        display += (i ? " : " : "") + t.sides.x[i].str();
    }
    return json{{"n", {t.shape.n1, t.shape.n2, t.shape.n3}},
                {"N", t.shape.N},
                {"shape", t.shape.str()},
                {"isosceles", t.shape.isosceles()},
                {"right", t.shape.right()},
                {"sides", sides},
                {"sides_display", display}};
}

json classification_report(const std::vector<ReferenceTriangle>& ts) {
    json arr = json::array();
    long isosceles = 0, right = 0, neither = 0;
    for (const auto& t : ts) {
        arr.push_back(triangle_report(t));
        if (t.shape.isosceles()) ++isosceles;
        if (t.shape.right()) ++right;
        if (!t.shape.isosceles() && !t.shape.right()) ++neither;
    }
    return json{{"count", ts.size()},
                {"isosceles", isosceles},
                {"right", right},
                {"neither", neither},
                {"triangles", arr}};
}

json pair_table_report(const PairTable& t) {
    json rows = json::array();
    for (size_t i = 0; i < t.Ns.size(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < t.Ns.size(); ++j) row.push_back(static_cast<bool>(t.admissible[i][j]));
        rows.push_back(row);
    }
    json vac = json::array();
    for (auto& [a, b] : t.vacuous) vac.push_back(json{a, b});
    return json{{"N_values", t.Ns}, {"admissible", rows}, {"vacuous_diagonal", vac}};
}

namespace {

std::string cos_term(const Rational& r) { return "cos(pi*" + to_string(r) + ")"; }

std::string signed_coeff(const Integer& c, bool lead) {
    std::string s;
    Integer a = c < 0 ? Integer(-c) : c;
    if (lead)
        s += c < 0 ? "-" : "";
    else
        s += c < 0 ? " - " : " + ";
    if (a != 1) s += a.get_str() + "*";
    return s;
}

}  // namespace

std::string render_relation(const Verdict& v) {
    if (!v.relation) return "";
    const auto& lam = *v.relation;
    // lambda_0 + sum lambda_j cos = 0, rendered as sum (+-lambda_j) cos = -+lambda_0
    // with the first nonzero cosine coefficient positive.
    int flip = 1;
    for (size_t j = 1; j < lam.size(); ++j)
        if (lam[j] != 0) {
            flip = lam[j] < 0 ? -1 : 1;
            break;
        }
    std::string lhs;
    bool lead = true;
    for (size_t j = 1; j < lam.size(); ++j) {
        if (lam[j] == 0) continue;
        lhs += signed_coeff(flip * lam[j], lead) + cos_term(v.angles[j - 1]);
        lead = false;
    }
    if (lhs.empty()) return "1 = 0";  // cannot happen: 1 alone is independent
    Integer rhs = -flip * lam[0];
    return lhs + " = " + rhs.get_str();
}

std::string render_quad_relation(const QuadVerdict& v) {
    if (!v.relation) return "";
    std::ostringstream out;
    bool lead = true;
    auto coeff_str = [&](const QuadCoeff& c) {
        std::string s;
        if (c.b == 0) return to_string(c.a);
        if (c.a != 0) s += to_string(c.a);
        if (c.b == 1)
            s += s.empty() ? "" : "+";
        else if (c.b == -1)
            s += "-";
        else
            s += (c.b > 0 && !s.empty() ? "+" : "") + to_string(c.b) + "*";
        s += "sqrt(" + std::to_string(v.d) + ")";
        return s;
    };
    for (int j = 0; j < 3; ++j) {
        const QuadCoeff& c = (*v.relation)[j];
        if (c.a == 0 && c.b == 0) continue;
        std::string term = coeff_str(c);
        bool wrap = (c.a != 0 && c.b != 0);
        if (!lead) out << " + ";
        if (j == 0) {
            out << (wrap ? "(" + term + ")" : term);
        } else {
            if (term == "1") {
            } else if (term == "-1") {
                out << "-";
            } else {
                out << (wrap ? "(" + term + ")" : term) << "*";
            }
            out << cos_term(v.angles[j - 1]);
        }
        lead = false;
    }
    out << " = 0";
    return out.str();
}

std::string render_pair_table(const PairTable& t) {
    std::ostringstream out;
    out << "sin-ratio biquadratic admissibility ('#' admissible, '.' not):\n     ";
    for (long N : t.Ns) out << (N < 10 ? "  " : " ") << N;
    out << "\n";
    for (size_t i = 0; i < t.Ns.size(); ++i) {
        out << (t.Ns[i] < 10 ? "   " : "  ") << t.Ns[i] << " ";
        for (size_t j = 0; j < t.Ns.size(); ++j)
            out << "  " << (t.admissible[i][j] ? '#' : '.');
        out << "\n";
    }
    if (!t.vacuous.empty()) {
        out << "diagonal cells with no representative pair (ratios +-1): ";
        for (size_t i = 0; i < t.vacuous.size(); ++i)
            out << (i ? ", " : "") << "(" << t.vacuous[i].first << "," << t.vacuous[i].second << ")";
        out << "\n";
    }
    return out.str();
}

}  // namespace trignum
