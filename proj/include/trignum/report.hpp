#ifndef TRIGNUM_REPORT_HPP
#define TRIGNUM_REPORT_HPP

#include "json.hpp"
#include "trignum/triangles.hpp"

namespace trignum {

using json = nlohmann::json;

// Integers emit as JSON numbers when they fit, decimal strings otherwise.
json json_int(const Integer& v);
Integer parse_json_int(const json& j);

json json_rational(const Rational& q);  // exact "p/q" string

json poly_json(const IntPoly& p);                 // ascending coefficient array
IntPoly poly_from_json(const json& j);

json element_json(const CycloElement& x);         // {conductor, num, den}
CycloElement element_from_json(const json& j);

json radical_json(const RadicalExpr& x);          // {a, b, d, c}
RadicalExpr radical_from_json(const json& j);

json relation_json(const std::vector<Integer>& lambda);

json cyclo_report(long n);
json phi_at_i_report(long n);
json minpoly_report(const MinPolyInfo& info);
json verdict_report(const Verdict& v);
json quad_verdict_report(const QuadVerdict& v);
json factors_report(const IntPoly& p, const std::vector<BiquadPoly>& factors);
json triangle_report(const ReferenceTriangle& t);
json classification_report(const std::vector<ReferenceTriangle>& ts);
json pair_table_report(const PairTable& t);

// "2*cos(pi*1/5) - 2*cos(pi*2/5) = 1"
std::string render_relation(const Verdict& v);
std::string render_quad_relation(const QuadVerdict& v);
std::string render_pair_table(const PairTable& t);

}  // namespace trignum

#endif
