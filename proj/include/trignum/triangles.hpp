#ifndef TRIGNUM_TRIANGLES_HPP
#define TRIGNUM_TRIANGLES_HPP

#include <iosfwd>

#include "trignum/independence.hpp"

namespace trignum {

// The similarity type of a rational triangle: angles pi n_j / N with
// n1 <= n2 <= n3, gcd(n1,n2,n3) = 1, n1+n2+n3 = N.
struct TriangleShape {
    long n1, n2, n3, N;

    TriangleShape(long a, long b, long c, long total);

    Rational angle(int j) const;  // j in {1,2,3}
    long angle_denominator(int j) const;  // N(n_j / N)
    bool isosceles() const { return n1 == n2 || n2 == n3; }
    bool right() const { return 2 * n1 == N || 2 * n2 == N || 2 * n3 == N; }

    bool operator==(const TriangleShape& o) const = default;
    std::string str() const;
};

struct SideRatios {
    std::array<RadicalExpr, 3> x;
    bool operator==(const SideRatios& o) const = default;
};

struct ReferenceTriangle {
    TriangleShape shape;
    SideRatios sides;
};

// The fourteen rational triangles whose side ratios need at most one
// square root per side, with those ratios. Shipped as a fixture and
// re-verified by exact cross-multiplication in every classification.
const std::vector<ReferenceTriangle>& reference_triangles();

std::vector<ReferenceTriangle> parse_triangle_fixture(std::istream& in);
std::string render_triangle_fixture(const std::vector<ReferenceTriangle>& entries);

// Denominators N with cos-degree in {1,2,4,8}, computed by filtering
// and pinned to the known fourteen-element list.
const std::vector<long>& allowed_N_values();

// Does sin(pi r1)/sin(pi r2) land in a biquadratic field, as a function
// of (N(r1), N(r2))? Computed over every reduced representative pair;
// representatives must agree (well-posedness), and when no pair
// satisfies the hypotheses (the diagonal at N in {2,3,4,6}) the only
// ratios are +-1 and the answer is trivially yes.
bool sin_ratio_biquadratic(long N1, long N2);

struct PairTable {
    std::vector<long> Ns;
    std::vector<std::vector<bool>> admissible;
    std::vector<std::pair<long, long>> vacuous;  // no representative pair

    bool at(long N1, long N2) const;
};

// The full symmetric table over all 105 unordered pairs.
const PairTable& figure3_table();

enum class Obstruction { None, DegreeFilter, IsoscelesHalfDenominator, PairTable };

std::string obstruction_name(Obstruction o);

struct HighSchoolVerdict {
    bool high_school;
    Obstruction obstruction = Obstruction::None;
    long detail_N1 = 0, detail_N2 = 0;  // offending denominators, when negative
    const ReferenceTriangle* witness = nullptr;
};

enum class Mode { Fast, Verified };

// Fast mode answers via N in {3,4,5,6,12}. Verified mode re-derives the
// verdict: negatives through the degree filter, the isosceles
// half-denominator argument, or the pair table; positives through an
// exact cross-multiplication of the reference side ratios. The two
// modes disagreeing is a verification failure.
bool is_high_school(const TriangleShape& t, Mode mode);

// The verified pipeline with its audit trail.
HighSchoolVerdict classify_shape(const TriangleShape& t);

// Exact check of sin(pi n_j/N) x_k = sin(pi n_k/N) x_j for the pairs
// (1,2) and (2,3).
bool verify_ratio(const TriangleShape& t, const SideRatios& sides);

// All high-school shapes with N <= maxN, verified, sorted by (N, n1, n2).
std::vector<ReferenceTriangle> classify_all(long maxN);

// Positivity of (a + b sqrt(d))/c, decided exactly.
bool radical_positive(const RadicalExpr& x);

}  // namespace trignum

#endif
