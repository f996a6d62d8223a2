#include "trignum/triangles.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace trignum {

TriangleShape::TriangleShape(long a, long b, long c, long total) : n1(a), n2(b), n3(c), N(total) {
    if (!(n1 >= 1 && n1 <= n2 && n2 <= n3))
        throw std::invalid_argument("TriangleShape: need 1 <= n1 <= n2 <= n3");
    if (n1 + n2 + n3 != N) throw std::invalid_argument("TriangleShape: angles must sum to N");
    if (n3 >= N) throw std::invalid_argument("TriangleShape: degenerate (n3 >= N)");
    if (std::gcd(std::gcd(n1, n2), n3) != 1)
        throw std::invalid_argument("TriangleShape: angle numerators share a factor");
    if (N < 3) throw std::invalid_argument("TriangleShape: N must be >= 3");
}

Rational TriangleShape::angle(int j) const {
    long n = j == 1 ? n1 : j == 2 ? n2 : n3;
    return make_rational(n, N);
}

long TriangleShape::angle_denominator(int j) const {
    long n = j == 1 ? n1 : j == 2 ? n2 : n3;
    return N / std::gcd(n, N);
}

std::string TriangleShape::str() const {
    return "pi*(" + std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n3) +
           ")/" + std::to_string(N);
}

// ------------------------------------------------------------- fixtures

namespace {

RadicalExpr rad(long a, long b, long d, long c = 1) {
    return make_radical(Integer(a), Integer(b), d, Integer(c));
}

std::vector<ReferenceTriangle> build_reference() {
    std::vector<ReferenceTriangle> t;
    auto add = [&](long a, long b, long c, long N, RadicalExpr x1, RadicalExpr x2, RadicalExpr x3) {
        t.push_back(ReferenceTriangle{TriangleShape(a, b, c, N), SideRatios{{x1, x2, x3}}});
    };
    add(1, 1, 1, 3, rad(1, 0, 1), rad(1, 0, 1), rad(1, 0, 1));
    add(1, 1, 2, 4, rad(1, 0, 1), rad(1, 0, 1), rad(0, 1, 2));
    add(1, 1, 3, 5, rad(2, 0, 1), rad(2, 0, 1), rad(1, 1, 5));
    add(1, 2, 2, 5, rad(-1, 1, 5), rad(2, 0, 1), rad(2, 0, 1));
    add(1, 1, 4, 6, rad(1, 0, 1), rad(1, 0, 1), rad(0, 1, 3));
    add(1, 2, 3, 6, rad(1, 0, 1), rad(0, 1, 3), rad(2, 0, 1));
    add(1, 1, 10, 12, rad(0, 1, 2), rad(0, 1, 2), rad(1, 1, 3));
    add(1, 2, 9, 12, rad(-1, 1, 3), rad(0, 1, 2), rad(2, 0, 1));
    add(1, 3, 8, 12, rad(-1, 1, 3), rad(2, 0, 1), rad(0, 1, 6));
    add(1, 4, 7, 12, rad(-1, 1, 3), rad(0, 1, 6), rad(1, 1, 3));
    add(1, 5, 6, 12, rad(-1, 1, 3), rad(1, 1, 3), rad(0, 2, 2));
    add(2, 3, 7, 12, rad(0, 1, 2), rad(2, 0, 1), rad(1, 1, 3));
    add(2, 5, 5, 12, rad(-1, 1, 3), rad(0, 1, 2), rad(0, 1, 2));
    add(3, 4, 5, 12, rad(2, 0, 1), rad(0, 1, 6), rad(1, 1, 3));
    return t;
}

}  // namespace

const std::vector<ReferenceTriangle>& reference_triangles() {
    static const std::vector<ReferenceTriangle> table = build_reference();
    return table;
}

std::vector<ReferenceTriangle> parse_triangle_fixture(std::istream& in) {
    std::vector<ReferenceTriangle> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        long n1, n2, n3, N;
        if (!(fields >> n1 >> n2 >> n3 >> N)) continue;
        std::array<RadicalExpr, 3> xs;
        for (auto& x : xs) {
            long a, b, d, c;
            if (!(fields >> a >> b >> d >> c))
                throw std::invalid_argument("triangle fixture: truncated record: " + line);
            x = rad(a, b, d, c);
        }
        out.push_back(ReferenceTriangle{TriangleShape(n1, n2, n3, N), SideRatios{xs}});
    }
    return out;
}

std::string render_triangle_fixture(const std::vector<ReferenceTriangle>& entries) {
    std::ostringstream out;
    out << "# rational triangles with at most one square root per side\n";
    out << "# n1 n2 n3 N   then three side ratios as (a + b*sqrt(d))/c quadruples\n";
    for (const auto& e : entries) {
        out << e.shape.n1 << " " << e.shape.n2 << " " << e.shape.n3 << " " << e.shape.N;
        for (const auto& x : e.sides.x)
            out << "   " << x.a.get_str() << " " << x.b.get_str() << " " << x.d << " "
                << x.c.get_str();
        out << "\n";
    }
    return out.str();
}

// ------------------------------------------------------------ pair table

const std::vector<long>& allowed_N_values() {
    static const std::vector<long> values = [] {
        std::vector<long> out;
        for (long N = 2; N <= 1000; ++N) {
            long p = degree_of_cos(N);
            if (p == 1 || p == 2 || p == 4 || p == 8) out.push_back(N);
        }
        const std::vector<long> expected{2, 3, 4, 5, 6, 8, 10, 12, 15, 16, 17, 20, 24, 30};
        if (out != expected)
            throw verification_error("allowed_N_values: degree filter disagrees with the known list");
        return out;
    }();
    return values;
}

namespace {

std::vector<long> reduced_half_range(long N) {
    std::vector<long> ks;
    for (long k = 1; 2 * k <= N; ++k)
        if (std::gcd(k, N) == 1) ks.push_back(k);
    return ks;
}

bool compute_pair_cell(long N1, long N2) {
    long m = lcm_long(4 * N1, 4 * N2);
    auto ctx = field_context(m);
    std::vector<std::pair<CycloElement, CycloElement>> ratios;
    // sin(pi k/N) = sin(pi (N-k)/N), so k <= N/2 covers every value.
    for (long k1 : reduced_half_range(N1)) {
        for (long k2 : reduced_half_range(N2)) {
            if (N1 == N2 && k1 == k2) continue;  // r1 - r2 integer
            ratios.emplace_back(ctx->embed_sin(ReducedAngle{k1, N1}),
                                ctx->embed_sin(ReducedAngle{k2, N2}));
        }
    }
    if (ratios.empty()) {
        // Only excluded representative pairs exist (diagonal, N in
        // {2,3,4,6}); every such ratio is +-1, trivially rational.
        return true;
    }
    bool first = ratio_in_biquadratic(*ctx, ratios[0].first, ratios[0].second);
    for (size_t i = 1; i < ratios.size(); ++i) {
        if (ratio_in_biquadratic(*ctx, ratios[i].first, ratios[i].second) != first)
            throw verification_error("sin_ratio_biquadratic(" + std::to_string(N1) + "," +
                                     std::to_string(N2) + "): representatives disagree");
    }
    return first;
}

}  // namespace

bool sin_ratio_biquadratic(long N1, long N2) {
    const auto& allowed = allowed_N_values();
    if (std::find(allowed.begin(), allowed.end(), N1) == allowed.end() ||
        std::find(allowed.begin(), allowed.end(), N2) == allowed.end())
        throw std::invalid_argument("sin_ratio_biquadratic: denominators must be admissible");
    static std::mutex mutex;
    static std::map<std::pair<long, long>, bool> cache;
    auto key = std::minmax(N1, N2);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    bool value = compute_pair_cell(key.first, key.second);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, value).first->second;
}

bool PairTable::at(long N1, long N2) const {
    auto i = std::find(Ns.begin(), Ns.end(), N1);
    auto j = std::find(Ns.begin(), Ns.end(), N2);
    if (i == Ns.end() || j == Ns.end())
        throw std::invalid_argument("PairTable::at: denominator outside the table");
    return admissible[i - Ns.begin()][j - Ns.begin()];
}

const PairTable& figure3_table() {
    static std::mutex mutex;
    static std::unique_ptr<PairTable> table;
    std::lock_guard<std::mutex> lock(mutex);
    if (table) return *table;
    auto t = std::make_unique<PairTable>();
    t->Ns = allowed_N_values();
    size_t n = t->Ns.size();
    t->admissible.assign(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            bool v = sin_ratio_biquadratic(t->Ns[i], t->Ns[j]);
            t->admissible[i][j] = t->admissible[j][i] = v;
            if (i == j && reduced_half_range(t->Ns[i]).size() < 2)
                t->vacuous.emplace_back(t->Ns[i], t->Ns[j]);
        }
    }
    table = std::move(t);
    return *table;
}

// ---------------------------------------------------------- classification

std::string obstruction_name(Obstruction o) {
    switch (o) {
        case Obstruction::None: return "none";
        case Obstruction::DegreeFilter: return "degree-filter";
        case Obstruction::IsoscelesHalfDenominator: return "isosceles-half-denominator";
        case Obstruction::PairTable: return "pair-table";
    }
    return "?";
}

bool radical_positive(const RadicalExpr& x) {
    // sign of a + b sqrt(d), exactly
    if (x.b == 0) return x.a > 0;
    if (x.a >= 0 && x.b > 0) return true;
    if (x.a <= 0 && x.b < 0) return false;
    Integer a2 = x.a * x.a, bd2 = x.b * x.b * x.d;
    return x.a > 0 ? a2 > bd2 : bd2 > a2;
}

namespace {

CycloElement embed_radical(FieldContext& ctx, const RadicalExpr& x) {
    CycloElement v = ctx.from_rational(make_rational(x.a, x.c));
    if (x.b != 0)
        v = ctx.add(v, ctx.scale(make_rational(x.b, x.c), ctx.embed_sqrt(x.d)));
    return v;
}

const ReferenceTriangle* find_reference(const TriangleShape& t) {
    for (const auto& e : reference_triangles())
        if (e.shape == t) return &e;
    return nullptr;
}

}  // namespace

bool verify_ratio(const TriangleShape& t, const SideRatios& sides) {
    for (const auto& x : sides.x)
        if (!radical_positive(x)) return false;
    long m = 4 * t.N;
    for (const auto& x : sides.x)
        if (x.d > 1) m = lcm_long(m, QuadField(x.d).d_hat);
    auto ctx = field_context(m);
    std::array<CycloElement, 3> sines{
        ctx->embed_sin(reduce_angle(t.angle(1))),
        ctx->embed_sin(reduce_angle(t.angle(2))),
        ctx->embed_sin(reduce_angle(t.angle(3))),
    };
    std::array<CycloElement, 3> xs{
        embed_radical(*ctx, sides.x[0]),
        embed_radical(*ctx, sides.x[1]),
        embed_radical(*ctx, sides.x[2]),
    };
    for (auto [j, k] : {std::pair{0, 1}, std::pair{1, 2}}) {
        CycloElement lhs = ctx->mul(sines[j], xs[k]);
        CycloElement rhs = ctx->mul(sines[k], xs[j]);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

HighSchoolVerdict classify_shape(const TriangleShape& t) {
    HighSchoolVerdict v{false};
    const auto& allowed = allowed_N_values();
    std::array<long, 3> Ns{t.angle_denominator(1), t.angle_denominator(2), t.angle_denominator(3)};
    for (int j = 0; j < 3; ++j) {
        if (std::find(allowed.begin(), allowed.end(), Ns[j]) == allowed.end()) {
            v.obstruction = Obstruction::DegreeFilter;
            v.detail_N1 = Ns[j];
            return v;
        }
    }

    // Isosceles with repeated denominator in {8, 10, 24}: the remaining
    // angle has denominator exactly half of it, and that pair is never
    // admissible.
    if (t.isosceles() && t.n1 != t.n3) {
        long rep = (t.n1 == t.n2) ? Ns[0] : Ns[1];
        long other = (t.n1 == t.n2) ? Ns[2] : Ns[0];
        if (rep == 8 || rep == 10 || rep == 24) {
            if (other != rep / 2)
                throw verification_error("isosceles argument: complement denominator is not half");
            if (sin_ratio_biquadratic(rep, other))
                throw verification_error("isosceles argument: half-denominator pair admissible");
            v.obstruction = Obstruction::IsoscelesHalfDenominator;
            v.detail_N1 = rep;
            v.detail_N2 = other;
            return v;
        }
    }

    std::array<Rational, 3> rs{t.angle(1), t.angle(2), t.angle(3)};
    for (int j = 0; j < 3; ++j) {
        for (int k = j + 1; k < 3; ++k) {
            if (rs[j] == rs[k]) continue;  // equal angles are exempt
            if (!sin_ratio_biquadratic(Ns[j], Ns[k])) {
                v.obstruction = Obstruction::PairTable;
                v.detail_N1 = Ns[j];
                v.detail_N2 = Ns[k];
                return v;
            }
        }
    }

    const ReferenceTriangle* ref = find_reference(t);
    if (!ref)
        throw verification_error("classify_shape: " + t.str() +
                                 " passes every filter but has no reference entry");
    if (!verify_ratio(t, ref->sides))
        throw verification_error("classify_shape: reference ratios fail cross-multiplication for " +
                                 t.str());
    v.high_school = true;
    v.witness = ref;
    return v;
}

bool is_high_school(const TriangleShape& t, Mode mode) {
    bool fast = t.N == 3 || t.N == 4 || t.N == 5 || t.N == 6 || t.N == 12;
    if (mode == Mode::Fast) return fast;
    HighSchoolVerdict v = classify_shape(t);
    if (v.high_school != fast)
        throw verification_error("is_high_school: fast and verified modes disagree on " + t.str());
    return v.high_school;
}

std::vector<ReferenceTriangle> classify_all(long maxN) {
    if (maxN < 3) throw std::invalid_argument("classify_all: maxN must be >= 3");
    std::vector<ReferenceTriangle> out;
    for (long N = 3; N <= maxN; ++N) {
        for (long a = 1; 3 * a <= N; ++a) {
            for (long b = a; 2 * b <= N - a; ++b) {
                long c = N - a - b;
                if (c >= N) continue;
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                TriangleShape t(a, b, c, N);
                if (is_high_school(t, Mode::Verified)) {
                    const ReferenceTriangle* ref = find_reference(t);
                    out.push_back(*ref);
                }
            }
        }
    }
    return out;
}

}  // namespace trignum
