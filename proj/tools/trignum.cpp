// Command-line surface for the trignum library. Angles are entered as
// exact fractions "k/N"; there is no floating-point input anywhere.
// Exit codes: 0 success/verified, 1 verification failure, 2 usage error.

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "trignum/report.hpp"
#include "trignum/verify.hpp"

namespace {

using namespace trignum;

struct Options {
    bool as_json = false;
    bool quiet = false;
};

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_cyclo(const Options& opt, long n) {
    const auto& rec = cyclotomic(n);
    auto triple = leading_triple(n);
    std::ostringstream text;
    text << "Phi_" << n << "(z) = " << rec.poly.str() << "\n";
    if (!opt.quiet) {
        text << "degree phi(" << n << ") = " << rec.phi << ", mu(" << n << ") = " << rec.mu
             << ", squarefree: " << (rec.squarefree ? "yes" : "no") << "\n";
        text << "leading triple (a1,a2,a3) = (" << triple[0] << "," << triple[1] << ","
             << triple[2] << "), palindromic: " << (rec.poly.is_palindromic() ? "yes" : "no")
             << "\n";
    }
    emit(opt, cyclo_report(n), text.str());
    return 0;
}

int cmd_phi_i(const Options& opt, long n) {
    GaussianInt v = phi_at_i(n);
    std::ostringstream text;
    text << "Phi_" << n << "(i) = " << v.str() << "\n";
    emit(opt, phi_at_i_report(n), text.str());
    return 0;
}

int cmd_minpoly(const Options& opt, const std::string& kind, const std::string& angle_text) {
    ReducedAngle angle = reduce_angle(parse_rational(angle_text));
    MinPolyInfo info = kind == "cos" ? canonical_cos(angle) : canonical_sin(angle);
    std::ostringstream text;
    std::string sign = info.sign_exponent % 2 ? "-" : "+";
    text << "angle " << angle.k << "/" << angle.N << " (reduced mod 2)\n";
    text << "minimal polynomial of " << sign << "2*" << kind << "(pi*" << angle.k << "/" << angle.N
         << ") over Q:\n";
    text << "  " << info.poly.str() << "   (degree " << info.degree << ")\n";
    emit(opt, minpoly_report(info), text.str());
    return 0;
}

void render_verdict_text(const Verdict& v, std::ostringstream& text) {
    if (v.independent)
        text << "independent (" << reason_name(v.reason) << ")\n";
    else
        text << "dependent: " << render_relation(v) << "   [" << reason_name(v.reason) << "]\n";
}

int cmd_indep(const Options& opt, const std::string& r1_text, const std::string& r2_text,
              long field_d, bool with_oracle) {
    Rational r1 = parse_rational(r1_text), r2 = parse_rational(r2_text);
    std::ostringstream text;
    json out;

    if (field_d == 0) {
        Verdict v = theorem2_verdict(r1, r2);
        text << "1, cos(pi*" << to_string(r1) << "), cos(pi*" << to_string(r2) << ") over Q: ";
        render_verdict_text(v, text);
        out = verdict_report(v);
        if (with_oracle) {
            std::array<Rational, 2> rs{r1, r2};
            Verdict o = oracle_Q(rs);
            out["oracle"] = verdict_report(o);
            if (o.independent != v.independent) {
                text << "VERIFICATION FAILURE: oracle disagrees with the criterion\n";
                emit(opt, out, text.str());
                return 1;
            }
            if (!opt.quiet) text << "oracle agrees (rank route)\n";
        }
        emit(opt, out, text.str());
        return 0;
    }

    auto crit = theorem33_verdict(r1, r2, field_d);
    QuadVerdict oracle = oracle_quadratic(r1, r2, field_d);
    text << "1, cos(pi*" << to_string(r1) << "), cos(pi*" << to_string(r2) << ") over Q(sqrt("
         << field_d << ")): ";
    if (!crit) {
        text << (oracle.independent ? "independent" : "dependent") << " (criterion inapplicable, "
             << "oracle rank decides)\n";
        if (!oracle.independent) text << "relation: " << render_quad_relation(oracle) << "\n";
        out = quad_verdict_report(oracle);
        out["criterion"] = "inapplicable";
        emit(opt, out, text.str());
        return 0;
    }
    render_verdict_text(*crit, text);
    out = verdict_report(*crit);
    out["field_d"] = field_d;
    if (with_oracle) {
        out["oracle"] = quad_verdict_report(oracle);
        if (oracle.independent != crit->independent) {
            text << "VERIFICATION FAILURE: quadratic oracle disagrees with the criterion\n";
            emit(opt, out, text.str());
            return 1;
        }
        if (!opt.quiet) text << "oracle agrees (six-element rank route)\n";
    }
    emit(opt, out, text.str());
    return 0;
}

int cmd_oracle(const Options& opt, const std::vector<std::string>& angle_texts) {
    std::vector<Rational> rs;
    for (const auto& t : angle_texts) rs.push_back(parse_rational(t));
    Verdict v = oracle_Q(rs);
    std::ostringstream text;
    text << "{1";
    for (const auto& r : rs) text << ", cos(pi*" << to_string(r) << ")";
    text << "}: ";
    if (v.independent)
        text << "independent (rank " << rs.size() + 1 << ")\n";
    else
        text << "dependent: " << render_relation(v) << "\n";
    emit(opt, verdict_report(v), text.str());
    return 0;
}

int cmd_factor_q(const Options& opt, long N, long d1, long d2) {
    BiquadDescriptor K;
    if (d2 != 0 && d1 == 0) std::swap(d1, d2);
    if (d1 != 0) K.d1 = d1;
    if (d2 != 0) K.d2 = d2;
    if (K.d1 && K.d2 && *K.d2 < *K.d1) std::swap(*K.d1, *K.d2);
    const IntPoly& q = sin_min_poly(N);
    long m = 4 * N;
    if (K.d1) m = lcm_long(m, QuadField(*K.d1).d_hat);
    if (K.d2) m = lcm_long(m, QuadField(*K.d2).d_hat);
    auto factors = factor_over_biquadratic(q, K, m);
    std::ostringstream text;
    text << "Q_" << N << "(z) = " << q.str() << " over " << K.str() << ":\n";
    for (const auto& f : factors) text << "  " << f.str() << "\n";
    emit(opt, factors_report(q, factors), text.str());
    return 0;
}

int cmd_triangles_classify(const Options& opt, long maxN) {
    auto result = classify_all(maxN);
    std::ostringstream text;
    for (const auto& t : result) {
        text << t.shape.str() << "  sides " << t.sides.x[0].str() << " : " << t.sides.x[1].str()
             << " : " << t.sides.x[2].str();
        if (t.shape.isosceles()) text << "  [isosceles]";
        if (t.shape.right()) text << "  [right]";
        text << "\n";
    }
    if (!opt.quiet) text << result.size() << " triangles with max N = " << maxN << "\n";
    emit(opt, classification_report(result), text.str());
    return 0;
}

int cmd_triangles_check(const Options& opt, long n1, long n2, long n3, long N) {
    TriangleShape t(n1, n2, n3, N);
    bool verified = is_high_school(t, Mode::Verified);  // also compares with fast mode
    HighSchoolVerdict v = classify_shape(t);
    std::ostringstream text;
    json out{{"shape", t.str()},
             {"n", {t.n1, t.n2, t.n3}},
             {"N", t.N},
             {"high_school", v.high_school}};
    text << t.str() << ": " << (verified ? "high school triangle" : "not a high school triangle")
         << "\n";
    if (v.high_school) {
        const auto& x = v.witness->sides;
        text << "sides " << x.x[0].str() << " : " << x.x[1].str() << " : " << x.x[2].str()
             << " (verified by exact cross-multiplication)\n";
        out["sides"] = triangle_report(*v.witness)["sides"];
    } else {
        text << "obstruction: " << obstruction_name(v.obstruction);
        if (v.detail_N1) {
            text << " (N = " << v.detail_N1;
            if (v.detail_N2) text << ", " << v.detail_N2;
            text << ")";
        }
        text << "\n";
        out["obstruction"] = obstruction_name(v.obstruction);
        if (v.detail_N1) out["obstruction_N1"] = v.detail_N1;
        if (v.detail_N2) out["obstruction_N2"] = v.detail_N2;
    }
    emit(opt, out, text.str());
    return 0;
}

int cmd_figure3(const Options& opt) {
    const auto& table = figure3_table();
    emit(opt, pair_table_report(table), render_pair_table(table));
    return 0;
}

int cmd_verify(const Options& opt, const std::string& suite) {
    auto results = verify::run_suite(suite);
    bool all = true;
    std::ostringstream text;
    json checks = json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        if (!opt.quiet || !r.pass) {
            char line[512];
            std::snprintf(line, sizeof line, "%-38s %s  (%.2fs)  %s\n", r.name.c_str(),
                          r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
            text << line;
        }
        checks.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    text << (all ? "suite passed" : "SUITE FAILED") << " (" << results.size() << " checks)\n";
    emit(opt, json{{"suite", suite}, {"pass", all}, {"checks", checks}}, text.str());
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for trigonometric numbers: cyclotomic polynomials,\n"
                 "minimal polynomials of 2cos(pi k/N) and 2sin(pi k/N), independence\n"
                 "decisions over Q and real quadratic fields, and the classification of\n"
                 "rational triangles with one-square-root side ratios"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.as_json, "emit JSON instead of text");
    app.add_flag("--quiet", opt.quiet, "suppress informational output");

    long n = 0;
    auto* cyclo = app.add_subcommand("cyclo", "print the n-th cyclotomic polynomial");
    cyclo->add_option("n", n, "index n >= 1")->required();

    auto* phii = app.add_subcommand("phi-i", "evaluate the n-th cyclotomic polynomial at i");
    phii->add_option("n", n, "index n >= 1")->required();

    std::string kind, angle_text;
    auto* minp = app.add_subcommand("minpoly", "minimal polynomial of 2cos(pi r) or 2sin(pi r)");
    minp->add_option("kind", kind, "cos or sin")->required()->check(CLI::IsMember({"cos", "sin"}));
    minp->add_option("angle", angle_text, "rational angle k/N")->required();

    std::string r1_text, r2_text;
    long field_d = 0;
    bool with_oracle = false;
    auto* indep = app.add_subcommand("indep", "decide independence of 1, cos(pi r1), cos(pi r2)");
    indep->add_option("r1", r1_text)->required();
    indep->add_option("r2", r2_text)->required();
    indep->add_option("--field", field_d, "decide over Q(sqrt(d)) for squarefree d >= 2");
    indep->add_flag("--oracle", with_oracle, "cross-check the criterion against the rank oracle");

    std::vector<std::string> oracle_angles;
    auto* oracle = app.add_subcommand("oracle", "exact rank of {1, cos(pi r1), ..., cos(pi rk)}");
    oracle->add_option("angles", oracle_angles, "rational angles")->required()->expected(-1);

    long qN = 0, d1 = 0, d2 = 0;
    auto* factorq = app.add_subcommand("factor-q", "factor the sine minimal polynomial over a field");
    factorq->add_option("N", qN, "denominator N")->required();
    factorq->add_option("--d1", d1, "first radicand (squarefree >= 2)");
    factorq->add_option("--d2", d2, "second radicand (squarefree >= 2)");

    auto* tri = app.add_subcommand("triangles", "rational high school triangle classification");
    tri->require_subcommand(1);
    long maxN = 12;
    auto* classify = tri->add_subcommand("classify", "enumerate and verify all shapes up to max N");
    classify->add_option("--max-n", maxN, "largest angle denominator sum")->required();
    long tn1 = 0, tn2 = 0, tn3 = 0, tN = 0;
    auto* check = tri->add_subcommand("check", "classify a single shape pi*(n1,n2,n3)/N");
    check->add_option("n1", tn1)->required();
    check->add_option("n2", tn2)->required();
    check->add_option("n3", tn3)->required();
    check->add_option("N", tN)->required();

    auto* fig3 = app.add_subcommand("figure3", "print the sin-ratio biquadratic pair table");

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite, "lemmas|identities|theorem2|figure1|figure2|figure3|all")
        ->required()
        ->check(CLI::IsMember(trignum::verify::suite_names()));

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cyclo) return cmd_cyclo(opt, n);
        if (*phii) return cmd_phi_i(opt, n);
        if (*minp) return cmd_minpoly(opt, kind, angle_text);
        if (*indep) return cmd_indep(opt, r1_text, r2_text, field_d, with_oracle);
        if (*oracle) return cmd_oracle(opt, oracle_angles);
        if (*factorq) return cmd_factor_q(opt, qN, d1, d2);
        if (*classify) return cmd_triangles_classify(opt, maxN);
        if (*check) return cmd_triangles_check(opt, tn1, tn2, tn3, tN);
        if (*fig3) return cmd_figure3(opt);
        if (*verify_cmd) return cmd_verify(opt, suite);
    } catch (const trignum::verification_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
