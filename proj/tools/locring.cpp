// locring: command-line front end for the local-ring library.
//
// Exit status: 0 success, 1 a verification failed (a mathematical
// counterexample was found), 2 bad usage or input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "locring/hensel.hpp"
#include "locring/lift.hpp"
#include "locring/parse.hpp"
#include "locring/serialize.hpp"
#include "locring/survey.hpp"
#include "locring/verify.hpp"

using namespace locring;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct Options {
    std::string field;
    std::string poly;
    std::string p1;
    std::string p2;
    std::string q;
    std::string sigma = "id";
    std::string element;
    std::string morphism_file;
    std::string out;
    int power = 1;
    int max_degree = 2;
    int max_power = 2;
    bool power_given = false;
    bool all = false;
    bool json_out = false;
};

std::string join(const std::vector<std::string>& parts) {
    std::string s = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
    return s + "]";
}

int cmd_embed(const Options& o) {
    const Field k = parse_field(o.field);
    const Poly p = parse_poly(k, o.poly);
    const RootSeries s = hensel_root_series(p, o.power);
    const StabilizingMorphism f = embed_residue_field(p, o.power);
    const bool ok = s.certificate_holds() && f.certificate_residue().is_zero();

    std::vector<std::string> qs;
    for (const auto& q : s.corrections) qs.push_back(q.to_string());
    if (o.json_out) {
        json j{{"field", k.name()},          {"p", p.to_string()},           {"k", o.power},
               {"u", s.u.to_string()},       {"corrections", qs},            {"cofactor", s.cofactor.to_string()},
               {"certificate", ok},          {"morphism", morphism_to_json(f)}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "ring: " << f.target().to_string() << '\n';
        std::cout << "U = " << s.u.to_string() << '\n';
        for (std::size_t i = 0; i < qs.size(); ++i) std::cout << "Q_" << i + 1 << " = " << qs[i] << '\n';
        std::cout << "R = " << s.cofactor.to_string() << '\n';
        std::cout << "certificate: " << (ok ? "ok" : "FAILED") << '\n';
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_digits(const Options& o) {
    const Field k = parse_field(o.field);
    const DigitMap map(parse_poly(k, o.poly), o.power);
    const QuotientElement a = map.ring().element(parse_poly(k, o.element));
    const ResidueDigits d = map.to_digits(a);
    std::vector<std::string> parts;
    for (const auto& x : d.digits) parts.push_back(x.to_string());
    const bool ok = map.from_digits(d) == a;
    if (o.json_out) {
        std::cout << json{{"element", a.to_string()}, {"digits", parts}, {"round_trip", ok}}.dump(2) << '\n';
    } else {
        std::cout << join(parts) << '\n';
        if (!ok) std::cout << "round trip FAILED\n";
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_lift(const Options& o) {
    const Field k = parse_field(o.field);
    const Poly p1 = parse_poly(k, o.p1);
    const Poly p2 = parse_poly(k, o.p2);
    const FieldAutomorphism sigma = FieldAutomorphism::parse(o.sigma);

    std::optional<StabilizingMorphism> residue;
    if (!o.q.empty()) {
        residue = residue_morphism_from_q(p1, p2, sigma, parse_poly(k, o.q));
    } else {
        const auto found = find_residue_isomorphisms(p1, p2, sigma);
        for (const auto& f : found)
            if (!residue && lift_is_isomorphism(f, o.power).verdict) residue = f;
        if (!residue && !found.empty()) residue = found.front();
        if (!residue) {
            std::cout << "no residue morphism " << p1.to_string() << " -> " << p2.to_string() << " over " << k.name()
                      << '\n';
            return kOk;
        }
    }

    const LiftReport r = lift_is_isomorphism(*residue, o.power);
    const StabilizingMorphism lifted = lift_morphism(*residue, o.power);
    const bool certified = certify_isomorphism(lifted);
    const auto witness = kernel_witness(*residue, o.power);
    bool ok = certified == r.verdict;
    if (witness) ok = ok && !witness->is_zero() && lifted(*witness).is_zero();

    if (o.json_out) {
        json j{{"q_f", r.q_f.to_string()},
               {"s_f", r.s_f.to_string()},
               {"n", r.n},
               {"q_f_derivative_nonzero", r.q_f_derivative_nonzero},
               {"gcd_sf_p2_is_one", r.gcd_sf_p2_is_one},
               {"verdict", r.verdict},
               {"certified", certified},
               {"morphism", morphism_to_json(lifted)}};
        if (witness) j["kernel_witness"] = witness->to_string();
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "Q_f = " << r.q_f.to_string() << '\n';
        std::cout << "S_f = " << r.s_f.to_string() << '\n';
        std::cout << "Q_f' != 0: " << (r.q_f_derivative_nonzero ? "true" : "false") << '\n';
        std::cout << "gcd(S_f, P2) = 1: " << (r.gcd_sf_p2_is_one ? "true" : "false") << '\n';
        std::cout << "verdict: " << (r.verdict ? "true" : "false") << '\n';
        std::cout << "kernel check: " << (certified ? "injective" : "not injective") << '\n';
        if (witness) std::cout << "kernel witness: " << witness->to_string() << '\n';
        std::cout << "morphism: " << morphism_to_json(lifted).dump() << '\n';
    }
    if (!ok) std::cerr << "verification failed: criterion and kernel computation disagree\n";
    return ok ? kOk : kVerificationFailed;
}

int cmd_find_iso(const Options& o) {
    const Field k = parse_field(o.field);
    const Poly p1 = parse_poly(k, o.p1);
    const Poly p2 = parse_poly(k, o.p2);

    if (!o.power_given) {
        const auto found = find_residue_isomorphisms(p1, p2, FieldAutomorphism::parse(o.sigma));
        json list = json::array();
        for (const auto& f : found) {
            const LiftReport r = lift_is_isomorphism(f, 2);
            if (o.json_out)
                list.push_back({{"q_f", r.q_f.to_string()}, {"s_f", r.s_f.to_string()}, {"separable_lift", r.verdict}});
            else
                std::cout << "Q = " << r.q_f.to_string() << "  S_f = " << r.s_f.to_string()
                          << "  Q' != 0: " << (r.q_f_derivative_nonzero ? "true" : "false") << '\n';
        }
        if (o.json_out) std::cout << list.dump(2) << '\n';
        else std::cout << found.size() << " residue isomorphism(s)\n";
        return kOk;
    }

    const auto iso = rings_isomorphic_separable(p1, p2, o.power);
    if (!iso) {
        if (o.json_out) std::cout << json{{"isomorphic", false}}.dump(2) << '\n';
        else std::cout << "not isomorphic: residue fields have degrees " << p1.degree() << " and " << p2.degree() << '\n';
        return kOk;
    }
    const bool certified = certify_isomorphism(*iso);
    if (o.json_out) {
        std::cout << json{{"isomorphic", true}, {"certified", certified}, {"morphism", morphism_to_json(*iso)}}.dump(2)
                  << '\n';
    } else {
        std::cout << "X -> " << iso->q_image().to_string() << '\n';
        std::cout << "certified: " << (certified ? "yes" : "NO") << '\n';
    }
    return certified ? kOk : kVerificationFailed;
}

int cmd_check(const Options& o) {
    std::ifstream in(o.morphism_file);
    if (!in) raise(ErrorKind::InvalidArgument, "cannot read " + o.morphism_file);
    std::stringstream buf;
    buf << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::exception& e) {
        raise(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    // lift and find-iso wrap the morphism in a report
    const StabilizingMorphism f = morphism_from_json(doc.contains("morphism") ? doc.at("morphism") : doc);

    const Poly residue = f.certificate_residue();
    if (!residue.is_zero()) {
        std::cout << "not well defined: the source modulus maps to " << residue.to_string() << " in "
                  << f.target().to_string() << '\n';
        return kVerificationFailed;
    }
    std::cout << "well defined: " << f.source().to_string() << " -> " << f.target().to_string() << '\n';

    const auto size = f.source().size();
    if (size && *size <= 1024) {
        const MorphismLawCheck law = exhaustive_morphism_check(f);
        if (!law.ok) {
            std::cout << "morphism law violated (" << law.law << ") at a = " << law.witness->first.to_string()
                      << ", b = " << law.witness->second.to_string() << '\n';
            return kVerificationFailed;
        }
        std::cout << "morphism law: checked on all " << *size << " elements\n";
    }
    const auto kernel = kernel_basis(morphism_matrix(f));
    const bool iso = kernel.empty() && f.source().dimension() == f.target().dimension();
    std::cout << "kernel dimension: " << kernel.size() << '\n';
    std::cout << "isomorphism: " << (iso ? "yes" : "no") << '\n';
    return kOk;
}

int cmd_survey(const Options& o) {
    const Field k = parse_field(o.field);
    SurveyOptions opts{o.max_degree, o.max_power, std::nullopt};
    if (o.sigma != "id" || o.all) opts.sigma = FieldAutomorphism::parse(o.sigma);
    const auto rows = run_survey(k, opts);

    if (o.out.empty()) {
        write_survey_csv(std::cout, rows);
    } else {
        std::ofstream file(o.out);
        if (!file) raise(ErrorKind::InvalidArgument, "cannot write " + o.out);
        write_survey_csv(file, rows);
    }
    std::size_t bad = 0;
    for (const auto& r : rows) {
        if (r.consistent()) continue;
        ++bad;
        std::cerr << "inconsistent row: " << r.p1 << " -> " << r.p2 << " n=" << r.n << " q_f=" << r.q_f << '\n';
    }
    if (!o.out.empty()) std::cout << rows.size() << " rows, " << bad << " inconsistent\n";
    return bad == 0 ? kOk : kVerificationFailed;
}

int cmd_demo_inseparable(const Options& o) {
    const Field k = parse_field(o.field);
    const Poly p = parse_poly(k, o.poly);
    const Poly dp = derivative(p);
    const Poly g = gcd(dp, p);
    std::cout << "P = " << p.to_string() << " over " << k.name() << '\n';
    std::cout << "P' = " << dp.to_string() << '\n';
    std::cout << "gcd(P', P) = " << g.to_string() << '\n';
    bool ok = dp.is_zero() && g.degree() >= 1;

    auto expect_not_separable = [&](const char* what, auto&& op) {
        try {
            op();
            std::cout << what << ": unexpectedly succeeded\n";
            ok = false;
        } catch (const Error& e) {
            std::cout << what << ": " << e.what() << '\n';
            ok = ok && e.kind() == ErrorKind::NotSeparable;
        }
    };
    expect_not_separable("embed", [&] { embed_residue_field(p, 2); });
    expect_not_separable("lift", [&] { rings_isomorphic_separable(p, p, 2); });
    std::cout << (ok ? "inseparable boundary confirmed" : "inseparable boundary NOT confirmed") << '\n';
    return ok ? kOk : kVerificationFailed;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CriterionDisagreement:
        case ErrorKind::NotWellDefined: return kVerificationFailed;
        default: return kInputError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic in the local rings K[X]/(P^n)"};
    app.require_subcommand(1);
    Options o;

    auto add_field = [&](CLI::App* c) { c->add_option("--field", o.field, "Q, F7, F3(t), F2[a]/(a^2+a+1), ...")->required(); };
    auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json_out, "machine-readable output"); };

    auto* embed = app.add_subcommand("embed", "root series of P and the embedding of K[X]/(P) into K[X]/(P^k)");
    add_field(embed);
    embed->add_option("--poly", o.poly, "monic irreducible P")->required();
    embed->add_option("--power", o.power, "k")->required()->check(CLI::PositiveNumber);
    add_json(embed);

    auto* digits = app.add_subcommand("digits", "digits of an element in the basis 1, P, ..., P^(k-1)");
    add_field(digits);
    digits->add_option("--poly", o.poly)->required();
    digits->add_option("--power", o.power)->required()->check(CLI::PositiveNumber);
    digits->add_option("--element", o.element)->required();
    add_json(digits);

    auto* lift = app.add_subcommand("lift", "lift a residue morphism and decide whether it is an isomorphism");
    add_field(lift);
    lift->add_option("--p1", o.p1)->required();
    lift->add_option("--p2", o.p2)->required();
    lift->add_option("--power", o.power)->required()->check(CLI::PositiveNumber);
    lift->add_option("--q", o.q, "X-image of the residue morphism; searched when omitted");
    lift->add_option("--sigma", o.sigma, "id or frob^e");
    add_json(lift);

    auto* find = app.add_subcommand("find-iso", "residue isomorphisms, or an isomorphism at level --power");
    add_field(find);
    find->add_option("--p1", o.p1)->required();
    find->add_option("--p2", o.p2)->required();
    find->add_option("--power", o.power)->check(CLI::PositiveNumber);
    find->add_option("--sigma", o.sigma, "id or frob^e (residue search only)");
    add_json(find);

    auto* check = app.add_subcommand("check", "verify a morphism stored as JSON");
    check->add_option("--morphism", o.morphism_file)->required();

    auto* survey = app.add_subcommand("survey", "CSV of all same-degree pairs of irreducibles");
    add_field(survey);
    survey->add_option("--max-degree", o.max_degree)->check(CLI::PositiveNumber);
    survey->add_option("--max-power", o.max_power)->check(CLI::PositiveNumber);
    survey->add_option("--sigma", o.sigma, "one row per residue morphism with this sigma");
    survey->add_flag("--all", o.all, "one row per residue morphism (identity sigma)");
    survey->add_option("--out", o.out, "CSV file (default stdout)");

    auto* demo = app.add_subcommand("demo-inseparable", "show the inseparable boundary on F2(t), x^2+t");
    o.field = "F2(t)";
    o.poly = "x^2+t";
    demo->add_option("--field", o.field);
    demo->add_option("--poly", o.poly);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }
    o.power_given = find->count("--power") > 0;

    try {
        if (*embed) return cmd_embed(o);
        if (*digits) return cmd_digits(o);
        if (*lift) return cmd_lift(o);
        if (*find) return cmd_find_iso(o);
        if (*check) return cmd_check(o);
        if (*survey) return cmd_survey(o);
        if (*demo) return cmd_demo_inseparable(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kInputError;
}
