// Command-line surface for the exact Lyness-map toolkit.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error.

#include "lyness/curve.hpp"
#include "lyness/forms.hpp"
#include "lyness/map.hpp"
#include "lyness/special.hpp"
#include "lyness/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace lyness;

namespace {

size_t max_bits_from_env() {
    if (const char* v = std::getenv("LYNESS_MAX_BITS")) {
        char* end = nullptr;
        unsigned long long bits = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && bits > 0) return static_cast<size_t>(bits);
    }
    return kDefaultMaxBits;
}

json point_json(const PlanePoint& p) { return json{{"x", p.x.str()}, {"y", p.y.str()}}; }

void emit(const json& payload, bool text) {
    if (!text) {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    // plain-text rendering: one line per scalar / orbit entry
    if (payload.contains("orbit")) {
        for (const auto& p : payload["orbit"])
            std::cout << p["x"].get<std::string>() << ", " << p["y"].get<std::string>() << "\n";
    }
    for (const auto& [k, v] : payload.items()) {
        if (k == "orbit") continue;
        std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

json report_json(const PeriodReport& r) {
    json j;
    if (r.is_periodic()) {
        j["status"] = "periodic";
        j["period"] = r.period();
    } else if (auto* ap = std::get_if<Aperiodic>(&r.status)) {
        j["status"] = "aperiodic";
        j["steps_tried"] = ap->steps_tried;
    } else {
        j["status"] = "forbidden-set";
        j["step_index"] = std::get<HitForbiddenSet>(r.status).step_index;
    }
    json orbit = json::array();
    for (const auto& p : r.orbit) orbit.push_back(point_json(p));
    j["orbit"] = orbit;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for the Lyness map, its invariant cubics and their group law"};
    app.require_subcommand(1);
    bool text = false;
    app.add_flag("--text", text, "plain-text output instead of JSON");

    std::string arg_a = "1", arg_h = "0", arg_x0, arg_x1, arg_p, arg_q, arg_to, arg_u = "2",
                arg_matrix, arg_suite = "all";
    long steps = 10, max_steps = 100, arg_k = 1, cap = 30, kmin = 1, kmax = 1;
    int fam_period = 1;
    bool positive_only = false;
    uint64_t seed = kDefaultVerifySeed;

    auto* iterate = app.add_subcommand("iterate", "iterate the recurrence");
    iterate->add_option("--a", arg_a)->required();
    iterate->add_option("--x0", arg_x0)->required();
    iterate->add_option("--x1", arg_x1)->required();
    iterate->add_option("--steps", steps);

    auto* period = app.add_subcommand("period", "detect the exact period of a seed");
    period->add_option("--a", arg_a)->required();
    period->add_option("--x0", arg_x0)->required();
    period->add_option("--x1", arg_x1)->required();
    period->add_option("--max-steps", max_steps);

    auto* curve = app.add_subcommand("curve", "level-set classification and group law");
    auto* c_classify = curve->add_subcommand("classify");
    auto* c_add = curve->add_subcommand("add");
    auto* c_neg = curve->add_subcommand("neg");
    auto* c_mul = curve->add_subcommand("mul");
    auto* c_order = curve->add_subcommand("order");
    for (auto* sc : {c_classify, c_add, c_neg, c_mul, c_order}) {
        sc->set_help_flag("--help", "print help");  // frees -h for the invariant level
        sc->add_option("--a", arg_a)->required();
        sc->add_option("--h", arg_h)->required();
    }
    c_add->add_option("--p", arg_p)->required();
    c_add->add_option("--q", arg_q)->required();
    c_neg->add_option("--p", arg_p)->required();
    c_mul->add_option("--p", arg_p)->required();
    c_mul->add_option("--k", arg_k)->required();
    c_order->add_option("--p", arg_p);
    c_order->add_option("--cap", cap);

    auto* convert = app.add_subcommand("convert", "normal-form transformations");
    convert->set_help_flag("--help", "print help");
    convert->add_option("--to", arg_to)->required()->check(CLI::IsMember({"tate", "weierstrass"}));
    convert->add_option("--a", arg_a)->required();
    convert->add_option("--h", arg_h)->required();
    convert->add_option("--point", arg_p);

    auto* family = app.add_subcommand("family", "one-parameter period families");
    family->add_option("--period", fam_period)->required();
    family->add_option("--u", arg_u)->required();

    auto* torsion = app.add_subcommand("torsion", "9-torsion points of the period-9 curve");
    torsion->add_option("--a", arg_a)->required();

    auto* mobius = app.add_subcommand("mobius", "classify a linear fractional map");
    mobius->add_option("--matrix", arg_matrix, "A,B,C,D")->required();

    auto* nine = app.add_subcommand("nine", "9-periodic orbit construction by multiplication");
    nine->add_option("--kmin", kmin);
    nine->add_option("--kmax", kmax);
    nine->add_flag("--positive-only", positive_only);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", arg_suite);
    verify->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    size_t max_bits = max_bits_from_env();
    json out;
    out["status"] = "ok";

    if (iterate->parsed()) {
        MapParams params{Rational::parse(arg_a)};
        PlanePoint cur{Rational::parse(arg_x0), Rational::parse(arg_x1)};
        json orbit = json::array();
        orbit.push_back(point_json(cur));
        for (long i = 0; i < steps; ++i) {
            if (cur.x.is_zero()) {
                out["truncated"] = "forbidden set at step " + std::to_string(i);
                break;
            }
            cur = step(params, cur);
            if (cur.x.num_bits() > max_bits || cur.y.num_bits() > max_bits)
                throw GrowthLimitExceeded{max_bits};
            orbit.push_back(point_json(cur));
        }
        out["orbit"] = orbit;
    } else if (period->parsed()) {
        MapParams params{Rational::parse(arg_a)};
        PeriodReport r = detect_period(params, {Rational::parse(arg_x0), Rational::parse(arg_x1)},
                                       static_cast<size_t>(max_steps), max_bits);
        out.update(report_json(r));
    } else if (curve->parsed()) {
        Rational a = Rational::parse(arg_a), h = Rational::parse(arg_h);
        LynessCurve c(a, h);
        if (c_classify->parsed()) {
            out["class"] = to_string(c.level_set().tag);
        } else if (c_add->parsed()) {
            out["result"] =
                add(c, ProjectivePoint::parse(arg_p), ProjectivePoint::parse(arg_q)).str();
        } else if (c_neg->parsed()) {
            out["result"] = neg(c, ProjectivePoint::parse(arg_p)).str();
        } else if (c_mul->parsed()) {
            out["result"] = mul(c, ProjectivePoint::parse(arg_p), arg_k).str();
        } else if (c_order->parsed()) {
            ProjectivePoint p = arg_p.empty() ? translation_point() : ProjectivePoint::parse(arg_p);
            auto o = order_of(c, p, static_cast<size_t>(cap));
            if (auto* n = std::get_if<size_t>(&o))
                out["order"] = *n;
            else
                out["order"] = "infinite-or-past-cap";
        } else {
            std::cerr << "curve: missing subcommand\n";
            return 2;
        }
    } else if (convert->parsed()) {
        Rational a = Rational::parse(arg_a), h = Rational::parse(arg_h);
        TateCurve t = lyness_to_tate(a, h);
        if (arg_to == "tate") {
            out["b"] = t.b.str();
            out["c"] = t.c.str();
            if (!arg_p.empty())
                out["point"] = lyness_point_to_tate(a, h, ProjectivePoint::parse(arg_p)).str();
        } else {
            ShortWeierstrass w = tate_to_short_weierstrass(t);
            out["p"] = w.p.str();
            out["q"] = w.q.str();
            if (!arg_p.empty()) {
                SWPoint sp = lyness_point_to_sw(a, h, ProjectivePoint::parse(arg_p));
                out["point"] = sp.infinity ? json("infinity")
                                           : json{{"X", sp.X.str()}, {"Y", sp.Y.str()}};
            }
        }
    } else if (family->parsed()) {
        FamilySeed f = family_point(fam_period, Rational::parse(arg_u));
        out["a"] = f.a.str();
        out["x0"] = f.x0.str();
        out["x1"] = f.x1.str();
        PeriodReport r = detect_period({f.a}, {f.x0, f.x1});
        out.update(report_json(r));
    } else if (torsion->parsed()) {
        json pts = json::array();
        for (const auto& p : torsion9_points(Rational::parse(arg_a))) pts.push_back(p.str());
        out["points"] = pts;
    } else if (mobius->parsed()) {
        std::array<Rational, 4> m;
        size_t pos = 0;
        for (int i = 0; i < 4; ++i) {
            auto comma = arg_matrix.find(',', pos);
            if ((comma == std::string::npos) != (i == 3)) throw ParseError("--matrix wants A,B,C,D");
            m[i] = Rational::parse(arg_matrix.substr(pos, comma - pos));
            pos = comma + 1;
        }
        MobiusClass cls = mobius_classify({m[0], m[1], m[2], m[3]});
        switch (cls.tag) {
            case MobiusClass::GloballyPeriodic:
                out["class"] = "globally-periodic";
                out["period"] = cls.period;
                break;
            case MobiusClass::Identity: out["class"] = "identity"; break;
            case MobiusClass::NonPeriodic: out["class"] = "non-periodic"; break;
        }
    } else if (nine->parsed()) {
        json seeds = json::array();
        for (long k = kmin; k <= kmax; ++k) {
            if (k == 0) continue;
            auto res = generate_nine_periodic(k);
            if (auto* seed9 = std::get_if<NineSeed>(&res)) {
                if (positive_only && !seed9->positive) continue;
                seeds.push_back(json{{"k", seed9->k},
                                     {"a", seed9->a.str()},
                                     {"x", seed9->x.str()},
                                     {"y", seed9->y.str()},
                                     {"positive", seed9->positive}});
            } else {
                json j{{"k", k}, {"skipped", std::get<Skipped>(res).reason}};
                if (!positive_only) seeds.push_back(j);
            }
        }
        out["seeds"] = seeds;
    } else if (verify->parsed()) {
        bool all_pass = true;
        json suites = json::array();
        for (const auto& sr : run_suite(arg_suite, seed)) {
            json checks = json::array();
            for (const auto& c : sr.checks) {
                json jc{{"name", c.name}, {"pass", c.pass}};
                if (!c.detail.empty()) jc["detail"] = c.detail;
                checks.push_back(jc);
                all_pass = all_pass && c.pass;
            }
            suites.push_back(json{{"suite", sr.suite}, {"checks", checks}});
        }
        out["suites"] = suites;
        out["pass"] = all_pass;
        emit(out, text);
        return all_pass ? 0 : 1;
    }

    emit(out, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err{{"status", "error"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
}
