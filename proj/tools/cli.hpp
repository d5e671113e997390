#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "orbitq/checks.hpp"
#include "orbitq/json_io.hpp"

namespace orbitq::cli {

// Malformed flag values; reported with exit code 2 like parser errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string diagram, functor, window, from, to, family, params, name, lhs, rhs, output;
    std::string method = "linear";
    bool json = false, dot = false, list = false;
};

inline ColumnWindow parse_window(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--window expects LO:HI, got '" + text + "'");
    try {
        return {static_cast<int>(parse_integer(text.substr(0, colon), text)),
                static_cast<int>(parse_integer(text.substr(colon + 1), text))};
    } catch (const Error&) {
        throw UsageError("--window expects LO:HI, got '" + text + "'");
    }
}

inline std::string describe(const TransQuiver& q) {
    std::ostringstream out;
    out << "vertices: " << q.vertex_count() << "\n";
    for (int v = 0; v < q.vertex_count(); ++v) out << "  " << q.label(v) << "\n";
    out << "arrows: " << q.arrow_count() << "\n";
    for (auto [a, b] : q.arrows()) out << "  " << q.label(a) << " -> " << q.label(b) << "\n";
    out << "translation:\n";
    for (int v = 0; v < q.vertex_count(); ++v)
        if (q.translation(v) != TransQuiver::none) out << "  " << q.label(v) << " |-> " << q.label(q.translation(v)) << "\n";
    return out.str();
}

inline std::string emit_quiver(const Options& o, const TransQuiver& q, const std::string& title) {
    if (o.json) return to_json(q).dump(2) + "\n";
    if (o.dot) return to_dot(q, title);
    return title + "\n" + describe(q);
}

// "fixture:NAME", "quotient:DIAGRAM:WORD" or "nakayama:V,R".
inline TransQuiver parse_quiver_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon), rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "fixture") return fixture_ar(rest);
    if (kind == "quotient") {
        const auto second = rest.find(':');
        if (second == std::string::npos) throw UsageError("quotient spec must be quotient:DIAGRAM:WORD");
        const auto d = parse_diagram(rest.substr(0, second));
        return quotient(d, compile(d, rest.substr(second + 1)));
    }
    if (kind == "nakayama") {
        const auto comma = rest.find(',');
        if (comma == std::string::npos) throw UsageError("nakayama spec must be nakayama:V,R");
        return nakayama_stable_ar(static_cast<int>(parse_integer(rest.substr(0, comma), spec)),
                                  static_cast<int>(parse_integer(rest.substr(comma + 1), spec)));
    }
    throw UsageError("unknown quiver spec '" + spec + "' (use fixture:, quotient: or nakayama:)");
}

inline checks::Scale sweep_scale() {
    const char* env = std::getenv("ORBITQ_SWEEP_SCALE");
    if (!env || !*env) return {};
    char* end = nullptr;
    const double f = std::strtod(env, &end);
    if (*end || !(f > 0) || f > 100) throw UsageError("ORBITQ_SWEEP_SCALE must be a number in (0, 100]");
    return {f};
}

inline std::string cmd_diagram(const Options& o) {
    const auto d = parse_diagram(o.diagram);
    if (o.json) return to_json(d).dump(2) + "\n";
    std::ostringstream out;
    out << d.name() << "\nvertices: 1.." << d.rank() << "\narrows:";
    for (const auto& a : d.arrows()) out << " " << a.from << "->" << a.to;
    out << "\ncoxeter number: " << coxeter_number(d) << "\nloewy length: " << loewy_length(d) << "\n";
    return out.str();
}

inline std::string cmd_window(const Options& o) {
    const auto d = parse_diagram(o.diagram);
    const auto w = parse_window(o.window);
    return emit_quiver(o, z_window(d, w.lo, w.hi), "Z" + d.name() + " columns " + o.window);
}

inline std::string cmd_quotient(const Options& o) {
    const auto d = parse_diagram(o.diagram);
    const auto g = compile(d, o.functor);
    const auto q = quotient(d, g);
    return emit_quiver(o, q, "Z" + d.name() + "/<" + to_string(canonical_form(g)) + ">");
}

inline std::string cmd_normalize(const Options& o) {
    const auto d = parse_diagram(o.diagram);
    const auto g = compile(d, o.functor);
    const auto c = canonical_form(g);
    const CyclicAction act(g);
    if (o.json) {
        Json j = to_json(d, c);
        j["period"] = act.period();
        j["group_net_shift"] = to_string(act.net());
        return j.dump(2) + "\n";
    }
    return "canonical: " + to_string(c) + "\nnet shift: " + to_string(net_shift(d, c)) +
           "\nperiod: " + std::to_string(act.period()) + "\n";
}

inline std::string cmd_orbit_hom(const Options& o) {
    const auto d = parse_diagram(o.diagram);
    const OrbitCategory cat(d, compile(d, o.functor));
    const int k = cat.hom_dim(o.from, o.to);
    if (o.json) return Json{{"from", o.from}, {"to", o.to}, {"dim", k}}.dump(2) + "\n";
    return std::to_string(k) + "\n";
}

inline std::string cmd_hom(const Options& o) {
    if (!o.functor.empty()) {
        if (o.to.empty()) throw UsageError("hom with --functor needs --to");
        return cmd_orbit_hom(o);
    }
    const auto d = parse_diagram(o.diagram);
    ZVertex x;
    try {
        x = parse_zvertex(o.from);
    } catch (const Error&) {
        throw UsageError("--from expects (n,i), got '" + o.from + "'");
    }
    const ColumnWindow w = o.window.empty() ? default_window(d, x) : parse_window(o.window);
    const HomTable t = o.method == "hammock" ? hom_dims_hammock(d, x, w) : hom_dims_linear(d, x, w);
    if (!o.to.empty()) {
        ZVertex y;
        try {
            y = parse_zvertex(o.to);
        } catch (const Error&) {
            throw UsageError("--to expects (n,i), got '" + o.to + "'");
        }
        if (y.node < 1 || y.node > d.rank())
            throw Error(ErrorCode::VertexNotInQuotient, to_string(y) + " is not a vertex of Z" + d.name());
        if (o.json) return Json{{"from", o.from}, {"to", to_string(y)}, {"dim", t.at(y)}}.dump(2) + "\n";
        return std::to_string(t.at(y)) + "\n";
    }
    if (o.json) return to_json(t).dump(2) + "\n";
    return format_grid(d, t);
}

inline std::string cmd_classify(const Options& o) {
    const auto d = parse_diagram(o.diagram);
    const auto v = classify_orbit(d, o.functor);
    if (o.json) return to_json(d, v).dump(2) + "\n";
    std::ostringstream out;
    out << "verdict: " << summary(v) << "\n";
    if (v.asashiba) out << "type: " << to_string(*v.asashiba) << "\n";
    if (v.canonical) out << "canonical: " << to_string(*v.canonical) << "\n";
    if (v.family) out << "family: " << family_info(v.family->family).id << "\n";
    return out.str();
}

inline std::string cmd_presentation(const Options& o) {
    const auto a = presentation(parse_instance(o.family, o.params));
    if (o.json) return to_json(a).dump(2) + "\n";
    std::ostringstream out;
    out << display_name({a.family, a.params}) << "\nvertices:";
    for (const auto& v : a.vertices) out << " " << v;
    out << "\narrows:\n";
    for (const auto& e : a.arrows) out << "  " << e.name << ": " << e.from << " -> " << e.to << "\n";
    out << "relations:\n";
    std::istringstream rel(format_relations(a));
    for (std::string line; std::getline(rel, line);) out << "  " << line << "\n";
    return out.str();
}

inline std::string cmd_realize(const Options& o) {
    const auto x = parse_instance(o.family, o.params);
    const auto word = algebra_to_orbit(x);
    const auto verdict = classify_orbit(word);
    ensure(verdict.family && *verdict.family == x, "realization does not classify back to " + display_name(x));
    if (!o.output.empty()) {
        std::ofstream file(o.output);
        file << to_json(presentation(x)).dump(2) << "\n";
        if (!file) throw Error(ErrorCode::BadParams, "cannot write " + o.output);
    }
    if (o.json) {
        Json j{{"algebra", display_name(x)},
               {"family", family_info(x.family).id},
               {"diagram", word.diagram.name()},
               {"functor", to_string(word.tokens)}};
        if (!o.output.empty()) j["presentation_file"] = o.output;
        return j.dump(2) + "\n";
    }
    std::string out = "algebra: " + display_name(x) + "\ndiagram: " + word.diagram.name() +
                      "\nfunctor: " + to_string(word.tokens) + "\n";
    if (!o.output.empty()) out += "presentation: " + o.output + "\n";
    return out;
}

inline std::string cmd_fixture(const Options& o) {
    if (o.list) {
        if (o.json) return Json(fixture_names()).dump(2) + "\n";
        std::string out;
        for (const auto& f : fixture_table())
            out += f.name + "  " + f.algebra + "  " + f.diagram + "/<" + f.functor + ">\n";
        return out;
    }
    if (o.name.empty()) throw UsageError("fixture needs --name or --list");
    return emit_quiver(o, fixture_ar(o.name), o.name);
}

inline std::string cmd_isocheck(const Options& o) {
    const auto q1 = parse_quiver_spec(o.lhs), q2 = parse_quiver_spec(o.rhs);
    const auto w = iso_check(q1, q2);
    if (o.json) {
        Json j{{"isomorphic", w.has_value()},
               {"lhs_vertices", q1.vertex_count()},
               {"rhs_vertices", q2.vertex_count()}};
        if (w) j["witness"] = to_json(q1, q2, *w);
        return j.dump(2) + "\n";
    }
    return std::string(w ? "isomorphic" : "not isomorphic") + "\n";
}

inline std::string cmd_selftest(const Options& o, int& failures) {
    const auto scale = sweep_scale();
    const std::vector<checks::Report> reports{
        checks::group_relations(), checks::fixture_isomorphisms(), checks::nakayama_oracle(),
        checks::mesh_oracle(),     checks::classification_round_trip(scale),
        checks::quotient_counting(), checks::negative_controls(),
    };
    failures = 0;
    for (const auto& r : reports) failures += !r.passed();
    if (o.json) {
        Json suites = Json::array();
        for (const auto& r : reports)
            suites.push_back({{"name", r.name}, {"checked", r.checked}, {"failed", r.failed}, {"failures", r.failures}});
        return Json{{"suites", suites},
                    {"passed", static_cast<int>(reports.size()) - failures},
                    {"failed", failures}}
                   .dump(2) +
               "\n";
    }
    std::ostringstream out;
    for (const auto& r : reports) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " " << r.checked - r.failed << "/" << r.checked << "\n";
        for (const auto& f : r.failures) out << "  " << f << "\n";
    }
    out << "selftest: " << reports.size() - failures << " passed, " << failures << " failed\n";
    return out.str();
}

// Output is buffered and written only on success; errors produce a single
// "error: CODE: message" line on err.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"orbitq: translation quivers, orbit categories and self-injective algebras of finite type"};
    app.name("orbitq");
    app.require_subcommand(1, 1);

    auto diagram = [&](CLI::App* s) { s->add_option("--diagram", o.diagram, "Dynkin diagram, e.g. D4")->required(); };
    auto functor = [&](CLI::App* s, bool required) {
        auto opt = s->add_option("--functor", o.functor, "functor word, e.g. \"t^5*rho\"");
        if (required) opt->required();
    };
    auto json = [&](CLI::App* s) { return s->add_flag("--json", o.json, "JSON output"); };
    auto json_dot = [&](CLI::App* s) {
        auto j = json(s);
        s->add_flag("--dot", o.dot, "DOT output")->excludes(j);
    };
    auto family = [&](CLI::App* s) {
        s->add_option("--family", o.family, "algebra family, e.g. moebius or D_n_s_2")->required();
        s->add_option("--params", o.params, "parameters k=v[,k=v...]")->required();
    };

    auto* c_diagram = app.add_subcommand("diagram", "Dynkin diagram data");
    diagram(c_diagram);
    json(c_diagram);

    auto* c_window = app.add_subcommand("window", "finite window of ZDelta");
    diagram(c_window);
    c_window->add_option("--window", o.window, "columns LO:HI")->required();
    json_dot(c_window);

    auto* c_quotient = app.add_subcommand("quotient", "quotient of ZDelta by the group generated by a functor");
    diagram(c_quotient);
    functor(c_quotient, true);
    json_dot(c_quotient);

    auto* c_normalize = app.add_subcommand("normalize", "canonical form of a functor word");
    diagram(c_normalize);
    functor(c_normalize, true);
    json(c_normalize);

    auto* c_hom = app.add_subcommand("hom", "mesh-category hom dimensions (orbit category with --functor)");
    diagram(c_hom);
    functor(c_hom, false);
    c_hom->add_option("--from", o.from, "source vertex (n,i)")->required();
    c_hom->add_option("--to", o.to, "target vertex (n,i)");
    c_hom->add_option("--window", o.window, "columns LO:HI");
    c_hom->add_option("--method", o.method, "linear or hammock")->check(CLI::IsMember({"linear", "hammock"}));
    json(c_hom);

    auto* c_orbit_hom = app.add_subcommand("orbit-hom", "hom dimension in the orbit category");
    diagram(c_orbit_hom);
    functor(c_orbit_hom, true);
    c_orbit_hom->add_option("--from", o.from, "quotient vertex (n,i)")->required();
    c_orbit_hom->add_option("--to", o.to, "quotient vertex (n,i)")->required();
    json(c_orbit_hom);

    auto* c_classify = app.add_subcommand("classify", "decide which self-injective algebra realizes an orbit category");
    diagram(c_classify);
    functor(c_classify, true);
    json(c_classify);

    auto* c_realize = app.add_subcommand("realize", "functor word realized by an algebra family member");
    family(c_realize);
    c_realize->add_option("--output", o.output, "write the presentation as JSON to this file");
    json(c_realize);

    auto* c_presentation = app.add_subcommand("presentation", "quiver with relations of an algebra");
    family(c_presentation);
    json(c_presentation);

    auto* c_fixture = app.add_subcommand("fixture", "transcribed stable AR-quivers");
    auto name_opt = c_fixture->add_option("--name", o.name, "fixture name");
    c_fixture->add_flag("--list", o.list, "list fixture names")->excludes(name_opt);
    json_dot(c_fixture);

    auto* c_isocheck = app.add_subcommand("isocheck", "translation-quiver isomorphism test");
    c_isocheck->add_option("--lhs", o.lhs, "fixture:NAME | quotient:DIAGRAM:WORD | nakayama:V,R")->required();
    c_isocheck->add_option("--rhs", o.rhs, "same forms as --lhs")->required();
    json(c_isocheck);

    auto* c_selftest = app.add_subcommand("selftest", "run the verification suites");
    json(c_selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }

    std::string result;
    int failures = 0;
    try {
        if (c_diagram->parsed()) result = cmd_diagram(o);
        else if (c_window->parsed()) result = cmd_window(o);
        else if (c_quotient->parsed()) result = cmd_quotient(o);
        else if (c_normalize->parsed()) result = cmd_normalize(o);
        else if (c_hom->parsed()) result = cmd_hom(o);
        else if (c_orbit_hom->parsed()) result = cmd_orbit_hom(o);
        else if (c_classify->parsed()) result = cmd_classify(o);
        else if (c_realize->parsed()) result = cmd_realize(o);
        else if (c_presentation->parsed()) result = cmd_presentation(o);
        else if (c_fixture->parsed()) result = cmd_fixture(o);
        else if (c_isocheck->parsed()) result = cmd_isocheck(o);
        else if (c_selftest->parsed()) result = cmd_selftest(o, failures);
    } catch (const UsageError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: Internal: " << e.what() << "\n";
        return 1;
    }
    out << result;
    if (failures) {
        err << "error: SelftestFailed: " << failures << " suite(s) failed\n";
        return 1;
    }
    return 0;
}

} // namespace orbitq::cli
