// Batch front end: one request per invocation, JSON in, JSON out.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rveer/io.hpp"

using namespace rveer;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Flags {
    int bound = 20;
    int basepoint = -1;
    std::string output;
    bool no_timing = false;
    unsigned seed = 0;
    std::string input;
};

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_parse("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Tight: return "TIGHT";
        case VerdictKind::Overtwisted: return "OVERTWISTED";
        default: return "INCONCLUSIVE";
    }
}

// alpha and beta from {"surface", "alpha", "beta"} or {"surface", "alpha", "monodromy"} (beta = h(alpha)).
std::pair<Path, Path> arc_pair(const Surface& S, const json& j) {
    Path a = arc_from_json(S, detail::need(j, "alpha", "request"));
    if (j.contains("beta")) {
        if (j.contains("monodromy")) fail_parse("request: give either beta or monodromy");
        return {a, arc_from_json(S, j["beta"])};
    }
    MappingClass h = word_from_json(S, detail::need(j, "monodromy", "request"));
    return {a, apply(S, h, a)};
}

void check_base(const Flags& f, const Path& a, const Path& b) {
    if (a.start != b.start) fail_pre("arcs do not share the basepoint");
    if (f.basepoint >= 0 && a.start != f.basepoint) fail_pre("arcs do not start at the requested basepoint");
}

json cmd_compare(const Flags& f) {
    json j = read_file(f.input);
    detail::only_keys(j, {"surface", "alpha", "beta", "monodromy"}, "request");
    Surface S = surface_from_json(detail::need(j, "surface", "request"));
    auto [a, b] = arc_pair(S, j);
    check_base(f, a, b);
    a = normalize(S, a);
    b = normalize(S, b);
    json r{{"alpha", to_json(a)}, {"beta", to_json(b)}, {"basepoint", a.start},
           {"result", to_string(right_of(S, a, b))}};
    if (a.end == b.end) r["at_end"] = to_string(right_of_at_end(S, a, b));
    r["intersections"] = geometric_intersection(S, a, b);
    return r;
}

json cmd_check(const Flags& f) {
    OpenBook ob = book_from_json(read_file(f.input));
    Verdict v = verdict(ob, f.bound);
    json r{{"verdict", verdict_name(v.kind)}};
    if (v.witness)
        r["witness"] = json{{"arc", to_json(v.witness->arc)}, {"image", to_json(v.witness->image)},
                            {"basepoint", v.witness->arc.start}, {"comparison", "Left"}};
    if (v.kind == VerdictKind::Tight) r["certificate"] = json{{"positive_word", word_to_json(ob.S, ob.h)}};
    r["bound"] = v.bound;
    return r;
}

json cmd_chain(const Flags& f) {
    json j = read_file(f.input);
    detail::only_keys(j, {"surface", "alpha", "beta", "monodromy"}, "request");
    Surface S = surface_from_json(detail::need(j, "surface", "request"));
    auto [a, b] = arc_pair(S, j);
    check_base(f, a, b);
    Chain c = rightward_chain(S, a, b);
    json arcs = json::array(), steps = json::array();
    for (const auto& p : c.arcs) arcs.push_back(to_json(p));
    for (auto s : c.steps) steps.push_back(to_string(s));
    if (!verify_chain(S, c.arcs, a, b)) fail_inv("rightward chain failed verification");
    return json{{"length", c.arcs.size()}, {"arcs", arcs}, {"steps", steps}, {"verified", true}};
}

json cmd_stabilize(const Flags& f) {
    json j = read_file(f.input);
    detail::only_keys(j, {"book", "arc", "sign", "rv"}, "request");
    OpenBook ob = book_from_json(detail::need(j, "book", "request"));
    if (j.contains("rv")) {
        // positive stabilizations attaching a lantern piece at every boundary component
        if (!j["rv"].is_boolean() || !j["rv"].get<bool>() || j.contains("arc") || j.contains("sign"))
            fail_parse("rv: expected true, without arc or sign");
        OpenBook out = rv_stabilize(ob);
        return json{{"euler", out.S.euler()}, {"boundary", out.S.nboundary()}, {"book", book_to_json(out)}};
    }
    int sign = j.contains("sign") ? detail::as_int(j["sign"], "sign") : 1;
    if (sign != 1 && sign != -1) fail_parse("sign must be 1 or -1");
    OpenBook out = stabilize(ob, arc_from_json(ob.S, detail::need(j, "arc", "request")), sign);
    const auto& rec = out.history.back();
    return json{{"sign", sign},
                {"euler", out.S.euler()},
                {"boundary", out.S.nboundary()},
                {"gamma", rec.gamma.sides},
                {"cocore", to_json(rec.cocore)},
                {"book", book_to_json(out)}};
}

json cmd_detect(const Flags& f) {
    OpenBook ob = book_from_json(read_file(f.input));
    auto d = detect_stabilization(ob, f.bound);
    json r{{"found", static_cast<bool>(d)}};
    if (d) {
        r["arc"] = to_json(d->arc);
        r["destabilized"] = d->book ? book_to_json(*d->book) : json(nullptr);
        if (d->book) r["destabilized_euler"] = d->book->S.euler();
    }
    r["bound"] = f.bound;
    return r;
}

json cmd_relation(const Flags& f) {
    json j = read_file(f.input);
    detail::only_keys(j, {"surface", "lhs", "rhs"}, "request");
    Surface S = surface_from_json(detail::need(j, "surface", "request"));
    MappingClass l = word_from_json(S, detail::need(j, "lhs", "request"));
    MappingClass r = word_from_json(S, detail::need(j, "rhs", "request"));
    return json{{"holds", verify_relation(S, l, r)}, {"filling_arcs", filling_arc_system(S).size()}};
}

json cmd_enumerate(const Flags& f) {
    json j = read_file(f.input);
    detail::only_keys(j, {"surface"}, "request");
    Surface S = surface_from_json(detail::need(j, "surface", "request"));
    if (f.basepoint >= S.nmarks) fail_pre("unknown basepoint");
    auto arcs = enumerate_arcs(S, f.basepoint, f.bound);
    json list = json::array();
    for (const auto& p : arcs) list.push_back(to_json(p));
    return json{{"count", arcs.size()}, {"arcs", list}, {"bound", f.bound}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arc, twist and open book calculus on surfaces with boundary"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags f;
    app.add_option("--bound", f.bound, "weight bound for arc searches")->check(CLI::PositiveNumber);
    app.add_option("--basepoint", f.basepoint, "marked point id")->check(CLI::NonNegativeNumber);
    app.add_option("--output", f.output, "write the report here instead of stdout");
    app.add_flag("--no-timing", f.no_timing, "omit runtime_ms");
    app.add_option("--seed", f.seed, "seed for randomized subcommands");
    app.set_version_flag("--version", kVersion);

    using Fn = json (*)(const Flags&);
    const std::vector<std::tuple<const char*, const char*, Fn>> cmds{
        {"compare", "compare two arcs at their common start", cmd_compare},
        {"check", "tight/overtwisted verdict for an open book", cmd_check},
        {"chain", "rightward chain between two arcs", cmd_chain},
        {"stabilize", "stabilize an open book across an arc", cmd_stabilize},
        {"detect", "find a destabilizing arc", cmd_detect},
        {"relation", "test a relation between two twist words", cmd_relation},
        {"enumerate", "list essential arcs up to the bound", cmd_enumerate},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [name, help, fn] : cmds) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("input", f.input, "request file")->required();
        subs.push_back(s);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(ErrorKind::Parse);
    }

    try {
        auto t0 = std::chrono::steady_clock::now();
        json payload;
        std::string name;
        for (size_t i = 0; i < subs.size(); ++i)
            if (subs[i]->parsed()) {
                name = std::get<0>(cmds[i]);
                payload = std::get<2>(cmds[i])(f);
            }
        json report{{"command", name}};
        for (auto& [k, v] : payload.items()) report[k] = v;
        report["provenance"] = json{{"tool", "rveer"}, {"version", kVersion}, {"bound", f.bound}, {"seed", f.seed}};
        if (!f.no_timing) {
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            report["runtime_ms"] = static_cast<long>(ms + 0.5);
        }
        std::string text = report.dump(2) + "\n";
        if (f.output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(f.output);
            if (!out) fail_parse("cannot write '" + f.output + "'");
            out << text;
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "rveer: " << e.what() << "\n";
        return static_cast<int>(e.kind);
    } catch (const std::exception& e) {
        std::cerr << "rveer: internal error: " << e.what() << "\n";
        return static_cast<int>(ErrorKind::Invariant);
    }
}
