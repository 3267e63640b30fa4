#pragma once

// JSON reading and writing of surfaces, arcs, twist words and open books.
#include <json.hpp>

#include "openbook.hpp"

namespace rveer {

using json = nlohmann::ordered_json;

namespace detail {

inline void only_keys(const json& j, std::initializer_list<const char*> keys, const char* where) {
    if (!j.is_object()) fail_parse(std::string(where) + ": expected an object");
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* a : keys) ok |= k == a;
        if (!ok) fail_parse(std::string(where) + ": unknown field '" + k + "'");
    }
}

inline const json& need(const json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end()) fail_parse(std::string(where) + ": missing field '" + key + "'");
    return *it;
}

inline int as_int(const json& j, const char* where) {
    if (!j.is_number_integer()) fail_parse(std::string(where) + ": expected an integer");
    return j.get<int>();
}

inline std::vector<int> int_list(const json& j, const char* where) {
    if (!j.is_array()) fail_parse(std::string(where) + ": expected an array of integers");
    std::vector<int> v;
    for (const auto& x : j) v.push_back(as_int(x, where));
    return v;
}

// Orient every triangle consistently; flipped triangles get their sides 1 and 2 swapped.
inline std::vector<int> orient(int ntri, const std::vector<std::array<int, 3>>& gl) {
    std::vector<std::vector<std::pair<int, int>>> adj(ntri);
    for (const auto& g : gl) {
        adj[tri_of(g[0])].push_back({tri_of(g[1]), g[2]});
        adj[tri_of(g[1])].push_back({tri_of(g[0]), g[2]});
    }
    std::vector<int> sign(ntri, 0);
    for (int r = 0; r < ntri; ++r) {
        if (sign[r]) continue;
        sign[r] = 1;
        std::vector<int> st{r};
        while (!st.empty()) {
            int t = st.back();
            st.pop_back();
            for (auto [u, pres] : adj[t]) {
                int want = pres ? -sign[t] : sign[t];
                if (!sign[u]) {
                    sign[u] = want;
                    st.push_back(u);
                } else if (sign[u] != want) {
                    fail_pre("non-orientable gluing");
                }
            }
        }
    }
    std::vector<int> map(3 * ntri);
    for (int s = 0; s < 3 * ntri; ++s) {
        int k = s % 3;
        map[s] = sign[tri_of(s)] > 0 || k == 0 ? s : 3 * tri_of(s) + 3 - k;
    }
    return map;
}

}  // namespace detail

inline json to_json(const Path& p) { return json{{"start", p.start}, {"end", p.end}, {"sides", p.sides}}; }

inline Loop loop_from_json(const Surface& S, const json& j, const char* where) {
    Loop l{detail::int_list(j, where)};
    if (!valid_loop(S, l)) fail_pre(std::string(where) + ": not a closed curve on this surface");
    return make_loop(S, l.sides);
}

inline Path arc_from_json(const Surface& S, const json& j) {
    if (j.is_string()) {
        auto it = S.arcs.find(j.get<std::string>());
        if (it == S.arcs.end()) fail_parse("unknown arc '" + j.get<std::string>() + "'");
        return it->second;
    }
    detail::only_keys(j, {"start", "end", "sides"}, "arc");
    Path p{detail::as_int(detail::need(j, "start", "arc"), "arc.start"),
           detail::as_int(detail::need(j, "end", "arc"), "arc.end"),
           detail::int_list(detail::need(j, "sides", "arc"), "arc.sides")};
    if (!valid_path(S, p)) fail_pre("arc is not a path on this surface");
    return reduce(S, p);
}

inline void read_tables(Surface& S, const json& j) {
    if (auto it = j.find("curves"); it != j.end()) {
        if (!it->is_object()) fail_parse("curves: expected an object");
        for (const auto& [k, v] : it->items()) S.curves[k] = loop_from_json(S, v, "curve");
    }
    if (auto it = j.find("arcs"); it != j.end()) {
        if (!it->is_object()) fail_parse("arcs: expected an object");
        for (const auto& [k, v] : it->items()) {
            if (v.is_string()) fail_parse("arcs: table entries must be literals");
            S.arcs[k] = arc_from_json(S, v);
        }
    }
}

// {"standard": {"genus", "boundary"}} or {"triangles", "gluings", "marked"}, plus optional "curves", "arcs".
// Side k of triangle T has id 3T+k; a gluing [a, b] identifies a and b reversing orientation,
// [a, b, "preserving"] without reversing.
inline Surface surface_from_json(const json& j) {
    if (j.is_object() && j.contains("standard")) {
        detail::only_keys(j, {"standard", "curves", "arcs"}, "surface");
        const json& st = j["standard"];
        detail::only_keys(st, {"genus", "boundary"}, "standard");
        Surface S = build_standard(detail::as_int(detail::need(st, "genus", "standard"), "genus"),
                                   detail::as_int(detail::need(st, "boundary", "standard"), "boundary"));
        read_tables(S, j);
        return S;
    }
    detail::only_keys(j, {"triangles", "gluings", "marked", "curves", "arcs"}, "surface");
    int n = detail::as_int(detail::need(j, "triangles", "surface"), "triangles");
    if (n < 1) fail_pre("surface has no triangles");
    const json& gj = detail::need(j, "gluings", "surface");
    if (!gj.is_array()) fail_parse("gluings: expected an array");
    std::vector<std::array<int, 3>> gl;
    for (const auto& g : gj) {
        if (!g.is_array() || g.size() < 2 || g.size() > 3) fail_parse("gluing: expected [a, b] or [a, b, \"preserving\"]");
        int a = detail::as_int(g[0], "gluing"), b = detail::as_int(g[1], "gluing");
        int pres = 0;
        if (g.size() == 3) {
            if (!g[2].is_string() || (g[2] != "preserving" && g[2] != "reversing"))
                fail_parse("gluing: third entry must be \"preserving\" or \"reversing\"");
            pres = g[2] == "preserving";
        }
        if (a < 0 || b < 0 || a >= 3 * n || b >= 3 * n) fail_pre("gluing refers to unknown side");
        gl.push_back({a, b, pres});
    }
    auto map = detail::orient(n, gl);
    Surface S;
    S.ntri = n;
    S.glue.assign(3 * n, -1);
    S.side_marks.assign(3 * n, {});
    for (const auto& g : gl) {
        int a = map[g[0]], b = map[g[1]];
        if (a == b) fail_pre("gluing is not an involution (side glued to itself)");
        if (S.glue[a] >= 0 || S.glue[b] >= 0) fail_pre("gluing is not an involution (side used twice)");
        S.glue[a] = b;
        S.glue[b] = a;
    }
    if (auto it = j.find("marked"); it != j.end()) {
        if (!it->is_object()) fail_parse("marked: expected an object");
        for (const auto& [k, v] : it->items()) {
            int s = -1;
            try {
                size_t pos = 0;
                s = std::stoi(k, &pos);
                if (pos != k.size()) throw std::invalid_argument(k);
            } catch (const std::exception&) {
                fail_parse("marked: keys must be side ids");
            }
            if (s < 0 || s >= 3 * n) fail_pre("marked: unknown side");
            auto ms = detail::int_list(v, "marked");
            if (map[3 * tri_of(s) + 1] != 3 * tri_of(s) + 1) std::reverse(ms.begin(), ms.end());  // flipped
            S.side_marks[map[s]] = ms;
        }
    }
    S.finalize();
    add_basic_tables(S);
    // tables refer to the input side ids
    json k = j;
    auto remap = [&](json& sides) {
        for (auto& x : sides)
            if (x.is_number_integer() && x.get<int>() >= 0 && x.get<int>() < 3 * n) x = map[x.get<int>()];
    };
    if (k.contains("curves") && k["curves"].is_object())
        for (auto& [nm, v] : k["curves"].items())
            if (v.is_array()) remap(v);
    if (k.contains("arcs") && k["arcs"].is_object())
        for (auto& [nm, v] : k["arcs"].items())
            if (v.is_object() && v.contains("sides") && v["sides"].is_array()) remap(v["sides"]);
    read_tables(S, k);
    return S;
}

inline json surface_to_json(const Surface& S) {
    if (S.nboundary() >= 1) {
        Surface T = build_standard(S.genus, S.nboundary());
        if (T.glue == S.glue && T.side_marks == S.side_marks) {
            json j{{"standard", {{"genus", S.genus}, {"boundary", S.nboundary()}}}};
            json cs = json::object(), as = json::object();
            for (const auto& [n, c] : S.curves)
                if (!T.curves.count(n) || T.curves.at(n) != c) cs[n] = c.sides;
            for (const auto& [n, a] : S.arcs)
                if (!T.arcs.count(n) || T.arcs.at(n) != a) as[n] = to_json(a);
            if (!cs.empty()) j["curves"] = cs;
            if (!as.empty()) j["arcs"] = as;
            return j;
        }
    }
    json gl = json::array(), mk = json::object(), cs = json::object(), as = json::object();
    for (int s = 0; s < S.nsides(); ++s)
        if (S.glue[s] > s) gl.push_back({s, S.glue[s]});
    for (int s = 0; s < S.nsides(); ++s)
        if (!S.side_marks[s].empty()) mk[std::to_string(s)] = S.side_marks[s];
    for (const auto& [n, c] : S.curves) cs[n] = c.sides;
    for (const auto& [n, a] : S.arcs) as[n] = to_json(a);
    return json{{"triangles", S.ntri}, {"gluings", gl}, {"marked", mk}, {"curves", cs}, {"arcs", as}};
}

// ["+a", "-b", "+boundary:0"] or inline {"curve": [sides] | "name", "exp": k}; leftmost letter acts last.
inline MappingClass word_from_json(const Surface& S, const json& j) {
    if (!j.is_array()) fail_parse("monodromy: expected an array");
    MappingClass h;
    for (const auto& x : j) {
        if (x.is_string()) {
            std::string w = x.get<std::string>();
            if (w.size() < 2 || (w[0] != '+' && w[0] != '-')) fail_parse("twist '" + w + "': expected +name or -name");
            std::string n = w.substr(1);
            auto it = S.curves.find(n);
            if (it == S.curves.end()) fail_parse("unknown curve '" + n + "'");
            h.word.push_back({it->second, w[0] == '+' ? 1 : -1, n});
            continue;
        }
        detail::only_keys(x, {"curve", "exp"}, "twist");
        const json& c = detail::need(x, "curve", "twist");
        int e = x.contains("exp") ? detail::as_int(x["exp"], "twist.exp") : 1;
        if (e == 0) fail_parse("twist.exp must be nonzero");
        if (c.is_string()) {
            auto it = S.curves.find(c.get<std::string>());
            if (it == S.curves.end()) fail_parse("unknown curve '" + c.get<std::string>() + "'");
            h.word.push_back({it->second, e, c.get<std::string>()});
        } else {
            h.word.push_back({loop_from_json(S, c, "twist.curve"), e, ""});
        }
    }
    for (const auto& t : h.word) check_twist_curve(S, t.curve);
    return h;
}

inline json word_to_json(const Surface& S, const MappingClass& h) {
    json out = json::array();
    for (const auto& t : h.word) {
        auto it = S.curves.find(t.name);
        if (!t.name.empty() && it != S.curves.end() && it->second == t.curve) {
            for (int k = 0; k < std::abs(t.exp); ++k) out.push_back((t.exp > 0 ? "+" : "-") + t.name);
        } else {
            out.push_back(json{{"curve", t.curve.sides}, {"exp", t.exp}});
        }
    }
    return out;
}

// {"surface", "monodromy", "history"}: the monodromy acts on "surface"; history entries
// {"arc", "sign"} are stabilizations replayed in order.
inline OpenBook book_from_json(const json& j) {
    detail::only_keys(j, {"surface", "monodromy", "history"}, "open book");
    OpenBook ob;
    ob.S = surface_from_json(detail::need(j, "surface", "open book"));
    ob.h = j.contains("monodromy") ? word_from_json(ob.S, j["monodromy"]) : MappingClass{};
    if (j.contains("history")) {
        if (!j["history"].is_array()) fail_parse("history: expected an array");
        for (const auto& r : j["history"]) {
            detail::only_keys(r, {"arc", "sign"}, "history entry");
            int sign = r.contains("sign") ? detail::as_int(r["sign"], "sign") : 1;
            if (sign < -1 || sign > 1) fail_parse("history entry: sign must be -1, 0 or 1");
            ob = stabilize(ob, arc_from_json(ob.S, detail::need(r, "arc", "history entry")), sign);
        }
    }
    return ob;
}

inline json book_to_json(const OpenBook& ob) {
    const Surface& base = ob.history.empty() ? ob.S : ob.history.front().before;
    const MappingClass& h = ob.history.empty() ? ob.h : ob.history.front().h_before;
    json hist = json::array();
    for (const auto& r : ob.history) hist.push_back(json{{"arc", to_json(r.arc)}, {"sign", r.sign}});
    return json{{"surface", surface_to_json(base)}, {"monodromy", word_to_json(base, h)}, {"history", hist}};
}

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail_parse(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace rveer
