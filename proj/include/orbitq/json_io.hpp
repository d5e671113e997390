#pragma once

#include <json.hpp>

#include "orbitq/classify.hpp"
#include "orbitq/isomorphism.hpp"
#include "orbitq/mesh.hpp"
#include "orbitq/presentation.hpp"

namespace orbitq {

// nlohmann::json keeps object keys sorted, so dumps are deterministic.
using Json = nlohmann::json;

inline Json to_json(const DynkinDiagram& d) {
    Json arrows = Json::array();
    for (const auto& a : d.arrows()) arrows.push_back({a.from, a.to});
    return {{"kind", std::string(1, kind_letter(d.kind()))},
            {"rank", d.rank()},
            {"arrows", arrows},
            {"coxeter_number", coxeter_number(d)},
            {"loewy_length", loewy_length(d)}};
}

inline Json to_json(const TransQuiver& q) {
    Json vertices = Json::array(), arrows = Json::array(), translation = Json::object();
    for (int v = 0; v < q.vertex_count(); ++v) {
        vertices.push_back(q.label(v));
        if (q.translation(v) != TransQuiver::none) translation[q.label(v)] = q.label(q.translation(v));
    }
    for (auto [a, b] : q.arrows()) arrows.push_back({q.label(a), q.label(b)});
    return {{"vertices", vertices}, {"arrows", arrows}, {"translation", translation}};
}

inline Json to_json(const HomTable& t) {
    Json entries = Json::array();
    for (const auto& [y, k] : t.dims) entries.push_back({{"target", to_string(y)}, {"dim", k}});
    return {{"source", to_string(t.source)}, {"entries", entries}};
}

inline Json to_json(const DynkinDiagram& d, const CanonicalForm& c) {
    return {{"w", c.w},
            {"torsion", torsion_name(c.torsion)},
            {"s_parity", c.s_parity},
            {"net_shift", to_string(net_shift(d, c))},
            {"text", to_string(c)}};
}

inline Json to_json(const AsashibaType& a) {
    return {{"delta", a.delta.name()}, {"f", to_string(a.f)}, {"t", a.t}};
}

inline Json to_json(const FamilyInstance& x) {
    Json params = Json::object();
    for (const auto& [k, v] : x.params) params[k] = v;
    return {{"family", family_info(x.family).id}, {"name", display_name(x)}, {"params", params}};
}

inline Json to_json(const AlgebraPresentation& a) {
    Json arrows = Json::array(), relations = Json::array();
    for (const auto& e : a.arrows) arrows.push_back({{"name", e.name}, {"from", e.from}, {"to", e.to}});
    for (const auto& r : a.relations)
        relations.push_back({{"type", r.type == Relation::Zero ? "zero" : "comm"}, {"paths", r.paths}});
    Json out = to_json(FamilyInstance{a.family, a.params});
    out["vertices"] = a.vertices;
    out["arrows"] = arrows;
    out["relations"] = relations;
    return out;
}

inline std::string verdict_key(Verdict::Kind k) {
    switch (k) {
    case Verdict::Realizable: return "realizable";
    case Verdict::NotRealizable: return "not_realizable";
    case Verdict::NotTriangulated: return "not_triangulated";
    }
    return "?";
}

// Family parameters are also flattened to the top level.
inline Json to_json(const DynkinDiagram& d, const Verdict& v) {
    Json out{{"verdict", verdict_key(v.kind)}, {"diagram", d.name()}};
    if (v.family) {
        out["family"] = family_info(v.family->family).id;
        out["algebra"] = display_name(*v.family);
        for (const auto& [k, x] : v.family->params) out[k] = x;
    }
    if (v.asashiba) out["asashiba"] = to_json(*v.asashiba);
    if (v.canonical) out["canonical"] = to_json(d, *v.canonical);
    if (!v.variant.empty()) out["variant"] = v.variant;
    if (!v.reason.empty()) out["reason"] = v.reason;
    return out;
}

inline Json to_json(const OrbitCheck& c) {
    Json out{{"status", to_string(c.status)}, {"net_shift", to_string(c.net)}};
    if (!c.reason.empty()) out["reason"] = c.reason;
    return out;
}

inline Json to_json(const TransQuiver& q1, const TransQuiver& q2, const IsoWitness& w) {
    Json map = Json::object();
    for (int v = 0; v < q1.vertex_count(); ++v) map[q1.label(v)] = q2.label(w.vertex_map[v]);
    return {{"vertex_map", map}};
}

} // namespace orbitq
