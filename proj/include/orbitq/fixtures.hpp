#pragma once

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbitq/error.hpp"
#include "orbitq/translation_quiver.hpp"

namespace orbitq {

// Stable parts of drawn AR-quivers.  A drawing is a strip of rows; a vertex
// is "row-x" with x the horizontal position.  Each mesh pair (upper, lower)
// contributes arrows upper-x -> lower-x -> upper-(x+1), translation moves one
// step left, and the boundary copies listed in `glue` are identified.
struct FixtureData {
    std::string name;
    std::string algebra;  // e.g. "D_{4,1,2}"
    std::string diagram;  // matching quotient ZDelta/<g>
    std::string functor;
    std::vector<std::pair<std::string, std::pair<int, int>>> rows; // row -> [x_lo, x_hi]
    std::vector<std::pair<std::string, std::string>> mesh_pairs;
    std::vector<std::pair<std::string, std::string>> glue;
    int vertex_count = 0;
};

inline const std::vector<FixtureData>& fixture_table() {
    static const std::vector<FixtureData> table{
        {"moebius_1_2", "M_{1,2}", "A3", "t^6*phi",
         {{"1", {0, 6}}, {"2", {0, 5}}, {"3", {0, 6}}},
         {{"1", "2"}, {"3", "2"}},
         {{"1-0", "3-6"}, {"3-0", "1-6"}},
         18},
        {"D_4_1_1", "D_{4,1,1}", "D4", "t^5",
         {{"1", {0, 5}}, {"2", {0, 5}}, {"3", {0, 4}}, {"4", {0, 5}}},
         {{"1", "3"}, {"2", "3"}, {"4", "3"}},
         {{"1-0", "1-5"}, {"2-0", "2-5"}, {"4-0", "4-5"}},
         20},
        {"D_4_1_2", "D_{4,1,2}", "D4", "t^5*phi",
         {{"1", {0, 5}}, {"2", {0, 5}}, {"3", {0, 4}}, {"4", {0, 5}}},
         {{"1", "3"}, {"2", "3"}, {"4", "3"}},
         {{"1-0", "2-5"}, {"2-0", "1-5"}, {"4-0", "4-5"}},
         20},
        {"D_4_1_3", "D_{4,1,3}", "D4", "t^5*rho",
         {{"1", {0, 5}}, {"2", {0, 5}}, {"3", {0, 4}}, {"4", {0, 5}}},
         {{"1", "3"}, {"2", "3"}, {"4", "3"}},
         {{"1-0", "2-5"}, {"2-0", "4-5"}, {"4-0", "1-5"}},
         20},
        {"D_6_1/3_1", "D_{6,1/3,1}", "D6", "t^3",
         {{"1", {0, 3}}, {"2", {0, 3}}, {"3", {0, 2}}, {"4", {0, 3}}, {"5", {0, 2}}, {"6", {0, 3}}},
         {{"1", "3"}, {"2", "3"}, {"4", "3"}, {"4", "5"}, {"6", "5"}},
         {{"1-0", "1-3"}, {"2-0", "2-3"}, {"4-0", "4-3"}, {"6-0", "6-3"}},
         18},
        {"E_6_1_1", "E_{6,1,1}", "E6", "t^11",
         {{"1", {0, 11}}, {"2", {0, 10}}, {"3", {0, 11}}, {"4", {0, 10}}, {"5", {0, 11}}, {"a", {0, 10}}},
         {{"1", "2"}, {"3", "2"}, {"3", "4"}, {"5", "4"}, {"3", "a"}},
         {{"1-0", "1-11"}, {"5-0", "5-11"}, {"3-0", "3-11"}},
         66},
        {"E_6_1_2", "E_{6,1,2}", "E6", "t^11*phi",
         {{"1", {0, 11}}, {"2", {0, 10}}, {"3", {0, 11}}, {"4", {0, 10}}, {"5", {0, 11}}, {"a", {0, 10}}},
         {{"1", "2"}, {"3", "2"}, {"3", "4"}, {"5", "4"}, {"3", "a"}},
         {{"1-0", "5-11"}, {"5-0", "1-11"}, {"3-0", "3-11"}},
         66},
    };
    return table;
}

inline std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& f : fixture_table()) out.push_back(f.name);
    return out;
}

inline const FixtureData& fixture_data(const std::string& name) {
    for (const auto& f : fixture_table())
        if (f.name == name) return f;
    throw Error(ErrorCode::UnknownFixture, "no fixture named '" + name + "'");
}

inline TransQuiver build_fixture(const FixtureData& f) {
    std::vector<std::string> raw;
    std::map<std::string, int> raw_id;
    for (const auto& [row, range] : f.rows)
        for (int x = range.first; x <= range.second; ++x) {
            raw_id[row + "-" + std::to_string(x)] = static_cast<int>(raw.size());
            raw.push_back(row + "-" + std::to_string(x));
        }
    auto at = [&](const std::string& label) -> int {
        auto it = raw_id.find(label);
        return it == raw_id.end() ? -1 : it->second;
    };

    std::vector<int> parent(raw.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [a, b] : f.glue) {
        if (at(a) < 0 || at(b) < 0) throw Error(ErrorCode::Internal, f.name + ": glue refers to a missing vertex");
        parent[root(at(a))] = root(at(b));
    }

    // Vertices are named by the first-listed copy.
    TransQuiver q;
    std::map<int, int> class_id;
    for (int v = 0; v < static_cast<int>(raw.size()); ++v)
        if (!class_id.count(root(v))) class_id[root(v)] = q.add_vertex(raw[v]);
    auto cls = [&](int v) { return class_id.at(root(v)); };

    std::set<std::pair<int, int>> arrows;
    for (const auto& [upper, lower] : f.mesh_pairs)
        for (const auto& [row, range] : f.rows) {
            if (row != upper) continue;
            for (int x = range.first; x <= range.second; ++x) {
                const int u = at(upper + "-" + std::to_string(x)), l = at(lower + "-" + std::to_string(x));
                const int next = at(upper + "-" + std::to_string(x + 1));
                if (u >= 0 && l >= 0) arrows.insert({cls(u), cls(l)});
                if (l >= 0 && next >= 0) arrows.insert({cls(l), cls(next)});
            }
        }
    for (auto [a, b] : arrows) q.add_arrow(a, b);

    std::map<int, int> tau;
    for (const auto& [row, range] : f.rows)
        for (int x = range.first + 1; x <= range.second; ++x) {
            const int v = cls(at(row + "-" + std::to_string(x))), image = cls(at(row + "-" + std::to_string(x - 1)));
            auto [it, fresh] = tau.emplace(v, image);
            if (!fresh && it->second != image) throw Error(ErrorCode::Internal, f.name + ": conflicting translation");
        }

    // Boundary vertices get the translation forced by the mesh condition.
    for (bool changed = true; changed;) {
        changed = false;
        std::set<int> images;
        for (auto [v, t] : tau) images.insert(t);
        for (int v = 0; v < q.vertex_count(); ++v) {
            if (tau.count(v)) continue;
            const std::set<int> want(q.predecessors(v).begin(), q.predecessors(v).end());
            std::vector<int> hits;
            for (int u = 0; u < q.vertex_count(); ++u)
                if (!images.count(u) && !want.empty() &&
                    std::set<int>(q.successors(u).begin(), q.successors(u).end()) == want)
                    hits.push_back(u);
            if (hits.size() == 1) {
                tau[v] = hits.front();
                images.insert(hits.front());
                changed = true;
            }
        }
    }
    for (auto [v, t] : tau) q.set_translation(v, t);
    ensure(q.is_stable(), f.name + ": translation is not a bijection");
    ensure(q.mesh_violations().empty(), f.name + ": mesh condition fails");
    ensure(q.vertex_count() == f.vertex_count, f.name + ": unexpected vertex count");
    return q;
}

inline TransQuiver fixture_ar(const std::string& name) { return build_fixture(fixture_data(name)); }

} // namespace orbitq
