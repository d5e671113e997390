#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orbitq/dynkin.hpp"

namespace orbitq {

// Vertex (n, i) of ZDelta: column n, diagram node i.
struct ZVertex {
    int column = 0;
    int node = 1;
    friend bool operator==(const ZVertex&, const ZVertex&) = default;
    friend auto operator<=>(const ZVertex&, const ZVertex&) = default;
};

inline std::string to_string(const ZVertex& v) {
    return "(" + std::to_string(v.column) + "," + std::to_string(v.node) + ")";
}

inline std::ostream& operator<<(std::ostream& out, const ZVertex& v) { return out << to_string(v); }

// Parses "(n,i)" with optional whitespace.
inline ZVertex parse_zvertex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    int column = 0, node = 0, used = 0;
    if (std::sscanf(s.c_str(), "(%d,%d)%n", &column, &node, &used) != 2 || used != static_cast<int>(s.size()))
        throw Error(ErrorCode::ParseError, "bad vertex '" + text + "', expected (n,i)");
    return {column, node};
}

// ZDelta arrows: (n,i)->(n,j) and (n,j)->(n+1,i) for every diagram arrow i->j.
inline std::vector<ZVertex> z_successors(const DynkinDiagram& d, ZVertex v) {
    std::vector<ZVertex> out;
    for (int j : d.successors(v.node)) out.push_back({v.column, j});
    for (int i : d.predecessors(v.node)) out.push_back({v.column + 1, i});
    return out;
}

inline std::vector<ZVertex> z_predecessors(const DynkinDiagram& d, ZVertex v) {
    std::vector<ZVertex> out;
    for (int i : d.predecessors(v.node)) out.push_back({v.column, i});
    for (int j : d.successors(v.node)) out.push_back({v.column - 1, j});
    return out;
}

inline int z_grade(const DynkinDiagram& d, ZVertex v) { return 2 * v.column + d.depth(v.node); }

// Finite translation quiver with vertices indexed 0..n-1 and printable labels.
class TransQuiver {
public:
    static constexpr int none = -1;

    int add_vertex(std::string label) {
        const int id = static_cast<int>(labels_.size());
        auto [it, fresh] = index_.emplace(label, id);
        if (!fresh) throw Error(ErrorCode::Internal, "duplicate vertex label " + label);
        labels_.push_back(std::move(label));
        succ_.emplace_back();
        pred_.emplace_back();
        tau_.push_back(none);
        tau_inv_.push_back(none);
        return id;
    }

    void add_arrow(int from, int to) {
        if (from == to) throw Error(ErrorCode::NotAdmissible, "loop at " + labels_[from]);
        if (has_arrow(from, to))
            throw Error(ErrorCode::NotAdmissible, "multiple arrows " + labels_[from] + " -> " + labels_[to]);
        succ_[from].push_back(to);
        pred_[to].push_back(from);
        arrows_.emplace_back(from, to);
    }

    void set_translation(int x, int image) {
        if (tau_[x] != none || tau_inv_[image] != none)
            throw Error(ErrorCode::Internal, "translation is not injective at " + labels_[x]);
        tau_[x] = image;
        tau_inv_[image] = x;
    }

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    const std::vector<int>& successors(int v) const { return succ_[v]; }
    const std::vector<int>& predecessors(int v) const { return pred_[v]; }
    int translation(int v) const { return tau_[v]; }
    int inverse_translation(int v) const { return tau_inv_[v]; }
    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<int> find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool has_arrow(int from, int to) const {
        return std::find(succ_[from].begin(), succ_[from].end(), to) != succ_[from].end();
    }

    bool is_stable() const {
        return std::none_of(tau_.begin(), tau_.end(), [](int t) { return t == none; }) &&
               std::none_of(tau_inv_.begin(), tau_inv_.end(), [](int t) { return t == none; });
    }

    // Vertices where predecessors(x) != successors(translation(x)).
    std::vector<int> mesh_violations() const {
        std::vector<int> bad;
        for (int x = 0; x < vertex_count(); ++x) {
            if (tau_[x] == none) continue;
            std::set<int> a(pred_[x].begin(), pred_[x].end());
            std::set<int> b(succ_[tau_[x]].begin(), succ_[tau_[x]].end());
            if (a != b) bad.push_back(x);
        }
        return bad;
    }

    // Lengths of translation orbits: cycles for stable parts, chains otherwise.
    // Chains are reported negated so cycles and chains never compare equal.
    std::multiset<int> translation_orbit_lengths() const {
        std::multiset<int> out;
        std::vector<bool> seen(labels_.size(), false);
        for (int start = 0; start < vertex_count(); ++start) {
            if (seen[start]) continue;
            int head = start;
            while (tau_inv_[head] != none && tau_inv_[head] != start) head = tau_inv_[head];
            const bool cycle = tau_inv_[head] == start;
            int len = 0;
            for (int v = cycle ? start : head; v != none && !seen[v]; v = tau_[v]) {
                seen[v] = true;
                ++len;
            }
            out.insert(cycle ? len : -len);
        }
        return out;
    }

    // Positive for a translation cycle, negated chain length otherwise.
    int translation_orbit_length(int v) const {
        int len = 1;
        int u = tau_[v];
        for (; u != none && u != v; u = tau_[u]) ++len;
        if (u == v) return len;
        for (u = tau_inv_[v]; u != none; u = tau_inv_[u]) ++len;
        return -len;
    }

private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> succ_, pred_;
    std::vector<std::pair<int, int>> arrows_;
    std::vector<int> tau_, tau_inv_;
};

inline TransQuiver z_window(const DynkinDiagram& d, int lo, int hi) {
    if (lo > hi)
        throw Error(ErrorCode::EmptyWindow,
                    "empty window " + std::to_string(lo) + ":" + std::to_string(hi));
    TransQuiver q;
    const int r = d.rank();
    auto id = [&](int n, int i) { return (n - lo) * r + (i - 1); };
    for (int n = lo; n <= hi; ++n)
        for (int i = 1; i <= r; ++i) q.add_vertex(to_string(ZVertex{n, i}));
    for (int n = lo; n <= hi; ++n)
        for (auto [i, j] : d.arrows()) {
            q.add_arrow(id(n, i), id(n, j));
            if (n + 1 <= hi) q.add_arrow(id(n, j), id(n + 1, i));
        }
    for (int n = lo + 1; n <= hi; ++n)
        for (int i = 1; i <= r; ++i) q.set_translation(id(n, i), id(n - 1, i));
    return q;
}

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

// Translation drawn as dashed arrows, x -> translation(x).
inline std::string to_dot(const TransQuiver& q, const std::string& name = "Q") {
    std::ostringstream out;
    out << "digraph " << dot_quote(name) << " {\n";
    for (int v = 0; v < q.vertex_count(); ++v) out << "  " << dot_quote(q.label(v)) << ";\n";
    for (auto [a, b] : q.arrows())
        out << "  " << dot_quote(q.label(a)) << " -> " << dot_quote(q.label(b)) << ";\n";
    for (int v = 0; v < q.vertex_count(); ++v)
        if (q.translation(v) != TransQuiver::none)
            out << "  " << dot_quote(q.label(v)) << " -> " << dot_quote(q.label(q.translation(v)))
                << " [style=dashed, constraint=false];\n";
    out << "}\n";
    return out.str();
}

} // namespace orbitq
