#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "orbitq/translation_quiver.hpp"

namespace orbitq {

// Index-based: vertex v of the first quiver goes to vertex_map[v] of the
// second, arrow a to arrow_map[a].
struct IsoWitness {
    std::vector<int> vertex_map;
    std::vector<int> arrow_map;
};

inline bool is_valid_witness(const TransQuiver& q1, const TransQuiver& q2, const IsoWitness& w) {
    const int n = q1.vertex_count();
    if (q2.vertex_count() != n || q1.arrow_count() != q2.arrow_count()) return false;
    if (static_cast<int>(w.vertex_map.size()) != n || static_cast<int>(w.arrow_map.size()) != q1.arrow_count())
        return false;
    std::vector<int> hit(n, 0), ahit(q2.arrow_count(), 0);
    for (int v : w.vertex_map)
        if (v < 0 || v >= n || hit[v]++) return false;
    for (int a = 0; a < q1.arrow_count(); ++a) {
        const int b = w.arrow_map[a];
        if (b < 0 || b >= q2.arrow_count() || ahit[b]++) return false;
        if (w.vertex_map[q1.arrows()[a].first] != q2.arrows()[b].first ||
            w.vertex_map[q1.arrows()[a].second] != q2.arrows()[b].second)
            return false;
    }
    for (int v = 0; v < n; ++v) {
        const int t1 = q1.translation(v), t2 = q2.translation(w.vertex_map[v]);
        if ((t1 == TransQuiver::none) != (t2 == TransQuiver::none)) return false;
        if (t1 != TransQuiver::none && w.vertex_map[t1] != t2) return false;
    }
    return true;
}

namespace detail {

using VertexKey = std::tuple<int, int, int, std::vector<std::pair<int, int>>>;

inline VertexKey vertex_key(const TransQuiver& q, int v) {
    std::vector<std::pair<int, int>> around;
    for (int u : q.successors(v)) around.emplace_back(1, static_cast<int>(q.successors(u).size()));
    for (int u : q.predecessors(v)) around.emplace_back(0, static_cast<int>(q.predecessors(u).size()));
    std::sort(around.begin(), around.end());
    return {static_cast<int>(q.predecessors(v).size()), static_cast<int>(q.successors(v).size()),
            q.translation_orbit_length(v), std::move(around)};
}

enum class Link { Succ, Pred, Tau, TauInv };

inline std::vector<int> linked(const TransQuiver& q, int v, Link l) {
    switch (l) {
    case Link::Succ: return q.successors(v);
    case Link::Pred: return q.predecessors(v);
    case Link::Tau: return q.translation(v) == TransQuiver::none ? std::vector<int>{} : std::vector{q.translation(v)};
    case Link::TauInv:
        return q.inverse_translation(v) == TransQuiver::none ? std::vector<int>{}
                                                             : std::vector{q.inverse_translation(v)};
    }
    return {};
}

class IsoSearch {
public:
    IsoSearch(const TransQuiver& a, const TransQuiver& b) : a_(a), b_(b) {}

    std::optional<std::vector<int>> run() {
        const int n = a_.vertex_count();
        for (int v = 0; v < n; ++v) {
            key_a_.push_back(vertex_key(a_, v));
            key_b_.push_back(vertex_key(b_, v));
        }
        {
            auto ka = key_a_, kb = key_b_;
            std::sort(ka.begin(), ka.end());
            std::sort(kb.begin(), kb.end());
            if (ka != kb) return std::nullopt;
        }
        std::map<VertexKey, int> freq;
        for (const auto& k : key_a_) ++freq[k];
        // Breadth-first order so that every vertex after a component root has
        // an already placed neighbour to propagate from.
        std::vector<bool> placed(n, false);
        while (static_cast<int>(order_.size()) < n) {
            int root = -1;
            for (int v = 0; v < n; ++v)
                if (!placed[v] && (root < 0 || freq[key_a_[v]] < freq[key_a_[root]])) root = v;
            placed[root] = true;
            order_.push_back(root);
            anchor_.push_back({-1, Link::Succ});
            for (std::size_t k = order_.size() - 1; k < order_.size(); ++k) {
                const int v = order_[k];
                for (Link l : {Link::Succ, Link::Pred, Link::Tau, Link::TauInv})
                    for (int u : linked(a_, v, l))
                        if (!placed[u]) {
                            placed[u] = true;
                            order_.push_back(u);
                            anchor_.push_back({v, l});
                        }
            }
        }
        map_.assign(n, -1);
        inv_.assign(n, -1);
        if (!extend(0)) return std::nullopt;
        return map_;
    }

private:
    bool consistent(int v, int w) const {
        if (key_a_[v] != key_b_[w]) return false;
        for (Link l : {Link::Succ, Link::Pred, Link::Tau, Link::TauInv}) {
            const auto na = linked(a_, v, l), nb = linked(b_, w, l);
            if (na.size() != nb.size()) return false;
            for (int u : na)
                if (map_[u] >= 0 && std::find(nb.begin(), nb.end(), map_[u]) == nb.end()) return false;
            for (int z : nb)
                if (inv_[z] >= 0 && std::find(na.begin(), na.end(), inv_[z]) == na.end()) return false;
        }
        return true;
    }

    bool extend(std::size_t k) {
        if (k == order_.size()) return true;
        const int v = order_[k];
        std::vector<int> candidates;
        if (anchor_[k].first < 0) {
            for (int w = 0; w < b_.vertex_count(); ++w)
                if (inv_[w] < 0) candidates.push_back(w);
        } else {
            candidates = linked(b_, map_[anchor_[k].first], anchor_[k].second);
        }
        for (int w : candidates) {
            if (inv_[w] >= 0 || !consistent(v, w)) continue;
            map_[v] = w;
            inv_[w] = v;
            if (extend(k + 1)) return true;
            map_[v] = -1;
            inv_[w] = -1;
        }
        return false;
    }

    const TransQuiver& a_;
    const TransQuiver& b_;
    std::vector<VertexKey> key_a_, key_b_;
    std::vector<int> order_;
    std::vector<std::pair<int, Link>> anchor_;
    std::vector<int> map_, inv_;
};

} // namespace detail

inline std::optional<IsoWitness> iso_check(const TransQuiver& q1, const TransQuiver& q2) {
    if (q1.vertex_count() != q2.vertex_count() || q1.arrow_count() != q2.arrow_count()) return std::nullopt;
    if (q1.translation_orbit_lengths() != q2.translation_orbit_lengths()) return std::nullopt;
    auto vmap = detail::IsoSearch(q1, q2).run();
    if (!vmap) return std::nullopt;
    IsoWitness w{*vmap, {}};
    std::map<std::pair<int, int>, int> arrow_id;
    for (int b = 0; b < q2.arrow_count(); ++b) arrow_id[q2.arrows()[b]] = b;
    for (auto [x, y] : q1.arrows()) w.arrow_map.push_back(arrow_id.at({w.vertex_map[x], w.vertex_map[y]}));
    ensure(is_valid_witness(q1, q2, w), "isomorphism search produced an invalid witness");
    return w;
}

} // namespace orbitq
