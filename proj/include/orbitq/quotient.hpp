#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbitq/automorphism.hpp"

namespace orbitq {

// The cyclic group <g> acting on ZDelta.  g^period is the first power that is
// a pure translation; it moves columns by column_step (0 for a finite group).
class CyclicAction {
public:
    explicit CyclicAction(const Automorphism& g) : g_(g), powers_{Automorphism::identity(g.diagram())} {
        for (int n = 1; n <= 64; ++n) {
            Automorphism next = compose(g_, powers_.back());
            if (auto shift = next.translation_shift()) {
                period_ = n;
                column_step_ = std::abs(*shift);
                return;
            }
            powers_.push_back(next);
        }
        throw Error(ErrorCode::Internal, "no power of the generator is a translation");
    }

    const Automorphism& generator() const { return g_; }
    int period() const { return period_; }
    int column_step() const { return column_step_; }
    bool finite() const { return column_step_ == 0; }

    // Average number of columns moved per application of g.
    Rational net() const { return Rational(column_step_, period_); }

    // g^j for 0 <= j < period.
    const Automorphism& power(int j) const { return powers_[j]; }

    // Lexicographically smallest (column, node) in the orbit, with columns
    // reduced into [0, column_step) when the orbit is infinite.
    ZVertex representative(ZVertex v) const {
        std::optional<ZVertex> best;
        for (int j = 0; j < period_; ++j) {
            ZVertex u = powers_[j](v);
            if (column_step_) u.column = ((u.column % column_step_) + column_step_) % column_step_;
            if (!best || u < *best) best = u;
        }
        return *best;
    }

    // A vertex fixed by some non-identity element of the group.
    std::optional<ZVertex> fixed_point() const {
        const int r = g_.diagram().rank();
        for (int j = 1; j < period_; ++j)
            for (int i = 1; i <= r; ++i) {
                const ZVertex u = powers_[j]({0, i});
                if (u.node != i) continue;
                if (column_step_ == 0 ? u.column == 0 : u.column % column_step_ == 0) return ZVertex{0, i};
            }
        return std::nullopt;
    }

private:
    Automorphism g_;
    std::vector<Automorphism> powers_;
    int period_ = 0;
    int column_step_ = 0;
};

struct AdmissibilityWitness {
    ZVertex center;
    ZVertex first, second; // distinct points of one orbit inside {x} with its neighbours
    bool successors = true;
};

inline std::string to_string(const AdmissibilityWitness& w) {
    return "the orbit of " + to_string(w.first) + " meets {" + to_string(w.center) + "} with its " +
           (w.successors ? "successors" : "predecessors") + " twice, at " + to_string(w.first) + " and " +
           to_string(w.second);
}

struct AdmissibilityResult {
    bool admissible = true;
    std::optional<AdmissibilityWitness> witness;
};

inline int admissibility_radius(const CyclicAction& act) {
    const Rational net = act.net();
    const long long ceil_net = (net.numerator() + net.denominator() - 1) / net.denominator();
    return static_cast<int>(ceil_net) + coxeter_number(act.generator().diagram());
}

inline AdmissibilityResult is_admissible(const CyclicAction& act) {
    const DynkinDiagram& d = act.generator().diagram();
    const int radius = admissibility_radius(act);
    for (int c = -radius; c <= radius; ++c)
        for (int i = 1; i <= d.rank(); ++i) {
            const ZVertex x{c, i};
            for (bool forward : {true, false}) {
                std::map<ZVertex, ZVertex> seen;
                std::vector<ZVertex> pts = forward ? z_successors(d, x) : z_predecessors(d, x);
                pts.insert(pts.begin(), x);
                for (const ZVertex& p : pts) {
                    auto [it, fresh] = seen.emplace(act.representative(p), p);
                    if (!fresh) return {false, AdmissibilityWitness{x, it->second, p, forward}};
                }
            }
        }
    return {};
}

inline AdmissibilityResult is_admissible(const Automorphism& g) { return is_admissible(CyclicAction(g)); }

inline TransQuiver quotient(const CyclicAction& act) {
    const DynkinDiagram& d = act.generator().diagram();
    if (act.finite())
        throw Error(ErrorCode::InfiniteQuotient, "the generator has net shift 0, so the quotient is infinite");
    if (auto fp = act.fixed_point())
        throw Error(ErrorCode::NotFree, "a non-identity element of the group fixes " + to_string(*fp));
    if (auto adm = is_admissible(act); !adm.admissible)
        throw Error(ErrorCode::NotAdmissible, to_string(*adm.witness));

    const int step = act.column_step();
    std::set<ZVertex> reps;
    for (int c = 0; c < step; ++c)
        for (int i = 1; i <= d.rank(); ++i) reps.insert(act.representative({c, i}));
    ensure(static_cast<long long>(reps.size()) * act.period() == static_cast<long long>(step) * d.rank(),
           "orbit count does not match rank times net shift");

    TransQuiver q;
    std::map<ZVertex, int> id;
    for (const ZVertex& v : reps) id[v] = q.add_vertex(to_string(v));

    std::set<std::pair<ZVertex, ZVertex>> arrows;
    long long strip_arrows = 0;
    for (int c = 0; c < step; ++c)
        for (int i = 1; i <= d.rank(); ++i)
            for (const ZVertex& u : z_successors(d, {c, i})) {
                ++strip_arrows;
                const ZVertex a = act.representative({c, i}), b = act.representative(u);
                if (a == b) throw Error(ErrorCode::NotAdmissible, "the quotient has a loop at " + to_string(a));
                arrows.insert({a, b});
            }
    if (static_cast<long long>(arrows.size()) * act.period() != strip_arrows)
        throw Error(ErrorCode::NotAdmissible, "distinct arrow orbits collapse onto the same pair of vertices");
    for (auto [a, b] : arrows) q.add_arrow(id.at(a), id.at(b));
    for (const ZVertex& v : reps) q.set_translation(id.at(v), id.at(act.representative({v.column - 1, v.node})));
    return q;
}

inline TransQuiver quotient(const Automorphism& g) { return quotient(CyclicAction(g)); }

inline TransQuiver quotient(const DynkinDiagram& d, const Automorphism& g) {
    if (!(g.diagram() == d)) throw Error(ErrorCode::DiagramMismatch, "automorphism lives on " + g.diagram().name());
    return quotient(g);
}

} // namespace orbitq
