#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "orbitq/mesh.hpp"
#include "orbitq/quotient.hpp"

namespace orbitq {

// Positive net translation plus a free admissible action is the sufficient
// condition used for the orbit category to be triangulated.  Failures are
// reported against that criterion, not as a proof of non-triangulability.
struct OrbitCheck {
    enum Status { Ok, NotTriangulated, Degenerate } status = Ok;
    Rational net{0};
    std::string reason;
    bool ok() const { return status == Ok; }
};

inline std::string to_string(OrbitCheck::Status s) {
    switch (s) {
    case OrbitCheck::Ok: return "ok";
    case OrbitCheck::NotTriangulated: return "not_triangulated";
    case OrbitCheck::Degenerate: return "degenerate";
    }
    return "?";
}

inline OrbitCheck check_orbit(const DynkinDiagram& d, const Automorphism& g) {
    if (!(g.diagram() == d)) throw Error(ErrorCode::DiagramMismatch, "automorphism lives on " + g.diagram().name());
    const CyclicAction act(g);
    OrbitCheck out;
    out.net = act.net();
    if (act.finite()) {
        out.status = OrbitCheck::NotTriangulated;
        out.reason = "net shift 0: the group is finite and the quotient infinite";
        return out;
    }
    if (out.net < 1) {
        out.status = OrbitCheck::NotTriangulated;
        out.reason = "net shift " + to_string(out.net) + " is below 1";
        return out;
    }
    try {
        quotient(act);
    } catch (const Error& e) {
        out.status = OrbitCheck::Degenerate;
        out.reason = std::string(to_string(e.code())) + ": " + e.what();
    }
    return out;
}

// Objects are the quotient vertices, named by their orbit representatives;
// Hom(x, y) = (+)_n Hom_mesh(x, g^n y).
class OrbitCategory {
public:
    OrbitCategory(const DynkinDiagram& d, const Automorphism& g) : diagram_(d), action_(g) {
        if (!(g.diagram() == d)) throw Error(ErrorCode::DiagramMismatch, "automorphism lives on " + g.diagram().name());
        const OrbitCheck c = check_orbit(d, g);
        if (!c.ok()) {
            if (c.status == OrbitCheck::NotTriangulated)
                throw Error(ErrorCode::InfiniteQuotient, "orbit category is not triangulated: " + c.reason);
            quotient(action_); // rethrows the specific refusal
        }
        quiver_ = quotient(action_);
        // Columns of g^n y drift from n * net by at most h (torsion and S move
        // columns by a bounded amount), and mesh homs vanish past m columns.
        const Rational reach = Rational(loewy_length(d) + coxeter_number(d) + action_.column_step() + 1) / action_.net();
        bound_ = static_cast<int>((reach.numerator() + reach.denominator() - 1) / reach.denominator());
        for (int n = -bound_ - guard; n <= bound_ + guard; ++n) powers_.push_back(power(g, n));
    }

    const DynkinDiagram& diagram() const { return diagram_; }
    const CyclicAction& action() const { return action_; }
    const TransQuiver& quiver() const { return quiver_; }
    int summation_bound() const { return bound_; }

    ZVertex object(const std::string& label) const {
        ZVertex v;
        try {
            v = parse_zvertex(label);
        } catch (const Error&) {
            throw Error(ErrorCode::VertexNotInQuotient, "'" + label + "' is not a vertex label");
        }
        check_object(v);
        return v;
    }

    void check_object(ZVertex v) const {
        if (v.node < 1 || v.node > diagram_.rank() || action_.representative(v) != v)
            throw Error(ErrorCode::VertexNotInQuotient,
                        to_string(v) + " is not an orbit representative of the quotient");
    }

    // Any lifts may be passed; the sum is over the whole group.
    int hom_dim_lifted(ZVertex x, ZVertex y) const {
        int total = 0;
        for (int n = -bound_ - guard; n <= bound_ + guard; ++n) {
            const int k = mesh_hom(x, powers_[n + bound_ + guard](y));
            ensure(k == 0 || std::abs(n) <= bound_, "orbit hom contribution inside the guard band");
            total += k;
        }
        return total;
    }

    int hom_dim(ZVertex x, ZVertex y) const {
        check_object(x);
        check_object(y);
        return hom_dim_lifted(x, y);
    }

    int hom_dim(const std::string& x, const std::string& y) const { return hom_dim(object(x), object(y)); }

    // dim Hom_mesh(x, y), using translation invariance to share one table per row.
    int mesh_hom(ZVertex x, ZVertex y) const {
        const HomTable& t = table(x.node);
        return t.at({y.column - x.column, y.node});
    }

private:
    static constexpr int guard = 2;

    const HomTable& table(int node) const {
        {
            std::shared_lock lock(mutex_);
            if (auto it = cache_.find(node); it != cache_.end()) return it->second;
        }
        HomTable t = hom_dims_linear(diagram_, {0, node});
        std::unique_lock lock(mutex_);
        return cache_.try_emplace(node, std::move(t)).first->second;
    }

    DynkinDiagram diagram_;
    CyclicAction action_;
    TransQuiver quiver_;
    int bound_ = 0;
    std::vector<Automorphism> powers_; // g^n for n in [-bound - guard, bound + guard]
    mutable std::shared_mutex mutex_;
    mutable std::map<int, HomTable> cache_;
};

} // namespace orbitq
