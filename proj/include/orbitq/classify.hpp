#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitq/families.hpp"
#include "orbitq/functor_word.hpp"
#include "orbitq/orbit_category.hpp"

namespace orbitq {

// Derived-equivalence invariant (Delta, f, t): frequency f = w / m_Delta and
// torsion order t.
struct AsashibaType {
    DynkinDiagram delta;
    Rational f{0};
    int t = 1;
    friend bool operator==(const AsashibaType&, const AsashibaType&) = default;
};

inline std::string to_string(const AsashibaType& a) {
    return "(" + a.delta.name() + ", " + to_string(a.f) + ", " + std::to_string(a.t) + ")";
}

// Canonical form of the generator pointing in the forward direction, so that
// <g> = <theta^w . torsion> with w > 0.
inline CanonicalForm reporting_form(const Automorphism& g) {
    const DynkinDiagram& d = g.diagram();
    CanonicalForm c = canonical_form(g);
    if (net_shift(d, c) < 0) c = canonical_form(invert(g));
    return c;
}

// Requires a positive net shift.  A surviving S-parity (glide reflection on
// A_n, n even) has no torsion part with a fixed vertex.
inline AsashibaType asashiba_type(const DynkinDiagram& d, const Automorphism& g) {
    if (!(g.diagram() == d)) throw Error(ErrorCode::DiagramMismatch, "automorphism lives on " + g.diagram().name());
    const CanonicalForm c = reporting_form(g);
    if (c.s_parity || torsion_automorphism(d, c.torsion).fixed_rows().empty())
        throw Error(ErrorCode::TorsionWithoutFixedVertex,
                    "the generator " + to_string(c) + " has no torsion part with a fixed vertex");
    const Rational net = net_shift(d, c);
    if (net <= 0) throw Error(ErrorCode::InfiniteQuotient, "net shift must be positive");
    return {d, net / Rational(loewy_length(d)), torsion_order(c.torsion)};
}

// Membership in the list of types of standard representation-finite
// self-injective algebras.
inline bool is_standard_type(const AsashibaType& a) {
    if (a.f <= 0) return false;
    const int n = a.delta.rank();
    const bool integral = a.f.denominator() == 1;
    switch (a.delta.kind()) {
    case Kind::A:
        if (a.t == 1) return (a.f * n).denominator() == 1;   // (A_n, s/n, 1)
        if (a.t == 2) return n % 2 == 1 && n > 1 && integral; // (A_{2p+1}, s, 2)
        return false;
    case Kind::D:
        if (a.t == 1) return integral || (n % 3 == 0 && a.f.denominator() == 3); // (D_n, s, 1), (D_3m, s/3, 1)
        if (a.t == 2) return integral;                                          // (D_n, s, 2)
        if (a.t == 3) return n == 4 && integral;                                // (D_4, s, 3)
        return false;
    case Kind::E:
        if (a.t == 1) return integral;            // (E_n, s, 1)
        if (a.t == 2) return n == 6 && integral;  // (E_6, s, 2)
        return false;
    }
    return false;
}

// The rows of the realization table that match a type: the algebra family
// with parameters solved from (Delta, w, t).  At most one row applies.
inline std::vector<FamilyInstance> table_rows(const AsashibaType& a) {
    std::vector<FamilyInstance> out;
    const int n = a.delta.rank();
    const Rational w = a.f * loewy_length(a.delta);
    if (w <= 0 || w.denominator() != 1) return out;
    const int wi = static_cast<int>(w.numerator());
    const bool s_integral = a.f.denominator() == 1;
    const int s = static_cast<int>(a.f.numerator());
    switch (a.delta.kind()) {
    case Kind::A:
        if (a.t == 1) out.push_back({Family::Nakayama, {{"v", wi}, {"r", n + 1}}});
        if (a.t == 2 && n % 2 == 1 && wi % n == 0) out.push_back({Family::Moebius, {{"l", (n - 1) / 2}, {"v", wi / n}}});
        break;
    case Kind::D:
        if (a.t == 1 && n % 3 == 0 && (3 * wi) % (2 * n - 3) == 0) {
            const int s3 = 3 * wi / (2 * n - 3);
            if (s3 % 3 != 0) out.push_back({Family::D3m, {{"m", n / 3}, {"s", s3}}});
        }
        if (a.t == 1 && s_integral) out.push_back({Family::D1, {{"n", n}, {"s", s}}});
        if (a.t == 2 && s_integral) out.push_back({Family::D2, {{"n", n}, {"s", s}}});
        if (a.t == 3 && n == 4 && wi % 5 == 0) out.push_back({Family::D4Triality, {{"s", wi / 5}}});
        break;
    case Kind::E:
        if (a.t == 1 && s_integral) out.push_back({Family::E1, {{"n", n}, {"s", s}}});
        if (a.t == 2 && n == 6 && wi % 11 == 0) out.push_back({Family::E6Twist, {{"s", wi / 11}}});
        break;
    }
    return out;
}

struct Verdict {
    enum Kind { Realizable, NotRealizable, NotTriangulated } kind = NotTriangulated;
    std::optional<FamilyInstance> family;
    std::optional<AsashibaType> asashiba;
    std::optional<CanonicalForm> canonical;
    std::string variant; // torsion label actually seen, e.g. chi vs chi^2
    std::string reason;
};

inline std::string to_string(Verdict::Kind k) {
    switch (k) {
    case Verdict::Realizable: return "realizable";
    case Verdict::NotRealizable: return "not realizable";
    case Verdict::NotTriangulated: return "not triangulated";
    }
    return "?";
}

inline std::string summary(const Verdict& v) {
    std::string out = to_string(v.kind);
    if (v.family) out += ": " + display_name(*v.family);
    if (!v.reason.empty()) out += ": " + v.reason;
    return out;
}

inline Verdict classify_orbit(const DynkinDiagram& d, const Automorphism& g) {
    Verdict v;
    const OrbitCheck check = check_orbit(d, g);
    if (!check.ok()) {
        v.kind = Verdict::NotTriangulated;
        v.reason = "not triangulated by the positive-net-shift criterion: " + check.reason;
        return v;
    }
    v.canonical = reporting_form(g);
    v.variant = torsion_name(v.canonical->torsion);
    if (v.canonical->s_parity) {
        v.kind = Verdict::NotRealizable;
        v.variant += " . S";
        v.reason = "glide reflection " + to_string(*v.canonical) + " has no torsion part with a fixed vertex";
        return v;
    }
    v.asashiba = asashiba_type(d, g);
    const auto rows = table_rows(*v.asashiba);
    ensure(rows.size() <= 1, "type " + to_string(*v.asashiba) + " matches several table rows");
    if (rows.empty()) {
        v.kind = Verdict::NotRealizable;
        v.reason = "f=" + to_string(v.asashiba->f) + " not in the permitted set for " + d.name() +
                   " with t=" + std::to_string(v.asashiba->t);
        return v;
    }
    v.kind = Verdict::Realizable;
    v.family = rows.front();
    return v;
}

inline Verdict classify_orbit(const FunctorWord& word) { return classify_orbit(word.diagram, compile(word)); }

inline Verdict classify_orbit(const DynkinDiagram& d, const std::string& word) {
    return classify_orbit(parse_word(d, word));
}

// The orbit category realized by a family member.
inline FunctorWord algebra_to_orbit(const FamilyInstance& x) {
    validate(x);
    auto p = [&](const char* k) { return param(x, k); };
    auto t = [](long long k) { return "t^" + std::to_string(k); };
    switch (x.family) {
    case Family::Nakayama: return parse_word(make_diagram(Kind::A, p("r") - 1), t(p("v")));
    case Family::Moebius: {
        const int r = 2 * p("l") + 1;
        return parse_word(make_diagram(Kind::A, r), t(1LL * r * p("v")) + "*phi");
    }
    case Family::D1: return parse_word(make_diagram(Kind::D, p("n")), t(1LL * p("s") * (2 * p("n") - 3)));
    case Family::D2: return parse_word(make_diagram(Kind::D, p("n")), t(1LL * p("s") * (2 * p("n") - 3)) + "*phi");
    case Family::D4Triality: return parse_word(make_diagram(Kind::D, 4), t(5LL * p("s")) + "*rho");
    case Family::D3m: return parse_word(make_diagram(Kind::D, 3 * p("m")), t(1LL * p("s") * (2 * p("m") - 1)));
    case Family::E1: {
        const auto e = make_diagram(Kind::E, p("n"));
        return parse_word(e, t(1LL * loewy_length(e) * p("s")));
    }
    case Family::E6Twist: return parse_word(make_diagram(Kind::E, 6), t(11LL * p("s")) + "*phi");
    }
    throw Error(ErrorCode::Internal, "unknown family");
}

} // namespace orbitq
