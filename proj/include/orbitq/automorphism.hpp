#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "orbitq/translation_quiver.hpp"

namespace orbitq {

using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// Where the vertex (0, i) goes: (shift, row).  Translation-equivariance
// then forces (n, i) -> (n + shift, row).
struct RowImage {
    int shift = 0;
    int row = 1;
    friend bool operator==(const RowImage&, const RowImage&) = default;
};

class Automorphism {
public:
    Automorphism() = default;

    Automorphism(DynkinDiagram d, std::vector<RowImage> images) : diagram_(std::move(d)), images_(std::move(images)) {
        if (auto why = defect(diagram_, images_)) throw Error(ErrorCode::NotAutomorphism, *why);
    }

    static Automorphism identity(const DynkinDiagram& d) {
        std::vector<RowImage> im;
        for (int i = 1; i <= d.rank(); ++i) im.push_back({0, i});
        return Automorphism(d, im);
    }

    ZVertex operator()(ZVertex v) const {
        const RowImage& im = images_[v.node - 1];
        return {v.column + im.shift, im.row};
    }

    const DynkinDiagram& diagram() const { return diagram_; }
    const std::vector<RowImage>& images() const { return images_; }

    // Column shift if this is a power of theta, i.e. every row fixed with one common shift.
    std::optional<int> translation_shift() const {
        for (int i = 1; i <= diagram_.rank(); ++i)
            if (images_[i - 1].row != i || images_[i - 1].shift != images_[0].shift) return std::nullopt;
        return images_[0].shift;
    }

    std::vector<int> fixed_rows() const {
        std::vector<int> rows;
        for (int i = 1; i <= diagram_.rank(); ++i)
            if (images_[i - 1] == RowImage{0, i}) rows.push_back(i);
        return rows;
    }

    // Equality on one full column decides equality everywhere.
    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return a.diagram_ == b.diagram_ && a.images_ == b.images_;
    }

    // Reason the row data fails to define an arrow-preserving bijection of ZDelta.
    static std::optional<std::string> defect(const DynkinDiagram& d, const std::vector<RowImage>& im) {
        const int r = d.rank();
        if (static_cast<int>(im.size()) != r) return "wrong number of rows";
        std::vector<int> seen(r + 1, 0);
        for (const auto& x : im) {
            if (x.row < 1 || x.row > r) return "row out of range";
            if (seen[x.row]++) return "rows are not permuted";
        }
        auto apply = [&](ZVertex v) { return ZVertex{v.column + im[v.node - 1].shift, im[v.node - 1].row}; };
        auto is_arrow = [&](ZVertex a, ZVertex b) {
            auto s = z_successors(d, a);
            return std::find(s.begin(), s.end(), b) != s.end();
        };
        // Arrow counts agree column by column, so preserving arrows in one
        // direction together with the same check for the inverse is enough.
        std::vector<RowImage> inv(r);
        for (int i = 1; i <= r; ++i) inv[im[i - 1].row - 1] = {-im[i - 1].shift, i};
        auto apply_inv = [&](ZVertex v) { return ZVertex{v.column + inv[v.node - 1].shift, inv[v.node - 1].row}; };
        for (auto [i, j] : d.arrows()) {
            const ZVertex a{0, i}, b{0, j}, c{1, i};
            if (!is_arrow(apply(a), apply(b)) || !is_arrow(apply(b), apply(c))) return "an arrow is not preserved";
            if (!is_arrow(apply_inv(a), apply_inv(b)) || !is_arrow(apply_inv(b), apply_inv(c)))
                return "the inverse does not preserve arrows";
        }
        return std::nullopt;
    }

private:
    DynkinDiagram diagram_;
    std::vector<RowImage> images_{{0, 1}};
};

inline void require_same_diagram(const Automorphism& g, const Automorphism& h) {
    if (!(g.diagram() == h.diagram()))
        throw Error(ErrorCode::DiagramMismatch,
                    "automorphisms of " + g.diagram().name() + " and " + h.diagram().name());
}

// g after h.
inline Automorphism compose(const Automorphism& g, const Automorphism& h) {
    require_same_diagram(g, h);
    std::vector<RowImage> im;
    for (const auto& x : h.images()) {
        const RowImage& y = g.images()[x.row - 1];
        im.push_back({x.shift + y.shift, y.row});
    }
    return Automorphism(g.diagram(), im);
}

inline Automorphism invert(const Automorphism& g) {
    std::vector<RowImage> im(g.diagram().rank());
    for (int i = 1; i <= g.diagram().rank(); ++i) {
        const RowImage& x = g.images()[i - 1];
        im[x.row - 1] = {-x.shift, i};
    }
    return Automorphism(g.diagram(), im);
}

inline bool equal(const Automorphism& g, const Automorphism& h) {
    require_same_diagram(g, h);
    return g == h;
}

inline Automorphism power(const Automorphism& g, long long n) {
    Automorphism base = n < 0 ? invert(g) : g;
    Automorphism acc = Automorphism::identity(g.diagram());
    for (unsigned long long e = static_cast<unsigned long long>(n < 0 ? -n : n); e; e >>= 1) {
        if (e & 1) acc = compose(acc, base);
        base = compose(base, base);
    }
    return acc;
}

// theta^k: (n, i) -> (n - k, i).
inline Automorphism theta(const DynkinDiagram& d, int k = 1) {
    std::vector<RowImage> im;
    for (int i = 1; i <= d.rank(); ++i) im.push_back({-k, i});
    return Automorphism(d, im);
}

// Every arrow-preserving translation-equivariant extension of a partial row
// assignment, with shifts bounded by |shift| <= bound.
inline std::vector<Automorphism> extend_automorphism(const DynkinDiagram& d, const std::map<int, RowImage>& fixed,
                                                     int bound) {
    const int r = d.rank();
    std::vector<int> open;
    for (int i = 1; i <= r; ++i)
        if (!fixed.count(i)) open.push_back(i);
    std::vector<RowImage> im(r);
    std::vector<bool> used(r + 1, false);
    for (auto [i, x] : fixed) {
        im[i - 1] = x;
        used[x.row] = true;
    }
    std::vector<Automorphism> found;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == open.size()) {
            if (!Automorphism::defect(d, im)) found.emplace_back(d, im);
            return;
        }
        for (int row = 1; row <= r; ++row) {
            if (used[row]) continue;
            used[row] = true;
            for (int s = -bound; s <= bound; ++s) {
                im[open[k] - 1] = {s, row};
                self(self, k + 1);
            }
            used[row] = false;
        }
    };
    rec(rec, 0);
    return found;
}

// Exchanges rows r-1 and r on D_r; on E6 the order-2 symmetry that sends
// (x,5) to (x+2,1) and (y,4) to (y+1,2), extended to rows 3 and 6.
inline Automorphism xi(const DynkinDiagram& d) {
    const int r = d.rank();
    if (d.kind() == Kind::D) {
        auto im = Automorphism::identity(d).images();
        im[r - 2] = {0, r};
        im[r - 1] = {0, r - 1};
        return Automorphism(d, im);
    }
    if (d.kind() == Kind::E && r == 6) {
        static const Automorphism e6 = [&] {
            const std::map<int, RowImage> given{{5, {2, 1}}, {1, {-2, 5}}, {4, {1, 2}}, {2, {-1, 4}}};
            auto ext = extend_automorphism(d, given, coxeter_number(d));
            ensure(ext.size() == 1, "E6 flip does not extend uniquely");
            return ext.front();
        }();
        return e6;
    }
    throw Error(ErrorCode::WrongKind, "xi is defined on D_n and E6 only, not " + d.name());
}

// Order-3 twist of D_4.
inline Automorphism chi(const DynkinDiagram& d) {
    if (d.kind() != Kind::D || d.rank() != 4)
        throw Error(ErrorCode::WrongKind, "chi is defined on D4 only, not " + d.name());
    return Automorphism(d, {{-1, 3}, {0, 2}, {0, 4}, {1, 1}});
}

inline Automorphism suspension(const DynkinDiagram& d) {
    const int r = d.rank();
    switch (d.kind()) {
    case Kind::A: {
        std::vector<RowImage> im;
        for (int q = 1; q <= r; ++q) im.push_back({q, r + 1 - q});
        return Automorphism(d, im);
    }
    case Kind::D: {
        // S^2 = theta^{-h} with h = 2r-2 pins the translation part to r-1.
        Automorphism s = theta(d, -(r - 1));
        return r % 2 ? compose(s, xi(d)) : s;
    }
    case Kind::E:
        if (r == 6) return compose(xi(d), theta(d, -6));
        return theta(d, r == 7 ? -9 : -15);
    }
    return Automorphism::identity(d);
}

// The flip: theta^{l+1} S on A_{2l+1}, xi on D_n, theta^6 S on E6.
inline Automorphism phi(const DynkinDiagram& d) {
    const int r = d.rank();
    if (d.kind() == Kind::A && r % 2 == 1) return compose(theta(d, (r + 1) / 2), suspension(d));
    if (d.kind() == Kind::D) return xi(d);
    if (d.kind() == Kind::E && r == 6) return compose(theta(d, 6), suspension(d));
    throw Error(ErrorCode::IllegalToken, "phi is not defined on " + d.name());
}

inline Automorphism rho(const DynkinDiagram& d) {
    if (d.kind() != Kind::D || d.rank() != 4) throw Error(ErrorCode::IllegalToken, "rho is defined on D4 only");
    return chi(d);
}

// Torsion labels: translation-free automorphisms with a fixed row.
enum class Torsion { identity, flip, xi, chi, chi2, xi_chi, xi_chi2 };

inline std::string torsion_name(Torsion t) {
    switch (t) {
    case Torsion::identity: return "id";
    case Torsion::flip: return "flip";
    case Torsion::xi: return "xi";
    case Torsion::chi: return "chi";
    case Torsion::chi2: return "chi^2";
    case Torsion::xi_chi: return "xi.chi";
    case Torsion::xi_chi2: return "xi.chi^2";
    }
    return "?";
}

inline int torsion_order(Torsion t) {
    switch (t) {
    case Torsion::identity: return 1;
    case Torsion::chi:
    case Torsion::chi2: return 3;
    default: return 2;
    }
}

inline std::vector<Torsion> torsion_labels(const DynkinDiagram& d) {
    const int r = d.rank();
    switch (d.kind()) {
    case Kind::A: return r % 2 && r > 1 ? std::vector{Torsion::identity, Torsion::flip} : std::vector{Torsion::identity};
    case Kind::D:
        if (r == 4)
            return {Torsion::identity, Torsion::xi, Torsion::chi, Torsion::chi2, Torsion::xi_chi, Torsion::xi_chi2};
        return {Torsion::identity, Torsion::xi};
    case Kind::E: return r == 6 ? std::vector{Torsion::identity, Torsion::xi} : std::vector{Torsion::identity};
    }
    return {};
}

inline Automorphism torsion_automorphism(const DynkinDiagram& d, Torsion t) {
    switch (t) {
    case Torsion::identity: return Automorphism::identity(d);
    case Torsion::flip:
        if (d.kind() != Kind::A || d.rank() % 2 == 0) break;
        return phi(d);
    case Torsion::xi: return xi(d);
    case Torsion::chi: return chi(d);
    case Torsion::chi2: return power(chi(d), 2);
    case Torsion::xi_chi: return compose(xi(d), chi(d));
    case Torsion::xi_chi2: return compose(xi(d), power(chi(d), 2));
    }
    throw Error(ErrorCode::WrongKind, "torsion " + torsion_name(t) + " does not exist on " + d.name());
}

// g = theta^w . torsion . S^s_parity.  The parity survives only on A_n with n
// even, where S cannot be absorbed into a translation and a torsion element.
struct CanonicalForm {
    int w = 0;
    Torsion torsion = Torsion::identity;
    int s_parity = 0;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

inline bool parity_survives(const DynkinDiagram& d) { return d.kind() == Kind::A && d.rank() % 2 == 0; }

inline std::vector<CanonicalForm> canonical_candidates(const Automorphism& g) {
    const DynkinDiagram& d = g.diagram();
    std::vector<CanonicalForm> hits;
    const Automorphism s_inv = invert(suspension(d));
    for (int parity = 0; parity <= (parity_survives(d) ? 1 : 0); ++parity)
        for (Torsion t : torsion_labels(d)) {
            Automorphism rest = parity ? compose(g, s_inv) : g;
            rest = compose(rest, invert(torsion_automorphism(d, t)));
            if (auto shift = rest.translation_shift()) hits.push_back({-*shift, t, parity});
        }
    return hits;
}

inline CanonicalForm canonical_form(const Automorphism& g) {
    auto hits = canonical_candidates(g);
    if (hits.size() != 1)
        throw Error(ErrorCode::NotReducible, "automorphism of " + g.diagram().name() + " has " +
                                                 std::to_string(hits.size()) + " canonical forms");
    return hits.front();
}

inline Automorphism expand(const DynkinDiagram& d, const CanonicalForm& c) {
    Automorphism g = compose(theta(d, c.w), torsion_automorphism(d, c.torsion));
    return c.s_parity ? compose(g, suspension(d)) : g;
}

// Net translation in units of theta, counting S as theta^{-h/2}.
inline Rational net_shift(const DynkinDiagram& d, const CanonicalForm& c) {
    return Rational(c.w) - Rational(c.s_parity * coxeter_number(d), 2);
}

inline std::string to_string(const CanonicalForm& c) {
    std::string out = "theta^" + std::to_string(c.w);
    if (c.torsion != Torsion::identity) out += " . " + torsion_name(c.torsion);
    if (c.s_parity) out += " . S";
    return out;
}

} // namespace orbitq
