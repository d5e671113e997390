#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "orbitq/classify.hpp"
#include "orbitq/fixtures.hpp"
#include "orbitq/isomorphism.hpp"
#include "orbitq/nakayama.hpp"
#include "orbitq/sweep.hpp"

// End-to-end verification suites shared by the acceptance runner and
// `orbitq selftest`.  Every comparison is exact.
namespace orbitq::checks {

struct Report {
    explicit Report(std::string n) : name(std::move(n)) {}

    std::string name;
    long long checked = 0;
    long long failed = 0;
    std::vector<std::string> failures; // first few only

    bool passed() const { return failed == 0 && checked > 0; }

    void expect(bool ok, const std::function<std::string()>& what) {
        ++checked;
        if (ok) return;
        ++failed;
        if (failures.size() < 5) failures.push_back(what());
    }

    // Runs f, counting a thrown error as a failure.
    void guarded(const std::function<void()>& f, const std::string& context) {
        try {
            f();
        } catch (const std::exception& e) {
            ++checked;
            ++failed;
            if (failures.size() < 5) failures.push_back(context + ": " + e.what());
        }
    }
};

// Scales the random and open-ended parts of the sweeps; 1 is the full size.
struct Scale {
    double factor = 1.0;
    int count(int full) const { return std::max(1, static_cast<int>(std::lround(full * factor))); }
};

// Every diagram named in the group-relation sweep.
inline std::vector<DynkinDiagram> relation_diagrams() {
    std::vector<DynkinDiagram> out;
    for (int r = 1; r <= 8; ++r) out.emplace_back(Kind::A, r);
    for (int r = 4; r <= 9; ++r) out.emplace_back(Kind::D, r);
    for (int r = 6; r <= 8; ++r) out.emplace_back(Kind::E, r);
    return out;
}

// Exact vertex-map equality on columns -(h+1)..h+1.
inline bool equal_on_window(const Automorphism& g, const Automorphism& h) {
    const DynkinDiagram& d = g.diagram();
    const int half = coxeter_number(d) + 1;
    for (int c = -half; c <= half; ++c)
        for (int i = 1; i <= d.rank(); ++i)
            if (g({c, i}) != h({c, i})) return false;
    return true;
}

inline Report group_relations() {
    Report rep("group relations");
    for (const auto& d : relation_diagrams()) {
        rep.guarded([&] {
            const auto id = Automorphism::identity(d);
            const auto s = suspension(d);
            rep.expect(equal_on_window(compose(s, s), theta(d, -coxeter_number(d))),
                       [&] { return d.name() + ": S^2 != theta^-h"; });
            const bool phi_legal = (d.kind() == Kind::A && d.rank() % 2 == 1) || d.kind() == Kind::D ||
                                   (d.kind() == Kind::E && d.rank() == 6);
            if (phi_legal) {
                const auto f = phi(d);
                rep.expect(equal_on_window(compose(f, f), id), [&] { return d.name() + ": phi^2 != id"; });
            }
            if (d.kind() == Kind::D || (d.kind() == Kind::E && d.rank() == 6)) {
                const auto x = xi(d);
                rep.expect(equal_on_window(compose(x, x), id), [&] { return d.name() + ": xi^2 != id"; });
            }
            if (d.kind() == Kind::D && d.rank() == 4)
                rep.expect(equal_on_window(power(chi(d), 3), id), [&] { return d.name() + ": chi^3 != id"; });
        }, d.name());
    }
    return rep;
}

inline Report fixture_isomorphisms() {
    Report rep("fixture isomorphisms");
    for (const auto& f : fixture_table())
        rep.guarded([&] {
            const auto d = parse_diagram(f.diagram);
            const auto q = quotient(d, compile(d, f.functor));
            const auto fix = fixture_ar(f.name);
            rep.expect(q.vertex_count() == f.vertex_count && fix.vertex_count() == f.vertex_count, [&] {
                return f.name + ": vertex counts " + std::to_string(q.vertex_count()) + "/" +
                       std::to_string(fix.vertex_count()) + ", expected " + std::to_string(f.vertex_count);
            });
            const auto w = iso_check(fix, q);
            rep.expect(w && is_valid_witness(fix, q, *w),
                       [&] { return f.name + " is not isomorphic to " + f.diagram + "/<" + f.functor + ">"; });
        }, f.name);
    return rep;
}

inline Report nakayama_oracle() {
    Report rep("Nakayama oracle");
    for (int v = 1; v <= 4; ++v)
        for (int r = 2; r <= 6; ++r)
            rep.guarded([&] {
                const auto d = make_diagram(Kind::A, r - 1);
                rep.expect(iso_check(nakayama_stable_ar(v, r), quotient(d, theta(d, v))).has_value(), [&] {
                    return "stable AR-quiver of N_{" + std::to_string(v) + "," + std::to_string(r) + "} differs";
                });
            }, "AR v=" + std::to_string(v) + " r=" + std::to_string(r));
    for (int v = 1; v <= 3; ++v)
        for (int r = 2; r <= 5; ++r)
            rep.guarded([&] {
                const auto d = make_diagram(Kind::A, r - 1);
                const OrbitCategory cat(d, theta(d, v));
                for (int p = 1; p <= v; ++p)
                    for (int a = 1; a < r; ++a)
                        for (int q = 1; q <= v; ++q)
                            for (int b = 1; b < r; ++b) {
                                const int lhs = nakayama_stable_hom(v, r, {p, a}, {q, b});
                                const int rhs = cat.hom_dim(cat.action().representative({v - p, a}),
                                                            cat.action().representative({v - q, b}));
                                rep.expect(lhs == rhs, [&] {
                                    return "N_{" + std::to_string(v) + "," + std::to_string(r) + "} Hom(M_" +
                                           std::to_string(p) + "^" + std::to_string(a) + ", M_" + std::to_string(q) +
                                           "^" + std::to_string(b) + "): " + std::to_string(lhs) + " vs " +
                                           std::to_string(rhs);
                                });
                            }
            }, "hom v=" + std::to_string(v) + " r=" + std::to_string(r));
    return rep;
}

inline Report mesh_oracle() {
    Report rep("mesh oracle equivalence");
    std::vector<DynkinDiagram> ds;
    for (int r = 2; r <= 5; ++r) ds.emplace_back(Kind::A, r);
    ds.emplace_back(Kind::D, 4);
    ds.emplace_back(Kind::D, 5);
    ds.emplace_back(Kind::E, 6);
    for (const auto& d : ds)
        for (int i = 1; i <= d.rank(); ++i)
            rep.guarded([&] {
                const ZVertex x{0, i};
                rep.expect(hom_dims_linear(d, x) == hom_dims_hammock(d, x),
                           [&] { return d.name() + ": tables differ at source " + to_string(x); });
            }, d.name());
    return rep;
}

// The realization-table parameter grid.
inline std::vector<FamilyInstance> family_grid() {
    std::vector<FamilyInstance> out;
    for (int rank = 1; rank <= 8; ++rank)
        for (int w = 1; w <= 12; ++w) out.push_back({Family::Nakayama, {{"v", w}, {"r", rank + 1}}});
    for (int l = 1; l <= 3; ++l)
        for (int v = 1; v <= 4; ++v) out.push_back({Family::Moebius, {{"l", l}, {"v", v}}});
    for (int n = 4; n <= 9; ++n)
        for (int s = 1; s <= 5; ++s) {
            out.push_back({Family::D1, {{"n", n}, {"s", s}}});
            out.push_back({Family::D2, {{"n", n}, {"s", s}}});
        }
    for (int s = 1; s <= 5; ++s) out.push_back({Family::D4Triality, {{"s", s}}});
    for (int m = 2; m <= 3; ++m)
        for (int s : {1, 2, 4, 5, 7}) out.push_back({Family::D3m, {{"m", m}, {"s", s}}});
    for (int n = 6; n <= 8; ++n)
        for (int s = 1; s <= 5; ++s) out.push_back({Family::E1, {{"n", n}, {"s", s}}});
    for (int s = 1; s <= 5; ++s) out.push_back({Family::E6Twist, {{"s", s}}});
    return out;
}

inline Report classification_round_trip(Scale scale = {}) {
    Report rep("classification round trip");
    for (const auto& x : family_grid())
        rep.guarded([&] {
            const auto v = classify_orbit(algebra_to_orbit(x));
            rep.expect(v.kind == Verdict::Realizable && v.family && *v.family == x,
                       [&] { return display_name(x) + " does not round-trip: " + summary(v); });
        }, display_name(x));
    std::mt19937 rng(20240601);
    const auto ds = all_diagrams(8);
    const int total = scale.count(10000);
    for (std::size_t k = 0; k < ds.size(); ++k) {
        const auto& d = ds[k];
        const int share = total / static_cast<int>(ds.size()) + (static_cast<int>(k) < total % static_cast<int>(ds.size()));
        for (const auto& w : random_words(d, share, 6, rng))
            rep.guarded([&] {
                const auto v = classify_orbit(d, w);
                const bool standard = v.asashiba && is_standard_type(*v.asashiba);
                rep.expect((v.kind == Verdict::Realizable) == standard,
                           [&] { return d.name() + " " + w + ": " + summary(v); });
            }, d.name() + " " + w);
    }
    return rep;
}

inline Report quotient_counting() {
    Report rep("quotient counting");
    for (const auto& x : family_grid())
        rep.guarded([&] {
            const auto word = algebra_to_orbit(x);
            const auto g = compile(word);
            const auto c = reporting_form(g);
            const long long expected = 1LL * word.diagram.rank() * c.w;
            const auto q = quotient(g);
            rep.expect(q.vertex_count() == expected, [&] {
                return display_name(x) + ": " + std::to_string(q.vertex_count()) + " orbits, expected " +
                       std::to_string(expected);
            });
        }, display_name(x));
    return rep;
}

inline Report negative_controls() {
    Report rep("negative controls");
    rep.guarded([&] {
        const auto v = classify_orbit(make_diagram(Kind::E, 6), "t^5");
        rep.expect(v.kind == Verdict::NotRealizable && v.asashiba && v.asashiba->f == Rational(5, 11),
                   [&] { return "(E6, t^5): " + summary(v); });
    }, "E6 t^5");
    rep.guarded([&] {
        const auto d = make_diagram(Kind::E, 7);
        const auto v = classify_orbit(d, "t^17*[1]");
        rep.expect(v.kind == Verdict::NotRealizable && v.asashiba && v.asashiba->f == Rational(8, 17),
                   [&] { return "(E7, t^17*[1]): " + summary(v); });
    }, "E7 t^17*[1]");
    rep.guarded([&] {
        const auto v = classify_orbit(make_diagram(Kind::D, 5), "t^3");
        rep.expect(v.kind == Verdict::NotRealizable && v.asashiba && v.asashiba->t == 1 &&
                       !is_standard_type(*v.asashiba),
                   [&] { return "(D5, t^3): " + summary(v); });
    }, "D5 t^3");
    {
        ErrorCode code = ErrorCode::Internal;
        try {
            classify_orbit(make_diagram(Kind::A, 4), "phi");
        } catch (const Error& e) {
            code = e.code();
        }
        rep.expect(code == ErrorCode::IllegalToken, [] { return "(A4, phi) was not rejected as an illegal token"; });
    }
    return rep;
}

} // namespace orbitq::checks
