#include <gtest/gtest.h>

#include "orbitq/mesh.hpp"
#include "path_oracle.hpp"
#include "sweep.hpp"

using namespace orbitq;

namespace {

std::vector<DynkinDiagram> small_diagrams() {
    return {make_diagram(Kind::A, 1), make_diagram(Kind::A, 2), make_diagram(Kind::A, 3), make_diagram(Kind::A, 4),
            make_diagram(Kind::A, 5), make_diagram(Kind::D, 4), make_diagram(Kind::D, 5)};
}

} // namespace

TEST(Mesh, IdentitySurvives) {
    for (const auto& d : testing_support::all_diagrams(8))
        for (int i = 1; i <= d.rank(); ++i) EXPECT_EQ(hom_dims_linear(d, {0, i}).at({0, i}), 1) << d.name();
}

TEST(Mesh, A2Example) {
    auto d = make_diagram(Kind::A, 2);
    auto t = hom_dims_linear(d, {0, 1});
    EXPECT_EQ(t.at({0, 2}), 1);
    EXPECT_EQ(t.at({1, 1}), 0);
    auto h = hom_dims_hammock(d, {0, 1});
    EXPECT_EQ(h.at({0, 2}), 1);
    EXPECT_EQ(h.at({1, 1}), 0);
}

TEST(Mesh, A3SupportFromCorner) {
    auto d = make_diagram(Kind::A, 3);
    auto t = hom_dims_linear(d, {0, 1});
    EXPECT_EQ(t.total(), 3);
    EXPECT_EQ(t.dims.size(), 3u);
}

TEST(Mesh, LinearMatchesPathEnumeration) {
    for (const auto& d : small_diagrams()) {
        const int m = loewy_length(d);
        for (int i = 1; i <= d.rank(); ++i) {
            std::map<int, int> strata;
            auto brute = testing_support::brute_force_homs(d, {0, i}, m + 1, &strata);
            EXPECT_EQ(hom_dims_linear(d, {0, i}).dims, brute) << d.name() << " from row " << i;
            EXPECT_EQ(strata[m], 0);
            EXPECT_EQ(strata[m + 1], 0);
        }
    }
}

TEST(Mesh, LinearMatchesHammock) {
    for (const auto& d : testing_support::all_diagrams(8))
        for (int i = 1; i <= d.rank(); ++i)
            EXPECT_EQ(hom_dims_linear(d, {0, i}), hom_dims_hammock(d, {0, i})) << d.name() << " row " << i;
}

TEST(Mesh, SupportWithinLoewyColumns) {
    for (const auto& d : testing_support::all_diagrams(8)) {
        const int m = loewy_length(d);
        for (int i = 1; i <= d.rank(); ++i) {
            auto t = hom_dims_linear(d, {0, i});
            for (const auto& [y, k] : t.dims) {
                EXPECT_GT(k, 0);
                EXPECT_GE(y.column, 0);
                EXPECT_LE(y.column, m) << d.name();
            }
        }
    }
}

TEST(Mesh, WideningTheWindowChangesNothing) {
    for (const auto& d : {make_diagram(Kind::D, 6), make_diagram(Kind::E, 6), make_diagram(Kind::A, 6)})
        for (int i = 1; i <= d.rank(); ++i) {
            const ZVertex x{2, i};
            auto base = default_window(d, x);
            EXPECT_EQ(hom_dims_linear(d, x), hom_dims_linear(d, x, {base.lo - 4, base.hi + 5}));
        }
}

TEST(Mesh, TranslationInvariant) {
    for (const auto& d : testing_support::all_diagrams(7))
        for (int i = 1; i <= d.rank(); ++i) {
            auto t0 = hom_dims_linear(d, {0, i});
            auto t1 = hom_dims_linear(d, {-1, i});
            std::map<ZVertex, int> shifted;
            for (const auto& [y, k] : t0.dims) shifted[{y.column - 1, y.node}] = k;
            EXPECT_EQ(t1.dims, shifted);
        }
}

TEST(Mesh, NarrowWindowRejected) {
    auto d = make_diagram(Kind::A, 3);
    try {
        hom_dims_linear(d, {0, 1}, {0, 3});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::WindowTooNarrow);
    }
    EXPECT_THROW(hom_dims_hammock(d, {0, 1}, {1, 9}), Error);
    EXPECT_NO_THROW(hom_dims_hammock(d, {0, 1}, {0, 4}));
}

TEST(Mesh, GridRendering) {
    auto d = make_diagram(Kind::A, 2);
    auto grid = format_grid(d, hom_dims_linear(d, {0, 1}));
    EXPECT_NE(grid.find("source (0,1)"), std::string::npos);
}

TEST(Gf, RankAndInverse) {
    for (std::uint64_t a : std::vector<std::uint64_t>{1, 2, 12345, gf::prime - 1}) EXPECT_EQ(gf::mul(a, gf::inverse(a)), 1u);
    gf::Matrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    EXPECT_EQ(gf::rank(m, 3), 2);
}
