#include <gtest/gtest.h>

#include <set>

#include "orbitq/dynkin.hpp"

using namespace orbitq;

namespace {

std::vector<DynkinDiagram> all_diagrams(int max_rank) {
    std::vector<DynkinDiagram> out;
    for (int r = 1; r <= max_rank; ++r) out.emplace_back(Kind::A, r);
    for (int r = 4; r <= max_rank; ++r) out.emplace_back(Kind::D, r);
    for (int r = 6; r <= std::min(8, max_rank); ++r) out.emplace_back(Kind::E, r);
    return out;
}

} // namespace

TEST(Dynkin, SmallestA) {
    auto d = make_diagram(Kind::A, 1);
    EXPECT_EQ(d.rank(), 1);
    EXPECT_TRUE(d.arrows().empty());
}

TEST(Dynkin, D4Arrows) {
    auto d = make_diagram(Kind::D, 4);
    std::vector<Arrow> expect{{1, 2}, {2, 3}, {2, 4}};
    EXPECT_EQ(d.arrows(), expect);
}

TEST(Dynkin, E6Arrows) {
    auto d = make_diagram(Kind::E, 6);
    std::set<Arrow> got(d.arrows().begin(), d.arrows().end());
    std::set<Arrow> expect{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}};
    EXPECT_EQ(got, expect);
}

TEST(Dynkin, IllegalRanks) {
    EXPECT_THROW(make_diagram(Kind::D, 3), Error);
    EXPECT_THROW(make_diagram(Kind::E, 9), Error);
    EXPECT_THROW(make_diagram(Kind::E, 5), Error);
    EXPECT_THROW(make_diagram(Kind::A, 0), Error);
    try {
        make_diagram(Kind::D, 3);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IllegalRank);
    }
}

TEST(Dynkin, CoxeterNumbers) {
    EXPECT_EQ(coxeter_number(make_diagram(Kind::A, 2)), 3);
    EXPECT_EQ(coxeter_number(make_diagram(Kind::D, 4)), 6);
    EXPECT_EQ(coxeter_number(make_diagram(Kind::E, 6)), 12);
    EXPECT_EQ(coxeter_number(make_diagram(Kind::E, 7)), 18);
    EXPECT_EQ(coxeter_number(make_diagram(Kind::E, 8)), 30);
}

TEST(Dynkin, LoewyLengths) {
    EXPECT_EQ(loewy_length(make_diagram(Kind::A, 3)), 3);
    EXPECT_EQ(loewy_length(make_diagram(Kind::D, 6)), 9);
    EXPECT_EQ(loewy_length(make_diagram(Kind::E, 6)), 11);
    EXPECT_EQ(loewy_length(make_diagram(Kind::E, 7)), 17);
    EXPECT_EQ(loewy_length(make_diagram(Kind::E, 8)), 29);
}

TEST(Dynkin, LoewyIsCoxeterMinusOne) {
    for (const auto& d : all_diagrams(12)) EXPECT_EQ(loewy_length(d), coxeter_number(d) - 1) << d.name();
}

TEST(Dynkin, ArrowsFormATree) {
    for (const auto& d : all_diagrams(12)) {
        ASSERT_EQ(static_cast<int>(d.arrows().size()), d.rank() - 1) << d.name();
        std::vector<int> parent(d.rank() + 1);
        for (int i = 1; i <= d.rank(); ++i) parent[i] = i;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        std::set<Arrow> distinct;
        for (auto [a, b] : d.arrows()) {
            EXPECT_NE(a, b);
            EXPECT_TRUE(distinct.insert({a, b}).second);
            EXPECT_NE(find(a), find(b)) << "cycle in " << d.name();
            parent[find(a)] = find(b);
        }
        for (int i = 1; i <= d.rank(); ++i) EXPECT_EQ(find(i), find(1));
    }
}

TEST(Dynkin, GradingIncreasesAlongArrows) {
    for (const auto& d : all_diagrams(10))
        for (auto [a, b] : d.arrows()) EXPECT_EQ(d.depth(b), d.depth(a) + 1) << d.name();
}

TEST(Dynkin, ParseNames) {
    EXPECT_EQ(parse_diagram("D4"), make_diagram(Kind::D, 4));
    EXPECT_EQ(parse_diagram("e_6"), make_diagram(Kind::E, 6));
    EXPECT_EQ(parse_diagram("A12").rank(), 12);
    EXPECT_THROW(parse_diagram("F4"), Error);
    EXPECT_THROW(parse_diagram("A"), Error);
    EXPECT_THROW(parse_diagram("D3"), Error);
}
