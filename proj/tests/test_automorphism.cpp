#include <gtest/gtest.h>

#include <random>

#include "orbitq/functor_word.hpp"
#include "orbitq/mesh.hpp"
#include "sweep.hpp"

using namespace orbitq;
using testing_support::all_diagrams;

TEST(Automorphism, ThetaAndSuspensionExamples) {
    auto a2 = make_diagram(Kind::A, 2);
    EXPECT_EQ(suspension(a2)({0, 1}), (ZVertex{1, 2}));
    auto e7 = make_diagram(Kind::E, 7);
    EXPECT_EQ(suspension(e7)({0, 3}), (ZVertex{9, 3}));
    EXPECT_EQ(theta(a2)({4, 2}), (ZVertex{3, 2}));
}

TEST(Automorphism, SuspensionSquaredIsThetaToMinusH) {
    for (const auto& d : all_diagrams(9))
        EXPECT_EQ(compose(suspension(d), suspension(d)), theta(d, -coxeter_number(d))) << d.name();
}

// Independent check of S: nu = theta S must be a Serre functor on the mesh
// category, dim Hom(x, y) = dim Hom(y, nu x).
TEST(Automorphism, SuspensionGivesSerreDuality) {
    for (const auto& d : all_diagrams(7)) {
        const Automorphism nu = compose(theta(d), suspension(d));
        for (int i = 1; i <= d.rank(); ++i) {
            const ZVertex x{0, i};
            const HomTable from_x = hom_dims_hammock(d, x);
            for (int c = 0; c <= loewy_length(d) + 1; ++c)
                for (int j = 1; j <= d.rank(); ++j) {
                    const ZVertex y{c, j};
                    const HomTable from_y = hom_dims_hammock(d, y);
                    EXPECT_EQ(from_x.at(y), from_y.at(nu(x))) << d.name() << " " << to_string(x) << to_string(y);
                }
        }
    }
}

TEST(Automorphism, E6FlipMatchesGivenRowsAndExtendsUniquely) {
    auto e6 = make_diagram(Kind::E, 6);
    const std::map<int, RowImage> given{{5, {2, 1}}, {1, {-2, 5}}, {4, {1, 2}}, {2, {-1, 4}}};
    auto ext = extend_automorphism(e6, given, 2 * coxeter_number(e6));
    ASSERT_EQ(ext.size(), 1u);
    EXPECT_EQ(ext.front(), xi(e6));
    EXPECT_EQ(xi(e6)({0, 5}), (ZVertex{2, 1}));
    EXPECT_EQ(xi(e6)({7, 4}), (ZVertex{8, 2}));
    EXPECT_EQ(xi(e6)({0, 3}), (ZVertex{0, 3}));
    EXPECT_EQ(xi(e6)({0, 6}), (ZVertex{0, 6}));
}

TEST(Automorphism, TorsionRelations) {
    for (int r = 4; r <= 9; ++r) {
        auto d = make_diagram(Kind::D, r);
        EXPECT_EQ(compose(xi(d), xi(d)), Automorphism::identity(d));
        EXPECT_EQ(compose(phi(d), phi(d)), Automorphism::identity(d));
        for (int i = 1; i <= r - 2; ++i) EXPECT_EQ(xi(d)({3, i}), (ZVertex{3, i}));
    }
    auto d4 = make_diagram(Kind::D, 4);
    EXPECT_EQ(power(chi(d4), 3), Automorphism::identity(d4));
    EXPECT_NE(chi(d4), Automorphism::identity(d4));
    EXPECT_EQ(chi(d4)({5, 2}), (ZVertex{5, 2}));
    // <xi, chi> is the symmetric group on three letters.
    EXPECT_EQ(compose(compose(xi(d4), chi(d4)), xi(d4)), power(chi(d4), 2));
    for (int r = 1; r <= 9; r += 2) {
        auto d = make_diagram(Kind::A, r);
        EXPECT_EQ(compose(phi(d), phi(d)), Automorphism::identity(d));
        const int mid = (r + 1) / 2;
        EXPECT_EQ(phi(d)({-4, mid}), (ZVertex{-4, mid}));
    }
    auto e6 = make_diagram(Kind::E, 6);
    EXPECT_EQ(compose(phi(e6), phi(e6)), Automorphism::identity(e6));
    EXPECT_EQ(phi(e6), xi(e6));
}

TEST(Automorphism, FlipOnA3IsThetaSquaredS) {
    auto a3 = make_diagram(Kind::A, 3);
    EXPECT_EQ(compose(theta(a3, 2), suspension(a3)), phi(a3));
    EXPECT_EQ(phi(a3)({0, 1}), (ZVertex{-1, 3}));
}

TEST(Automorphism, EveryTorsionLabelHasAFixedRow) {
    for (const auto& d : all_diagrams(9))
        for (Torsion t : torsion_labels(d)) {
            auto g = torsion_automorphism(d, t);
            EXPECT_FALSE(g.fixed_rows().empty()) << d.name() << " " << torsion_name(t);
            EXPECT_EQ(power(g, torsion_order(t)), Automorphism::identity(d));
            for (int k = 1; k < torsion_order(t); ++k) EXPECT_NE(power(g, k), Automorphism::identity(d));
        }
}

TEST(Automorphism, ComposeInvertEqual) {
    auto d = make_diagram(Kind::D, 5);
    EXPECT_EQ(compose(theta(d), invert(theta(d))), Automorphism::identity(d));
    auto g = compose(suspension(d), theta(d, 3));
    EXPECT_EQ(compose(invert(g), g), Automorphism::identity(d));
    EXPECT_TRUE(equal(g, g));
    EXPECT_THROW(compose(g, theta(make_diagram(Kind::D, 4))), Error);
}

TEST(Automorphism, CommutesWithTheta) {
    std::mt19937 rng(7);
    for (const auto& d : all_diagrams(8)) {
        const auto words = testing_support::random_words(d, 25, 6, rng);
        for (const auto& w : words) {
            auto g = compile(parse_word(d, w));
            for (int c = -3; c <= 3; ++c)
                for (int i = 1; i <= d.rank(); ++i) {
                    auto a = g(theta(d)({c, i}));
                    auto b = theta(d)(g({c, i}));
                    EXPECT_EQ(a, b);
                }
        }
    }
}

TEST(Automorphism, RejectsNonAutomorphisms) {
    auto d = make_diagram(Kind::A, 3);
    EXPECT_THROW(Automorphism(d, {{0, 2}, {0, 1}, {0, 3}}), Error);
    EXPECT_THROW(Automorphism(d, {{0, 1}, {1, 2}, {0, 3}}), Error);
    EXPECT_THROW(Automorphism(d, {{0, 1}, {0, 1}, {0, 3}}), Error);
}

TEST(CanonicalForm, Examples) {
    auto a3 = make_diagram(Kind::A, 3);
    auto c = canonical_form(compose(theta(a3, 8), suspension(a3)));
    EXPECT_EQ(c, (CanonicalForm{6, Torsion::flip, 0}));
    EXPECT_EQ(to_string(c), "theta^6 . flip");

    auto e6 = make_diagram(Kind::E, 6);
    EXPECT_EQ(canonical_form(compose(theta(e6, 6), suspension(e6))), (CanonicalForm{0, Torsion::xi, 0}));

    auto d4 = make_diagram(Kind::D, 4);
    EXPECT_EQ(canonical_form(compose(theta(d4, 5), chi(d4))), (CanonicalForm{5, Torsion::chi, 0}));

    auto a2 = make_diagram(Kind::A, 2);
    EXPECT_EQ(canonical_form(compose(theta(a2, 3), suspension(a2))), (CanonicalForm{3, Torsion::identity, 1}));
}

TEST(CanonicalForm, CompiledWordExamples) {
    EXPECT_EQ(canonical_form(compile(make_diagram(Kind::A, 3), "t^6*phi")), (CanonicalForm{6, Torsion::flip, 0}));
    EXPECT_EQ(canonical_form(compile(make_diagram(Kind::D, 4), "t^5*rho")), (CanonicalForm{5, Torsion::chi, 0}));
    EXPECT_EQ(canonical_form(compile(make_diagram(Kind::E, 6), "t^11*phi")), (CanonicalForm{11, Torsion::xi, 0}));
    EXPECT_EQ(canonical_form(compile(make_diagram(Kind::D, 4), "t^5*rho*rho")),
              (CanonicalForm{5, Torsion::chi2, 0}));
}

TEST(CanonicalForm, OddDSuspensionCarriesFlip) {
    for (int r = 4; r <= 9; ++r) {
        auto d = make_diagram(Kind::D, r);
        auto c = canonical_form(suspension(d));
        EXPECT_EQ(c.w, -(r - 1));
        EXPECT_EQ(c.torsion, r % 2 ? Torsion::xi : Torsion::identity);
    }
}

TEST(CanonicalForm, ReexpansionIsIdentityOnRandomWords) {
    std::mt19937 rng(11);
    for (const auto& d : all_diagrams(9)) {
        for (const auto& w : testing_support::random_words(d, 60, 8, rng)) {
            auto g = compile(parse_word(d, w));
            auto hits = canonical_candidates(g);
            ASSERT_EQ(hits.size(), 1u) << d.name() << " " << w;
            EXPECT_EQ(expand(d, hits.front()), g) << d.name() << " " << w;
        }
    }
}

TEST(FunctorWord, Parsing) {
    auto toks = parse_tokens(" [1] * t^-3 ");
    ASSERT_EQ(toks.size(), 2u);
    EXPECT_EQ(toks[0], (Token{Token::Shift, 1}));
    EXPECT_EQ(toks[1], (Token{Token::Tau, -3}));
    EXPECT_EQ(parse_tokens("t^6*phi").size(), 2u);
    EXPECT_EQ(parse_tokens("t")[0], (Token{Token::Tau, 1}));
    EXPECT_THROW(parse_tokens("t^"), Error);
    EXPECT_THROW(parse_tokens("t^6**phi"), Error);
    EXPECT_THROW(parse_tokens("psi"), Error);
    EXPECT_THROW(parse_tokens(""), Error);
}

TEST(FunctorWord, Legality) {
    auto expect_illegal = [](const DynkinDiagram& d, const std::string& w) {
        try {
            parse_word(d, w);
            ADD_FAILURE() << "accepted " << w << " on " << d.name();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::IllegalToken);
        }
    };
    expect_illegal(make_diagram(Kind::A, 4), "phi");
    expect_illegal(make_diagram(Kind::A, 2), "t^3*phi");
    expect_illegal(make_diagram(Kind::E, 7), "phi");
    expect_illegal(make_diagram(Kind::D, 5), "rho");
    expect_illegal(make_diagram(Kind::A, 3), "rho");
    EXPECT_NO_THROW(parse_word(make_diagram(Kind::A, 5), "phi"));
    EXPECT_NO_THROW(parse_word(make_diagram(Kind::D, 7), "phi"));
    EXPECT_NO_THROW(parse_word(make_diagram(Kind::E, 6), "phi"));
}

TEST(FunctorWord, TokensComposeAsWritten) {
    auto d4 = make_diagram(Kind::D, 4);
    EXPECT_EQ(compile(d4, "phi*rho"), compose(xi(d4), chi(d4)));
    EXPECT_EQ(compile(d4, "rho*phi"), compose(chi(d4), xi(d4)));
    EXPECT_NE(compile(d4, "phi*rho"), compile(d4, "rho*phi"));
    auto a3 = make_diagram(Kind::A, 3);
    EXPECT_EQ(compile(a3, "[2]"), theta(a3, -4));
    EXPECT_EQ(compile(a3, "[-1]*[1]"), Automorphism::identity(a3));
}
