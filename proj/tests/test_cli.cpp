#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "orbitq");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = orbitq::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, ClassifyJson) {
    auto r = run({"classify", "--diagram", "D4", "--functor", "t^5*rho", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = orbitq::Json::parse(r.out);
    EXPECT_EQ(j["verdict"], "realizable");
    EXPECT_EQ(j["family"], "D_4_s_3");
    EXPECT_EQ(j["s"], 1);
    EXPECT_EQ(j["asashiba"]["t"], 3);
}

TEST(Cli, ClassifyNotRealizable) {
    auto r = run({"classify", "--diagram", "E6", "--functor", "t^5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("not realizable: f=5/11"), std::string::npos) << r.out;
}

TEST(Cli, QuotientDot) {
    auto r = run({"quotient", "--diagram", "A2", "--functor", "t^1", "--dot"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
    EXPECT_NE(r.out.find("\"(0,1)\" -> \"(0,2)\";"), std::string::npos);
    EXPECT_NE(r.out.find("\"(0,2)\" -> \"(0,1)\";"), std::string::npos);
    EXPECT_NE(r.out.find("style=dashed"), std::string::npos);
}

TEST(Cli, QuotientJsonCounts) {
    auto r = run({"quotient", "--diagram", "E6", "--functor", "t^11*phi", "--json"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(orbitq::Json::parse(r.out)["vertices"].size(), 66u);
}

TEST(Cli, OrbitHom) {
    auto r = run({"hom", "--diagram", "D4", "--functor", "t^5*rho", "--from", "(0,1)", "--to", "(0,2)"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "1\n");
    auto r2 = run({"orbit-hom", "--diagram", "A2", "--functor", "t^1", "--from", "(0,1)", "--to", "(0,2)"});
    EXPECT_EQ(r2.out, "1\n");
    auto bad = run({"orbit-hom", "--diagram", "A2", "--functor", "t^1", "--from", "(4,1)", "--to", "(0,2)"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(bad.err.rfind("error: VertexNotInQuotient:", 0), 0u) << bad.err;
}

TEST(Cli, MeshHom) {
    auto lin = run({"hom", "--diagram", "D5", "--from", "(0,2)", "--json"});
    auto ham = run({"hom", "--diagram", "D5", "--from", "(0,2)", "--json", "--method", "hammock"});
    ASSERT_EQ(lin.code, 0);
    EXPECT_EQ(lin.out, ham.out);
    auto narrow = run({"hom", "--diagram", "D5", "--from", "(0,2)", "--window", "0:2"});
    EXPECT_EQ(narrow.code, 1);
    EXPECT_EQ(narrow.err.rfind("error: WindowTooNarrow:", 0), 0u);
    EXPECT_TRUE(narrow.out.empty());
}

TEST(Cli, UsageErrors) {
    auto r = run({"classify", "--diagram", "A4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err.rfind("error: usage:", 0), 0u);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"window", "--diagram", "A2", "--window", "3"}).code, 2);
    EXPECT_EQ(run({"quotient", "--diagram", "A2", "--functor", "t", "--json", "--dot"}).code, 2);
}

TEST(Cli, DomainErrors) {
    auto r = run({"classify", "--diagram", "A4", "--functor", "phi"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.err, "error: IllegalToken: phi is not available on A4\n");
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run({"diagram", "--diagram", "E9"}).code, 1);
    EXPECT_EQ(run({"quotient", "--diagram", "D4", "--functor", "phi"}).code, 1);
    EXPECT_EQ(run({"presentation", "--family", "D_3m_s/3_1", "--params", "m=2,s=3"}).code, 1);
    EXPECT_EQ(run({"fixture", "--name", "nope"}).code, 1);
    EXPECT_EQ(run({"window", "--diagram", "A2", "--window", "3:1"}).code, 1);
}

TEST(Cli, Realize) {
    const std::string path = testing::TempDir() + "orbitq_realize.json";
    auto r = run({"realize", "--family", "moebius", "--params", "l=2,v=1", "--output", path, "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = orbitq::Json::parse(r.out);
    EXPECT_EQ(j["functor"], "t^5*phi");
    EXPECT_EQ(j["diagram"], "A5");
    std::ifstream file(path);
    auto p = orbitq::Json::parse(file);
    EXPECT_EQ(p["vertices"].size(), 5u);
    EXPECT_EQ(p["family"], "moebius");
    std::remove(path.c_str());
}

TEST(Cli, PresentationAndDiagram) {
    auto r = run({"presentation", "--family", "nakayama", "--params", "v=1,r=3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("alpha_1 alpha_1 alpha_1 = 0"), std::string::npos) << r.out;
    auto d = run({"diagram", "--diagram", "E6", "--json"});
    auto j = orbitq::Json::parse(d.out);
    EXPECT_EQ(j["coxeter_number"], 12);
    EXPECT_EQ(j["loewy_length"], 11);
    EXPECT_EQ(j["arrows"].size(), 5u);
}

TEST(Cli, NormalizeAndWindow) {
    auto r = run({"normalize", "--diagram", "A3", "--functor", "t^8*[1]"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("canonical: theta^6 . flip\n", 0), 0u) << r.out;
    auto w = run({"window", "--diagram", "A2", "--window", "0:1", "--json"});
    auto j = orbitq::Json::parse(w.out);
    EXPECT_EQ(j["vertices"].size(), 4u);
    EXPECT_EQ(j["arrows"].size(), 3u);
}

TEST(Cli, FixturesAndIsocheck) {
    auto list = run({"fixture", "--list"});
    EXPECT_NE(list.out.find("D_6_1/3_1"), std::string::npos);
    auto iso = run({"isocheck", "--lhs", "fixture:moebius_1_2", "--rhs", "quotient:A3:t^6*phi"});
    EXPECT_EQ(iso.out, "isomorphic\n");
    auto non = run({"isocheck", "--lhs", "fixture:D_4_1_1", "--rhs", "fixture:D_4_1_2", "--json"});
    EXPECT_EQ(orbitq::Json::parse(non.out)["isomorphic"], false);
    auto nak = run({"isocheck", "--lhs", "nakayama:3,4", "--rhs", "quotient:A3:t^3", "--json"});
    auto j = orbitq::Json::parse(nak.out);
    EXPECT_EQ(j["isomorphic"], true);
    EXPECT_EQ(j["witness"]["vertex_map"].size(), 9u);
    EXPECT_EQ(run({"isocheck", "--lhs", "graph:1", "--rhs", "fixture:D_4_1_1"}).code, 2);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"quotient", "--diagram", "D4", "--functor", "t^5*rho", "--json"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, SelftestScaled) {
    setenv("ORBITQ_SWEEP_SCALE", "0.05", 1);
    auto r = run({"selftest"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("selftest: 7 passed, 0 failed"), std::string::npos) << r.out;
    setenv("ORBITQ_SWEEP_SCALE", "lots", 1);
    EXPECT_EQ(run({"selftest"}).code, 2);
    unsetenv("ORBITQ_SWEEP_SCALE");
}
