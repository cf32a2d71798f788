#include <gtest/gtest.h>

#include "dahakit/suites.hpp"

using namespace dahakit;

TEST(Dispatch, BackendCompatibility) {
    EXPECT_EQ(compatible_backends("polyrep"), std::vector<std::string>{"qt"});
    EXPECT_EQ(compatible_backends("roots-of-unity"), (std::vector<std::string>{"cyclo", "fp"}));
    EXPECT_THROW(compatible_backends("nope"), IncompatibleParameters);
    for (const auto& s : suite_names()) EXPECT_FALSE(compatible_backends(s).empty()) << s;
}

TEST(Dispatch, MismatchedBackendThrows) {
    SuiteRequest r{"A1", "degenerate", "qt", {}, {}, {}, {}};
    EXPECT_THROW(run_suite(r), BackendMismatch);
    r.backend = "real";
    EXPECT_THROW(run_suite(r), BackendMismatch);
    SuiteRequest u{"Z7", "polyrep", "", 1, {}, {}, {}};
    EXPECT_THROW(run_suite(u), UnsupportedType);
}

TEST(Dispatch, DefaultBackendIsFirstCompatible) {
    SuiteRequest r{"A1", "roots-of-unity", "", {}, {}, {}, {}};
    Report rep = run_suite(r);
    EXPECT_EQ(rep.backend, "cyclo");
    EXPECT_EQ(rep.suite, "roots-of-unity");
    EXPECT_TRUE(rep.passed());
}

TEST(SeedWeights, Parsing) {
    auto s = parse_seed_weights("1,0;0,1", 2);
    ASSERT_EQ(s.seed.size(), 2u);
    EXPECT_EQ(s.seed[1], make_weight({0, 1}));
    EXPECT_TRUE(s.lower.empty());
    auto q = parse_seed_weights("1,1/0,0", 2);
    ASSERT_EQ(q.lower.size(), 1u);
    EXPECT_EQ(q.lower[0], Weight{});
    EXPECT_THROW(parse_seed_weights("1", 2), IncompatibleParameters);
    EXPECT_THROW(parse_seed_weights("1,a", 2), IncompatibleParameters);
    EXPECT_THROW(parse_seed_weights("", 2), IncompatibleParameters);
}

TEST(Summary, EmptyAndMixed) {
    EXPECT_EQ(summary_csv(summarize({})), "type,suite,backend,overall,dimension,free_orbits,sign_multiplicity,failed_checks\n");
    Json good = {{"type", "A1"}, {"suite", "roots-of-unity"}, {"backend", "cyclo"}, {"overall", "pass"},
                 {"data", {{"dimension", 3}}}, {"checks", Json::array()}};
    Json bad = {{"type", "A2"}, {"suite", "polyrep"}, {"backend", "qt"}, {"overall", "fail"},
                {"checks", {{{"name", "x"}, {"status", "fail"}}, {{"name", "y"}, {"status", "pass"}}}}};
    auto rows = summarize({good, bad});
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].dimension, "3");
    EXPECT_EQ(rows[1].failed, 1u);
    std::string text = summary_text(rows);
    EXPECT_NE(text.find("FAIL"), std::string::npos);
    EXPECT_EQ(text.find("FAIL"), text.rfind("FAIL"));
}

TEST(Report, JsonIsDeterministic) {
    SuiteRequest r{"A1", "polyrep", "", 1, {}, {}, {}};
    std::string a = run_suite(r).to_json().dump(), b = run_suite(r).to_json().dump();
    EXPECT_EQ(a, b);
    EXPECT_EQ(Json::parse(a).value("schema", 0), 1);
}
