#include "commands.hpp"
#include "report_json.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace newton_mv;
using nlohmann::json;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(NEWTON_MV_FIXTURE_DIR) + "/" + name; }

const std::string kTs = fixture("triangle_square.json");
const std::string kVirtual = fixture("virtual_pairs.json");
const std::string kLine = fixture("segments_1d.json");

} // namespace

TEST(CliBk, TriangleSquarePredictsTwo)
{
    const auto r = run({"bk", kTs, "T", "S"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "predicted = 2\n");
}

TEST(CliBk, JsonOutput)
{
    const auto r = run({"bk", kTs, "T", "S", "--json"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["predicted"], "2");
    EXPECT_EQ(j["names"], json({"T", "S"}));
}

TEST(CliMv, SquareWithItself)
{
    const auto r = run({"mv", kTs, "S", "S"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "V = 1, n!V = 2\n");
}

TEST(CliMv, JsonReparsesToTheLibraryValue)
{
    const auto r = run({"--json", "mv", kTs, "T", "S"});
    ASSERT_EQ(r.code, 0);
    const std::vector<Polytope> bodies{convex_hull(SupportSet{{0, 0}, {1, 0}, {0, 1}}),
                                       convex_hull(SupportSet{{0, 0}, {1, 0}, {0, 1}, {1, 1}})};
    EXPECT_EQ(json::parse(r.out).get<MixedVolumeResult>(), mixed_volume(bodies));
}

TEST(CliMv, ArityErrorNamesTheCommand)
{
    const auto r = run({"mv", kTs, "S"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("mv: expected 2 support names"), std::string::npos) << r.err;
}

TEST(CliHull, ListsEverySupport)
{
    const auto r = run({"hull", kTs});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("T: 3 vertices, affine dim 2, volume 1/2"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("S: 4 vertices, affine dim 2, volume 1,"), std::string::npos) << r.out;
}

TEST(CliHull, JsonVerticesAreFractions)
{
    const auto r = run({"hull", kTs, "T", "--json"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    ASSERT_EQ(j["polytopes"].size(), 1u);
    EXPECT_EQ(j["polytopes"][0]["volume"], "1/2");
    EXPECT_EQ(j["polytopes"][0]["vertices"][1], json({"0/1", "1/1"}));
}

TEST(CliComplete, MarksAddedPoints)
{
    const auto r = run({"complete", kVirtual, "D"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("completion of D: 6 points (3 added)"), std::string::npos) << r.out;
    const auto j = json::parse(run({"complete", kVirtual, "D", "--json"}).out);
    EXPECT_EQ(j["size"], 6);
    EXPECT_EQ(j["points"][4], json({1, 1}));
}

TEST(CliComplete, NeedsExactlyOneName)
{
    EXPECT_EQ(run({"complete", kVirtual, "D", "T"}).code, 2);
}

TEST(CliVirtualMv, ReportsValueIndexAndTerms)
{
    const auto r = run({"virtual-mv", kVirtual, "d_over_t", "s_over_t"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(run({"virtual-mv", kVirtual, "d_over_t", "s_over_t", "--json"}).out);
    EXPECT_TRUE(j["consistent"].get<bool>());
    const IndexReport index = j["index"].get<IndexReport>();
    EXPECT_EQ(Rational(index.predicted), cli::rational_from_json(j["normalized"]));
    EXPECT_EQ(index.terms.size(), 4u);
}

TEST(CliVirtualMv, OneDimensionalSegments)
{
    const auto r = run({"virtual-mv", kLine, "a_over_b"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("V = 1, n!V = 1\nindex = 1\n"), std::string::npos) << r.out;
}

TEST(CliVirtualMv, PlainSupportNameIsRejected)
{
    EXPECT_EQ(run({"virtual-mv", kLine, "A"}).code, 2);
}

TEST(CliVerify, SupportsPass)
{
    const auto r = run({"verify", kTs, "T", "S"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "predicted = 2, matched 20/20 trials, verdict pass\n");
}

TEST(CliVerify, TrialsFlagAndJsonRoundTrip)
{
    const auto r = run({"verify", kTs, "T", "S", "--trials", "6", "--json"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    const auto report = j.get<VerificationReport>();
    EXPECT_EQ(report.trials.size(), 6u);
    // Re-encoding the decoded report gives back the document, envelope keys aside.
    json again = report;
    again["command"] = "verify";
    again["kind"] = "bk";
    EXPECT_EQ(again, j);
}

TEST(CliVerify, VirtualPairs)
{
    const auto r = run({"verify", kVirtual, "t_over_1", "s_over_1", "--trials", "5"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("predicted = 2, empirical = 2, verdict pass"), std::string::npos) << r.out;
}

TEST(CliVerify, FailureExitsWithOne)
{
    const auto r = run({"verify", fixture("strict_tolerance.json"), "T", "S"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("verdict fail"), std::string::npos) << r.out;
}

TEST(CliVerify, UnsupportedDimensionIsAnInputError)
{
    const auto r = run({"verify", fixture("cube_3d.json"), "C", "C", "E"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("n = 1 or 2"), std::string::npos) << r.err;
}

TEST(CliVerify, EnvironmentSeedChangesTrials)
{
    const auto base = json::parse(run({"verify", kTs, "T", "S", "--trials", "2", "--json"}).out);
    ::setenv("NEWTON_MV_SEED", "77", 1);
    const auto seeded = json::parse(run({"verify", kTs, "T", "S", "--trials", "2", "--json"}).out);
    const auto again = json::parse(run({"verify", kTs, "T", "S", "--trials", "2", "--json"}).out);
    ::unsetenv("NEWTON_MV_SEED");
    EXPECT_NE(base["trials"][0]["seed"], seeded["trials"][0]["seed"]);
    EXPECT_EQ(seeded, again);
}

TEST(CliFuzz, AlexandrovFenchelPasses)
{
    const auto r = run({"fuzz", "--property", "af", "--dim", "2", "--count", "200"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "af: 200 instances in dim 2, 0 violations\n");
}

TEST(CliFuzz, EveryPropertyRuns)
{
    for (const char* p : {"bm", "multilinearity", "cancellation", "rational-bk"}) {
        const auto r = run({"fuzz", "--property", p, "--dim", "2", "--count", "30", "--seed", "5", "--json"});
        EXPECT_EQ(r.code, 0) << p << r.err;
        const json j = json::parse(r.out);
        EXPECT_EQ(j["property"], p);
        EXPECT_EQ(j["instances"], 30);
        EXPECT_EQ(j["violations"], 0);
    }
}

TEST(CliFuzz, SameSeedSameReport)
{
    const std::vector<std::string> args{"fuzz", "--property", "bm", "--count", "40", "--seed", "9", "--json"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliFuzz, RejectsBadOptions)
{
    EXPECT_EQ(run({"fuzz", "--property", "nope"}).code, 2);
    EXPECT_EQ(run({"fuzz", "--property", "af", "--dim", "1"}).code, 2);
    EXPECT_EQ(run({"fuzz", "--property", "af", "--dim", "9"}).code, 2);
    EXPECT_EQ(run({"fuzz"}).code, 2);
}

TEST(CliErrors, ExitCodes)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"bk", "/nonexistent.json", "A"}).code, 2);
    EXPECT_EQ(run({"bk", kTs, "T", "Q"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliErrors, MalformedFixtureReportsPosition)
{
    const auto r = run({"hull", fixture("malformed.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("malformed.json:4:"), std::string::npos) << r.err;
}

TEST(CliErrors, WrongPointLengthReportsField)
{
    const auto r = run({"hull", fixture("wrong_arity_point.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("supports.T[1]: expected 2 coordinates, got 3"), std::string::npos) << r.err;
}
