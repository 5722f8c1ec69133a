#include "report_json.hpp"

#include <gtest/gtest.h>

#include <limits>

using namespace newton_mv;
using nlohmann::json;

namespace {

/// Serialize, print, re-parse and decode.
template <class T>
T round_trip(const T& value)
{
    const json j = value;
    return json::parse(j.dump()).get<T>();
}

} // namespace

TEST(ReportJson, RationalsAreFractionStrings)
{
    EXPECT_EQ(cli::rational_json(Rational(7, 2)), "7/2");
    EXPECT_EQ(cli::rational_json(Rational(3)), "3/1");
    EXPECT_EQ(cli::rational_from_json("-6/4"), Rational(-3, 2));
    EXPECT_EQ(cli::integer_from_json("12345678901234567890123"), Integer("12345678901234567890123"));
    EXPECT_THROW(cli::integer_from_json("1/2"), InvalidArgument);
}

TEST(ReportJson, MixedVolumeResultRoundTrips)
{
    MixedVolumeResult lattice{Rational(7, 2), Integer(7)};
    MixedVolumeResult rational{Rational(1, 3), std::nullopt};
    EXPECT_EQ(round_trip(lattice), lattice);
    EXPECT_EQ(round_trip(rational), rational);
    EXPECT_EQ(json(lattice)["value"], "7/2");
}

TEST(ReportJson, PointsRoundTrip)
{
    const LatticePoint p{-3, 4, 0};
    EXPECT_EQ(round_trip(p), p);
    const LatticePoint huge(std::vector<Integer>{Integer("123456789012345678901234567890"), Integer(1)});
    EXPECT_EQ(round_trip(huge), huge);
    const RationalPoint q{Rational(1, 3), Rational(-2)};
    EXPECT_EQ(round_trip(q), q);
}

TEST(ReportJson, IndexReportRoundTrips)
{
    const std::vector<VirtualSupport> vs{{SupportSet{{0, 0}, {2, 0}, {0, 2}}, SupportSet{{0, 0}, {1, 0}, {0, 1}}},
                                         {SupportSet{{0, 0}, {1, 1}}, SupportSet{{0, 0}}}};
    const IndexReport r = virtual_index(vs);
    const IndexReport back = round_trip(r);
    EXPECT_EQ(back.predicted, r.predicted);
    ASSERT_EQ(back.terms.size(), r.terms.size());
    for (const auto& [mask, term] : r.terms) {
        EXPECT_EQ(back.terms.at(mask).count, term.count);
        EXPECT_EQ(back.terms.at(mask).sign, term.sign);
    }
}

TEST(ReportJson, VerificationReportRoundTripsBitForBit)
{
    const std::vector<SupportSet> s{SupportSet{{0, 0}, {1, 0}, {0, 1}}, SupportSet{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
    const VerificationReport r = verify_bk(s, 5);
    EXPECT_EQ(round_trip(r), r);

    VerificationReport singleton = verify_bk(std::vector<SupportSet>{SupportSet{{3}}}, 2);
    ASSERT_TRUE(std::isinf(singleton.trials.front().min_separation));
    EXPECT_TRUE(json(singleton)["trials"][0]["min_separation"].is_null());
    EXPECT_EQ(round_trip(singleton), singleton);
}

TEST(ReportJson, VirtualVerificationReportRoundTrips)
{
    const std::vector<VirtualSupport> vs{{SupportSet{{0}, {2}}, SupportSet{{0}, {1}}}};
    const auto r = verify_virtual_index(vs, 4);
    EXPECT_EQ(round_trip(r), r);
}

TEST(ReportJson, TrialRecordWithDiagnostics)
{
    TrialRecord t;
    t.seed = std::numeric_limits<std::uint64_t>::max();
    t.observed = 3;
    t.resamples = 5;
    t.max_residual = 1.0 / 3.0;
    t.min_separation = 2.5e-7;
    t.inconclusive = true;
    t.diagnostic = "clustered roots";
    EXPECT_EQ(round_trip(t), t);
}
