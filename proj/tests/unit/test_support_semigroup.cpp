#include <newton_mv/support_semigroup.hpp>

#include <gtest/gtest.h>

using namespace newton_mv;

namespace {

const SupportSet kTriangle{{0, 0}, {1, 0}, {0, 1}};
const SupportSet kSquare{{0, 0}, {1, 0}, {0, 1}, {1, 1}};

Integer bk(std::vector<SupportSet> s) { return bk_count(s); }

} // namespace

TEST(Product, Examples)
{
    EXPECT_EQ(product(SupportSet{{0}, {1}}, SupportSet{{0}, {1}}), (SupportSet{{0}, {1}, {2}}));
    EXPECT_EQ(product(kTriangle, SupportSet{{2, -1}}), (SupportSet{{2, -1}, {3, -1}, {2, 0}}));
    EXPECT_EQ(product(SupportSet{{0, 0}, {1, 0}}, SupportSet{{0, 0}, {0, 1}}), kSquare);
    EXPECT_THROW(product(kSquare, SupportSet{{0}}), DimensionMismatch);
}

TEST(Power, Examples)
{
    EXPECT_EQ(power(SupportSet{{0}, {1}}, 0), (SupportSet{{0}}));
    EXPECT_EQ(power(SupportSet{{0}, {1}}, 1), (SupportSet{{0}, {1}}));
    EXPECT_EQ(power(SupportSet{{0}, {1}}, 3), (SupportSet{{0}, {1}, {2}, {3}}));
    EXPECT_EQ(power(kTriangle, 2).size(), 6u);
}

TEST(Completion, Examples)
{
    EXPECT_EQ(completion(SupportSet{{0, 0}, {2, 0}, {0, 2}}), (SupportSet{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}}));
    EXPECT_EQ(completion(SupportSet{{0}, {2}}), (SupportSet{{0}, {1}, {2}}));
    EXPECT_EQ(completion(kSquare), kSquare);
}

TEST(Equivalent, Examples)
{
    EXPECT_TRUE(equivalent(SupportSet{{0}, {2}}, SupportSet{{0}, {1}, {2}}));
    EXPECT_FALSE(equivalent(SupportSet{{0}, {1}}, SupportSet{{0}, {2}}));
    EXPECT_TRUE(equivalent(kTriangle, completion(kTriangle)));
    EXPECT_THROW(equivalent(kSquare, SupportSet{{0}}), DimensionMismatch);
}

TEST(BkCount, Examples)
{
    EXPECT_EQ(bk({SupportSet{{0}, {1}, {2}, {3}, {4}}}), 4);
    EXPECT_EQ(bk({kTriangle, kTriangle}), 1);
    EXPECT_EQ(bk({kTriangle, kSquare}), 2);
    EXPECT_EQ(bk({kSquare, SupportSet{{5, 5}}}), 0);
    EXPECT_THROW(bk({kSquare}), InvalidArgument);
}

TEST(KushnirenkoCount, Examples)
{
    EXPECT_EQ(kushnirenko_count(kTriangle), 1);
    EXPECT_EQ(kushnirenko_count(kSquare), 2);
    EXPECT_EQ(kushnirenko_count(SupportSet{{0}, {1}, {2}, {3}, {4}, {5}, {6}}), 6);
    EXPECT_EQ(kushnirenko_count(SupportSet{{-3}, {4}}), 7);
}

TEST(VirtualIndex, OriginDenominatorsReduceToBk)
{
    const std::vector<VirtualSupport> vs{{kTriangle, SupportSet{{0, 0}}}, {kSquare, SupportSet{{0, 0}}}};
    const auto r = virtual_index(vs);
    EXPECT_EQ(r.predicted, 2);
    ASSERT_EQ(r.terms.size(), 4u);
    EXPECT_EQ(r.terms.at(0b11).count, 2);
    EXPECT_EQ(r.terms.at(0b11).sign, 1);
    EXPECT_EQ(r.terms.at(0b01).count, 0);
    EXPECT_EQ(r.terms.at(0b01).sign, -1);
    EXPECT_EQ(r.terms.at(0b00).count, 0);
}

TEST(VirtualIndex, SegmentsInOneDimension)
{
    const std::vector<VirtualSupport> vs{{SupportSet{{0}, {2}}, SupportSet{{0}, {1}}}};
    const auto r = virtual_index(vs);
    EXPECT_EQ(r.predicted, 1);
    EXPECT_EQ(r.terms.at(1).count, 2);
    EXPECT_EQ(r.terms.at(1).sign, 1);
    EXPECT_EQ(r.terms.at(0).count, 1);
    EXPECT_EQ(r.terms.at(0).sign, -1);
}

TEST(VirtualIndex, SingletonPairContributesNothing)
{
    const std::vector<VirtualSupport> vs{{SupportSet{{1, 2}}, SupportSet{{3, 0}}}, {kSquare, kTriangle}};
    EXPECT_EQ(virtual_index(vs).predicted, 0);
}

TEST(VirtualIndex, TermSupportsFollowTheMask)
{
    const std::vector<VirtualSupport> vs{{kTriangle, SupportSet{{0, 0}}}, {kSquare, SupportSet{{1, 1}}}};
    const auto t = index_term_supports(vs, 0b01);
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[0], kTriangle);
    EXPECT_EQ(t[1], (SupportSet{{1, 1}}));
}

TEST(VirtualIndex, Errors)
{
    EXPECT_THROW(VirtualSupport(kSquare, SupportSet{{0}}), DimensionMismatch);
    EXPECT_THROW(virtual_index(std::vector<VirtualSupport>{}), InvalidArgument);
    const std::vector<VirtualSupport> one{{kSquare, kTriangle}};
    EXPECT_THROW(virtual_index(one), InvalidArgument);
}
