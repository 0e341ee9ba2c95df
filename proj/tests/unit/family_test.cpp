#include "qaf/errors.hpp"
#include "qaf/family.hpp"

#include "builders.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qaf;
using qaf::testing::all_subsets;
using qaf::testing::fam;

TEST(SetFamily, ValidatesMembers)
{
    EXPECT_THROW(SetFamily({PointSet{}}, 3), InvalidArgument);
    EXPECT_THROW(SetFamily({PointSet{5}}, 3), InvalidArgument);
    EXPECT_THROW(SetFamily({PointSet{1}, PointSet{1}}, 3), InvalidArgument);
    EXPECT_THROW(SetFamily({PointSet{1}}, 300), InvalidArgument);
}

TEST(SetFamily, MergePolicyDropsLaterCopies)
{
    std::vector<std::size_t> merged;
    SetFamily f({PointSet{1}, PointSet{2}, PointSet{1}}, 3, DuplicatePolicy::Merge, &merged);
    EXPECT_EQ(f.size(), 2u);
    EXPECT_EQ(merged, std::vector<std::size_t>{2});
}

TEST(SetFamily, UncoveredUniversePointsAreAllowed)
{
    SetFamily f({PointSet{0}}, 10);
    EXPECT_EQ(f.universe(), 10u);
    EXPECT_EQ(f.covered_points(), PointSet{0});
}

TEST(SetFamily, SubfamilyHelpers)
{
    auto f = fam({{0, 1}, {1, 2}, {2, 3}});
    EXPECT_EQ(f.index_of(PointSet{1, 2}), 1u);
    EXPECT_EQ(f.without(1), fam({{0, 1}, {2, 3}}, 4));
    std::vector<std::size_t> idx{2, 0};
    EXPECT_EQ(f.select(idx), fam({{2, 3}, {0, 1}}, 4));
    EXPECT_TRUE(f.same_members(fam({{2, 3}, {0, 1}, {1, 2}})));
    EXPECT_EQ(common_points(f, Subfamily{{0, 1}}), PointSet{1});
}

TEST(IntersectStep, Triangle)
{
    auto step = intersect_step(fam({{1, 2}, {2, 3}, {1, 3}}));
    EXPECT_TRUE(step.same_members(fam({{2}, {3}, {1}}, 4)));
}

TEST(IntersectStep, SingleMemberGivesEmpty)
{
    EXPECT_TRUE(intersect_step(fam({{1, 2}})).empty());
}

TEST(IntersectStep, CompleteGraphEdgesGiveVertices)
{
    auto step = intersect_step(all_subsets(4, 2));
    EXPECT_TRUE(step.same_members(fam({{0}, {1}, {2}, {3}}, 4)));
}

TEST(Iterate, Examples)
{
    auto k4 = all_subsets(4, 2);
    EXPECT_EQ(iterate(k4, 0), k4);
    EXPECT_TRUE(iterate(k4, 2).empty());
    EXPECT_TRUE(iterate(fam({{1, 2}, {2, 3}}), 1).same_members(fam({{2}}, 4)));
    auto levels = intersection_levels(k4);
    ASSERT_EQ(levels.size(), 3u);
    EXPECT_TRUE(levels.back().empty());
}

TEST(GSets, CompleteGraph)
{
    auto k4 = all_subsets(4, 2);
    EXPECT_EQ(g_sets(k4, PointSet{0}).size(), 3u);
    EXPECT_EQ(g_sets(k4, PointSet{0, 1}).indices, std::vector<std::size_t>{0});
    EXPECT_TRUE(g_sets(k4, PointSet{0, 1, 2}).empty());
    EXPECT_THROW(g_sets(k4, PointSet{}), InvalidArgument);
    EXPECT_EQ(g_sets_k(k4, 1, PointSet{0}).size(), 1u);
}

TEST(ProperSets, Examples)
{
    auto ps = proper_sets(fam({{1, 2}, {2, 3}}));
    ASSERT_EQ(ps.size(), 3u);
    EXPECT_EQ(ps[2].points, PointSet{2});
    EXPECT_EQ(proper_sets(all_subsets(4, 2)).size(), 10u);
    EXPECT_EQ(proper_sets(fam({{1}, {2}})).size(), 2u);
}

TEST(ProperSets, WitnessesIntersectToTheSet)
{
    qaf::testing::Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        auto f = qaf::testing::random_family(rng, 8, 7, 4);
        auto ps = proper_sets(f);
        EXPECT_EQ(ps.size(), qaf::testing::naive_proper_sets(f).size());
        for (const auto& p : ps) {
            ASSERT_FALSE(p.witness.empty());
            EXPECT_EQ(common_points(f, p.witness), p.points);
        }
    }
}

TEST(Codim, Examples)
{
    auto k4 = all_subsets(4, 2);
    EXPECT_EQ(codim(k4, PointSet{0}), 2u);
    EXPECT_EQ(codim(k4, PointSet{0, 1}), 1u);
    EXPECT_EQ(codim(fam({{1}, {2}}, 4), PointSet{3}), 0u);
    EXPECT_EQ(codim_chain(k4, PointSet{0}), 2u);
    EXPECT_EQ(codim_chain(k4, PointSet{0, 1}), 1u);
    EXPECT_EQ(codim_chain(fam({{1, 2}}), PointSet{1, 2}), 1u);
    EXPECT_THROW(codim_chain(k4, PointSet{0, 1, 2}), InvalidArgument);
}

TEST(Codim, MatchesDefinitionAndChainLength)
{
    qaf::testing::Rng rng(12);
    for (int i = 0; i < 150; ++i) {
        auto f = qaf::testing::random_family(rng, 7, 7, 5);
        for (const auto& p : proper_sets(f)) {
            auto c = codim(f, p.points);
            EXPECT_EQ(c, codim_chain(f, p.points));
            EXPECT_EQ(c, qaf::testing::naive_codim(f, p.points.to_vector()));
        }
        for (Point x = 0; x < f.universe(); ++x)
            EXPECT_EQ(codim(f, PointSet{x}), qaf::testing::naive_codim(f, {x}));
    }
}

TEST(Iterate, MatchesNaiveLevels)
{
    qaf::testing::Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        auto f = qaf::testing::random_family(rng, 9, 8, 5);
        for (std::size_t k = 0; k < 4; ++k) {
            auto lib = iterate(f, k);
            auto ref = qaf::testing::naive_level(f, k);
            ASSERT_EQ(lib.size(), ref.size());
            for (const auto& s : lib) EXPECT_TRUE(ref.count(s.to_vector()));
        }
    }
}
