#include "qaf/errors.hpp"
#include "qaf/properties.hpp"
#include "qaf/solver.hpp"

#include "builders.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qaf;
using qaf::testing::all_subsets;
using qaf::testing::fam;

TEST(CheckBracket, Examples)
{
    auto k4 = all_subsets(4, 2);
    EXPECT_TRUE(check_bracket(k4, 1, 1).holds());
    auto r = check_bracket(k4, 0, 1);
    ASSERT_FALSE(r.holds());
    ASSERT_TRUE(std::holds_alternative<PointSet>(r.witness));
    EXPECT_EQ(std::get<PointSet>(r.witness).size(), 1u);
    auto f = fam({{1, 2, 3}, {4}});
    EXPECT_TRUE(check_bracket(f, 3, 0).holds());
    EXPECT_FALSE(check_bracket(f, 2, 0).holds());
}

TEST(CheckBrace, Examples)
{
    EXPECT_TRUE(check_brace(fam({{1, 2}, {1, 3}, {1, 4}}), 1, 2).holds());
    auto r = check_brace(fam({{1, 2, 3}, {1, 2, 4}}), 1, 2);
    ASSERT_FALSE(r.holds());
    EXPECT_EQ(std::get<Subfamily>(r.witness).indices, (std::vector<std::size_t>{0, 1}));
    EXPECT_TRUE(check_brace(all_subsets(4, 3), 1, 3).holds());
    EXPECT_TRUE(check_brace(fam({{1, 2}}), 0, 2).holds());
    EXPECT_THROW(check_brace(fam({{1}}), 0, 0), InvalidArgument);
}

TEST(CheckPq, Examples)
{
    EXPECT_TRUE(check_pq(fam({{7, 1}, {7, 2}, {7, 3}}), 3, 3).holds());
    EXPECT_TRUE(check_pq(all_subsets(4, 2), 3, 2).holds());
    auto r = check_pq(fam({{1}, {2}, {3}}), 2, 2);
    ASSERT_FALSE(r.holds());
    EXPECT_EQ(std::get<Subfamily>(r.witness).indices, (std::vector<std::size_t>{0, 1}));
    EXPECT_THROW(check_pq(fam({{1}}), 2, 2), InvalidArgument);
    EXPECT_THROW(check_pq(all_subsets(4, 2), 2, 3), InvalidArgument);
}

TEST(Properties, AgreeWithNaiveCheckers)
{
    qaf::testing::Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        auto f = qaf::testing::random_family(rng, 8, 8, 5);
        for (std::size_t m = 0; m <= 3; ++m)
            for (std::size_t d = 0; d <= 3; ++d) {
                auto r = check_bracket(f, d, m);
                ASSERT_EQ(r.holds(), qaf::testing::naive_bracket(f, d, m));
                if (!r.holds()) EXPECT_GT(std::get<PointSet>(r.witness).size(), d);
                if (m >= 1) {
                    auto b = check_brace(f, d, m);
                    ASSERT_EQ(b.holds(), m > f.size() || qaf::testing::naive_brace(f, d, m));
                    if (!b.holds()) {
                        const auto& g = std::get<Subfamily>(b.witness);
                        EXPECT_EQ(g.size(), m);
                        EXPECT_GT(common_points(f, g).size(), d);
                    }
                }
            }
        for (std::size_t p = 2; p <= std::min<std::size_t>(f.size(), 5); ++p)
            for (std::size_t q = 2; q <= p; ++q) {
                auto r = check_pq(f, p, q);
                ASSERT_EQ(r.holds(), qaf::testing::naive_pq(f, p, q));
                if (!r.holds()) {
                    const auto& g = std::get<Subfamily>(r.witness);
                    EXPECT_EQ(g.size(), p);
                    EXPECT_TRUE(is_q_independent(f, g, q));
                }
            }
    }
}

TEST(PqProperty, ReducesToSmallerParameters)
{
    qaf::testing::Rng rng(32);
    for (int i = 0; i < 200; ++i) {
        auto f = qaf::testing::random_family(rng, 7, 8, 3);
        for (std::size_t p = 3; p <= std::min<std::size_t>(f.size(), 5); ++p)
            for (std::size_t q = 3; q <= p; ++q)
                if (check_pq(f, p, q).holds()) EXPECT_TRUE(check_pq(f, p - 1, q - 1).holds());
    }
}

TEST(FindRepresentations, CompleteGraphComplements)
{
    auto k4 = all_subsets(4, 2);
    auto r = find_representations(k4, 2);
    ASSERT_TRUE(r.map);
    for (std::size_t a = 0; a < k4.size(); ++a) EXPECT_EQ(r.map->entries[a], PointSet::prefix(4) - k4[a]);
}

TEST(FindRepresentations, FailsAtFirstUnrepresentableMember)
{
    auto r = find_representations(fam({{1}, {2}, {3}, {4}}), 2);
    EXPECT_FALSE(r.map);
    EXPECT_EQ(std::get<std::size_t>(r.report.witness), 0u);
}

TEST(FindRepresentations, DeterministicPick)
{
    auto r = find_representations(fam({{1, 2}, {3, 4}}), 1);
    ASSERT_TRUE(r.map);
    EXPECT_EQ(r.map->entries[0], PointSet{3});
    EXPECT_EQ(r.map->entries[1], PointSet{1});
}

TEST(FindRepresentations, MatchesNaiveAndIsThreadIndependent)
{
    qaf::testing::Rng rng(33);
    for (int i = 0; i < 200; ++i) {
        auto f = qaf::testing::random_family(rng, 8, 7, 4);
        if (f.size() < 2) continue;
        for (std::size_t t = 1; t <= 3; ++t) {
            auto r = find_representations(f, t);
            ASSERT_EQ(r.map.has_value(), qaf::testing::naive_t_property(f, t));
            auto r4 = find_representations(f, t, 4);
            ASSERT_EQ(r4.map.has_value(), r.map.has_value());
            if (r.map) {
                EXPECT_FALSE(verify_representations(f, *r.map));
                EXPECT_EQ(r4.map->entries, r.map->entries);
            }
        }
    }
}

TEST(VerifyRepresentations, DetectsViolations)
{
    auto k4 = all_subsets(4, 2);
    auto map = *find_representations(k4, 2).map;
    EXPECT_FALSE(verify_representations(k4, map));
    auto bad = map;
    bad.entries[0] = PointSet{0, 2};
    EXPECT_TRUE(verify_representations(k4, bad));
    bad = map;
    bad.entries.pop_back();
    EXPECT_TRUE(verify_representations(k4, bad));
}

TEST(IsTCritical, Examples)
{
    EXPECT_TRUE(is_t_critical(all_subsets(4, 2), 2).holds());
    EXPECT_FALSE(is_t_critical(fam({{1}}), 1).holds());
    EXPECT_FALSE(is_t_critical(all_subsets(5, 2), 2).holds());
}
