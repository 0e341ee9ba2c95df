#include "qaf/errors.hpp"
#include "qaf/solver.hpp"

#include "builders.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qaf;
using qaf::testing::all_subsets;
using qaf::testing::fam;

TEST(TauExact, Examples)
{
    auto r = tau_exact(fam({{1}}));
    EXPECT_EQ(r.tau, 1u);
    EXPECT_EQ(r.witness.points, PointSet{1});
    EXPECT_EQ(tau_exact(fam({{1}, {2}, {3}})).tau, 3u);
    auto k4 = tau_exact(all_subsets(4, 2));
    EXPECT_EQ(k4.tau, 3u);
    EXPECT_TRUE(hits_all(all_subsets(4, 2), k4.witness.points));
}

TEST(TauExact, RejectsEmptyInput)
{
    EXPECT_THROW(tau_exact(std::span<const PointSet>{}), InvalidArgument);
    std::vector<PointSet> bad{PointSet{1}, PointSet{}};
    EXPECT_THROW(tau_exact(bad), InvalidArgument);
}

TEST(HasTTransversal, Examples)
{
    auto x = has_t_transversal(fam({{1, 2}, {2, 3}}), 1);
    ASSERT_TRUE(x);
    EXPECT_EQ(x->points, PointSet{2});
    EXPECT_FALSE(has_t_transversal(all_subsets(4, 2), 2));
    auto f = fam({{0, 5}, {1}, {2, 3}, {4}});
    EXPECT_TRUE(has_t_transversal(f, f.size()));
}

TEST(TauGreedy, Examples)
{
    EXPECT_EQ(tau_greedy(fam({{1, 2}, {2, 3}})).points, PointSet{2});
    EXPECT_EQ(tau_greedy(fam({{1}, {2}})).points, (PointSet{1, 2}));
    EXPECT_EQ(tau_greedy(all_subsets(4, 2)).points, (PointSet{0, 1, 2}));
}

TEST(BruteForceTau, Examples)
{
    EXPECT_EQ(brute_force_tau(fam({{1}}), 3), 1u);
    EXPECT_FALSE(brute_force_tau(all_subsets(4, 2), 2));
    EXPECT_EQ(brute_force_tau(all_subsets(4, 2), 3), 3u);
}

TEST(MinHittingAvoiding, Examples)
{
    auto x = min_hitting_avoiding(fam({{2, 3}, {3, 4}}), PointSet{3}, 2);
    ASSERT_TRUE(x);
    EXPECT_EQ(x->points, (PointSet{2, 4}));
    EXPECT_FALSE(min_hitting_avoiding(fam({{3}}), PointSet{3}, 5));
    auto k4 = all_subsets(4, 2);
    auto y = min_hitting_avoiding(k4.without(0), PointSet{0, 1}, 2);
    ASSERT_TRUE(y);
    EXPECT_EQ(y->points, (PointSet{2, 3}));
}

TEST(TauExact, AgreesWithOraclesOnRandomFamilies)
{
    qaf::testing::Rng rng(21);
    for (int i = 0; i < 300; ++i) {
        auto f = qaf::testing::random_family(rng, 10, 9, 4);
        auto r = tau_exact(f);
        EXPECT_TRUE(hits_all(f, r.witness.points));
        EXPECT_EQ(r.witness.size(), r.tau);
        EXPECT_EQ(r.witness.verified_against, fingerprint(f));
        EXPECT_EQ(r.tau, qaf::testing::naive_tau(f));
        EXPECT_GE(tau_greedy(f).size(), r.tau);
        EXPECT_TRUE(hits_all(f, tau_greedy(f).points));
        for (std::size_t t = 0; t <= r.tau + 1; ++t) EXPECT_EQ(has_t_transversal(f, t).has_value(), r.tau <= t);
    }
}

TEST(TauExact, MonotoneUnderRemoval)
{
    qaf::testing::Rng rng(22);
    for (int i = 0; i < 150; ++i) {
        auto f = qaf::testing::random_family(rng, 10, 9, 3);
        if (f.size() < 2) continue;
        auto tau = tau_exact(f).tau;
        for (std::size_t a = 0; a < f.size(); ++a) EXPECT_LE(tau_exact(f.without(a)).tau, tau);
    }
}

TEST(TauExact, DeterministicWitness)
{
    qaf::testing::Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        auto f = qaf::testing::random_family(rng, 12, 10, 4);
        EXPECT_EQ(tau_exact(f).witness.points, tau_exact(f).witness.points);
    }
}
