#include <chrono>
#include <set>

#include <gtest/gtest.h>

#include <pbent/golden.hpp>
#include <pbent/search.hpp>

#include "property_checks.hpp"

using namespace pbent;

namespace {

using props::boolean_bent;
using props::boolean_walsh;

std::set<std::vector<int>> brute_force_bent(int n) { return props::brute_force_boolean_bent(n); }

std::vector<int> as_bits(const PAryFunction& f) { return {f.values.begin(), f.values.end()}; }

}  // namespace

TEST(Search, BruteForceCounts) {
    EXPECT_EQ(brute_force_bent(2).size(), 8u);
    EXPECT_EQ(brute_force_bent(4).size(), 896u);
}

TEST(Search, FourVariablesIsFastAndBent) {
    for (std::uint64_t seed : {0, 1, 2, 3, 42, 1234, 99999}) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = search_bent(4, seed);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        EXPECT_LT(s, 1.0);
        EXPECT_TRUE(boolean_bent(as_bits(r.f), 4)) << seed;
        EXPECT_TRUE(is_bent(r.f));
    }
}

TEST(Search, Deterministic) {
    for (int n : {2, 4}) {
        auto a = search_bent(n, 5), b = search_bent(n, 5);
        EXPECT_EQ(a.f, b.f);
        ASSERT_EQ(a.trace.size(), b.trace.size());
        for (std::size_t i = 0; i < a.trace.size(); ++i) {
            EXPECT_EQ(a.trace[i].vector, b.trace[i].vector);
            EXPECT_EQ(a.trace[i].W, b.trace[i].W);
        }
    }
}

TEST(Search, TwoVariablesStaysInsideTheBentSet) {
    auto all = brute_force_bent(2);
    std::set<std::vector<int>> seen;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        auto f = as_bits(search_bent(2, seed).f);
        EXPECT_TRUE(all.count(f));
        seen.insert(f);
    }
    EXPECT_FALSE(seen.empty());
}

TEST(Search, TraceEndsAtTheSpectrum) {
    auto r = search_bent(4, 11);
    ASSERT_EQ(r.trace.size(), 16u);
    EXPECT_EQ(r.trace.back().W, boolean_walsh(as_bits(r.f), 4));
    std::set<std::size_t> visited;
    for (const auto& s : r.trace) visited.insert(s.vector);
    EXPECT_EQ(visited.size(), 16u);
    for (const auto& s : r.trace) EXPECT_EQ(s.bit, r.f[s.vector]);
}

TEST(Search, RejectsBadArity) {
    EXPECT_THROW(search_bent(3, 0), unsupported);
    EXPECT_THROW(search_bent(0, 0), unsupported);
    EXPECT_THROW(search_bent(14, 0), unsupported);
}

TEST(Search, WindowPredicate) {
    auto snap = load_fixture(PBENT_GOLDEN_DIR, "worked_examples.json").at("search_n4_snapshot_example").get<std::vector<int>>();
    EXPECT_TRUE(detail::walsh_window_ok(snap, 0, 4));
    EXPECT_FALSE(detail::walsh_window_ok({0}, 3, 4));
    EXPECT_TRUE(detail::walsh_window_ok({0}, 4, 4));
    EXPECT_FALSE(detail::walsh_window_ok({8}, 3, 4));
    EXPECT_EQ(detail::bent_weight_bound(4), 6);
}

TEST(Pruning, WeightPruneKeepsExactlyTheLowWeightBentFunctions) {
    std::vector<std::size_t> order(16);
    std::iota(order.begin(), order.end(), 0);
    std::set<std::vector<int>> leaves;
    explore_bent_tree(4, order, {true, true}, [&](const std::vector<int>& a) { leaves.insert(a); }, nullptr);
    std::set<std::vector<int>> low;
    for (const auto& f : brute_force_bent(4))
        if (std::accumulate(f.begin(), f.end(), 0) <= detail::bent_weight_bound(4)) low.insert(f);
    EXPECT_EQ(leaves, low);
}

TEST(Pruning, NoPruningVisitsEverything) {
    std::vector<std::size_t> order{3, 1, 0, 2};
    std::size_t leaves = 0;
    explore_bent_tree(2, order, {false, false}, [&](const std::vector<int>&) { ++leaves; }, nullptr);
    EXPECT_EQ(leaves, 16u);
}
