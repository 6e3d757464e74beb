#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace mcb;

namespace {
auto with_driver(SearchOptions::Driver d) -> SearchOptions
{
    SearchOptions o;
    o.driver = d;
    return o;
}
}

TEST(Solver, Fig8HasTwoSizeOneSolutions)
{
    auto g1 = fixtures::nested_pair(false);
    auto g2 = fixtures::nested_pair(true);
    for (auto d : {SearchOptions::Driver::Descending, SearchOptions::Driver::Default}) {
        auto r = solve_bigraphs(g1, g2, with_driver(d));
        EXPECT_EQ(r.optimum, 1);
        ASSERT_EQ(r.solutions.size(), 2u);
        EXPECT_EQ(r.solutions[0].pairs.front(), std::pair(Element::entity("a"), Element::entity("a")));
        EXPECT_EQ(r.solutions[1].pairs.front(), std::pair(Element::entity("b"), Element::entity("b")));
        EXPECT_FALSE(r.aborted);
    }
}

TEST(Solver, Fig8VertexCountAblation)
{
    SearchOptions o;
    o.score_mode = ScoreMode::VertexCount;
    auto r = solve_bigraphs(fixtures::nested_pair(false), fixtures::nested_pair(true), o);
    EXPECT_EQ(r.optimum, 3);
    ASSERT_EQ(r.solutions.size(), 1u);
    EXPECT_EQ(r.solutions[0].pairs.size(), 3u);
}

TEST(Solver, SamplesMatchFiles)
{
    auto a = fixtures::sample("fig8-1.big").bigraphs[0];
    auto b = fixtures::sample("fig8-2.big").bigraphs[0];
    EXPECT_EQ(a, fixtures::nested_pair(false));
    EXPECT_EQ(b, fixtures::nested_pair(true));
}

// a > b > c against x > y: {a,b} and {b,c} only; {a,c} would skip b.
TEST(Solver, BetweennessExcludesGaps)
{
    Bigraph two;
    two.regions = 1;
    two.add_entity("x", {"P", 0}, Parent::of_region(0)).add_entity("y", {"P", 0}, Parent::of_entity("x"));
    auto r = solve_bigraphs(fixtures::chain(), two);
    EXPECT_EQ(r.optimum, 2);
    ASSERT_EQ(r.solutions.size(), 2u);
    for (const auto & m : r.solutions) {
        std::set<std::string> left;
        for (const auto & [a, b] : m.pairs)
            left.insert(a.id);
        EXPECT_NE(left, (std::set<std::string>{"a", "c"}));
    }
}

TEST(Solver, ClosedLinkCountsTowardsScore)
{
    auto g = fixtures::parent_child();
    auto r = solve_bigraphs(g, g);
    EXPECT_EQ(r.optimum, 3);
    ASSERT_EQ(r.solutions.size(), 1u);
    EXPECT_EQ(r.solutions[0].pairs.size(), 5u);
}

TEST(Solver, DisjointLabelsGiveEmptyOptimum)
{
    Bigraph a;
    a.regions = 1;
    a.add_entity("u", {"U", 0}, Parent::of_region(0));
    Bigraph b;
    b.regions = 1;
    b.add_entity("w", {"W", 0}, Parent::of_region(0));
    auto r = solve_bigraphs(a, b);
    EXPECT_EQ(r.optimum, 0);
    EXPECT_TRUE(r.solutions.empty());
}

TEST(Solver, FirstOnlyStopsAtOne)
{
    SearchOptions o;
    o.enumerate_all = false;
    auto r = solve_bigraphs(fixtures::nested_pair(false), fixtures::nested_pair(true), o);
    EXPECT_EQ(r.optimum, 1);
    EXPECT_EQ(r.solutions.size(), 1u);
}

TEST(Solver, NodeLimitAborts)
{
    GeneratorParams p;
    p.entities = 12;
    p.overlap = 6;
    p.controls = 1;
    auto [g1, g2] = generate_instance(p, 5);
    SearchOptions o;
    o.node_limit = 3;
    auto r = solve_bigraphs(g1, g2, o);
    EXPECT_TRUE(r.aborted);
}

TEST(Solver, DriversAgreeAndMatchOracle)
{
    for (int i = 0; i < 60; ++i) {
        auto [g1, g2] = generate_instance(fixtures::small_params(i), 700 + static_cast<std::uint64_t>(i));
        auto down = solve_bigraphs(g1, g2);
        auto dflt = solve_bigraphs(g1, g2, with_driver(SearchOptions::Driver::Default));
        EXPECT_EQ(down.optimum, dflt.optimum) << i;
        EXPECT_EQ(down.solutions, dflt.solutions) << i;
        EXPECT_EQ(down.solutions, brute_force_mcb(g1, g2)) << i;
    }
}

TEST(Solver, BoundIsAdmissible)
{
    for (int i = 0; i < 20; ++i) {
        auto [g1, g2] = generate_instance(fixtures::small_params(i), 800 + static_cast<std::uint64_t>(i));
        auto e1 = encode(g1);
        auto e2 = encode(g2);
        auto a = audit_bound(e1, e2, descendant_map(e1), descendant_map(e2));
        EXPECT_GT(a.nodes, 0);
        EXPECT_EQ(a.violations, 0) << i;
    }
}

TEST(Solver, SwappedInputsGiveInverseSolutions)
{
    for (int i = 0; i < 30; ++i) {
        auto [g1, g2] = generate_instance(fixtures::small_params(i), 900 + static_cast<std::uint64_t>(i));
        EXPECT_TRUE(check_inverse(solve_bigraphs(g1, g2), solve_bigraphs(g2, g1)).pass) << i;
    }
}

TEST(Solver, SolutionsAreSortedAndScored)
{
    auto [g1, g2] = generate_instance(fixtures::small_params(3), 42);
    auto r = solve_bigraphs(g1, g2);
    EXPECT_TRUE(std::is_sorted(r.solutions.begin(), r.solutions.end()));
    for (const auto & m : r.solutions) {
        EXPECT_EQ(m.score, r.optimum);
        EXPECT_TRUE(std::is_sorted(m.pairs.begin(), m.pairs.end()));
        EXPECT_EQ(inverse(inverse(m)), m);
    }
}

TEST(SearchState, PortLockFollowsEntity)
{
    auto g = fixtures::parent_child();
    auto e = encode(g);
    auto tau = descendant_map(e);
    SearchState s(e, e, tau, tau);
    EXPECT_EQ(s.score(), 0);
    s.assign(0, 0);
    EXPECT_TRUE(s.locked());
    EXPECT_EQ(s.score(), -1);
    auto br = s.select_branch();
    ASSERT_TRUE(br);
    EXPECT_EQ(br->left, 2);
    s.assign(2, 2);
    EXPECT_FALSE(s.locked());
    EXPECT_EQ(s.score(), 1);
    EXPECT_GE(s.bound(), 3);
}
