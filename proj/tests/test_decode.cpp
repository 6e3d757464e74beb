#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace mcb;

namespace {
auto saturated(const Bigraph & g1, const Bigraph & g2) -> std::vector<TripleSolution>
{
    std::vector<TripleSolution> out;
    for (const auto & m : solve_bigraphs(g1, g2).solutions)
        out.push_back(saturate_interface(decode_solution(m, g1, g2), g1, g2));
    return out;
}
}

TEST(Decode, OpenCommonBigraph)
{
    auto g = fixtures::parent_child();
    auto m = solve_bigraphs(g, g).solutions.at(0);
    auto gm = decode_common(m, g);
    EXPECT_EQ(gm.regions, 1);
    EXPECT_EQ(gm.site_count(), 2);
    EXPECT_EQ(gm.edges, std::set<std::string>{"k"});
    EXPECT_TRUE(gm.outer_names.empty());
    EXPECT_TRUE(validate(gm).empty());
}

TEST(Decode, UnmatchedPortsGetFreshNames)
{
    auto r = solve_bigraphs(fixtures::nested_pair(false), fixtures::nested_pair(true));
    auto gm = decode_common(r.solutions.at(1), fixtures::nested_pair(false));
    EXPECT_EQ(gm.outer_names, (std::set<std::string>{port_name("b", 0), port_name("b", 1)}));
}

TEST(Decode, RejectsInvalidMappings)
{
    auto g = fixtures::parent_child();
    SolutionMapping m;
    m.pairs = {{Element::entity("p"), Element::entity("p")}};
    m.score = -1;
    EXPECT_THROW(decode_common(m, g), Error);
    m.score = 1;
    try {
        decode_common(m, g);
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidMapping);
    }
    m.pairs = {{Element::entity("nope"), Element::entity("p")}};
    EXPECT_THROW(decode_common(m, g), Error);
}

TEST(Decode, DecompositionsReassembleHosts)
{
    for (int i = 0; i < 30; ++i) {
        auto [g1, g2] = generate_instance(fixtures::small_params(i), 300 + static_cast<std::uint64_t>(i));
        for (const auto & m : solve_bigraphs(g1, g2).solutions) {
            auto t = decode_solution(m, g1, g2);
            EXPECT_EQ(t.decomposition1.reassemble(), g1);
            EXPECT_EQ(t.decomposition2.reassemble(), g2);
            EXPECT_EQ(t.triples.size(), m.pairs.size());
        }
    }
}

TEST(Saturate, SelfSolutionIsIsomorphicToInput)
{
    auto g = fixtures::parent_child();
    auto s = saturated(g, g);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_TRUE(isomorphic(s[0].common, g));
}

TEST(Saturate, SharedHostLinkMergesNames)
{
    auto doc = fixtures::sample("fig4.big");
    const auto & g1 = doc.bigraphs[0];
    const auto & g2 = doc.bigraphs[1];
    auto r = solve_bigraphs(g1, g2);
    EXPECT_EQ(r.optimum, 2);
    auto s = saturated(g1, g2);
    ASSERT_EQ(s.size(), 1u);
    const auto & gm = s[0].common;
    EXPECT_EQ(gm.entities.size(), 2u);
    EXPECT_EQ(gm.outer_names.size(), 1u);
    EXPECT_EQ(gm.regions, 1);
    EXPECT_EQ(gm.site_count(), 0);
    EXPECT_EQ(gm.link.at(Point::port("c", 0)), gm.link.at(Point::port("d", 0)));
    EXPECT_TRUE(surviving_refinements(s[0], g1, g2).empty());
}

TEST(Saturate, Fig8KeepsNamesApart)
{
    auto s = saturated(fixtures::nested_pair(false), fixtures::nested_pair(true));
    ASSERT_EQ(s.size(), 2u);
    // A alone: a site for B below it in G1 only, so the site stays
    EXPECT_EQ(s[0].common.site_count(), 1);
    EXPECT_EQ(s[1].common.outer_names.size(), 2u);
}

TEST(Saturate, IsIdempotentAndMaximal)
{
    for (int i = 0; i < 40; ++i) {
        auto [g1, g2] = generate_instance(fixtures::small_params(i), 400 + static_cast<std::uint64_t>(i));
        for (const auto & m : solve_bigraphs(g1, g2).solutions) {
            auto once = saturate_interface(decode_solution(m, g1, g2), g1, g2);
            auto twice = saturate_interface(once, g1, g2);
            EXPECT_TRUE(isomorphic(once.common, twice.common)) << i;
            EXPECT_TRUE(surviving_refinements(once, g1, g2).empty()) << i;
            EXPECT_TRUE(occurs_with(once.common, g1, host_embedding(m, Side::Left)));
            EXPECT_TRUE(occurs_with(once.common, g2, host_embedding(m, Side::Right)));
        }
    }
}

TEST(Saturate, EncodedPathMatchesScan)
{
    for (int i = 0; i < 30; ++i) {
        auto [g1, g2] = generate_instance(fixtures::small_params(i), 500 + static_cast<std::uint64_t>(i));
        auto e1 = encode(g1);
        auto e2 = encode(g2);
        for (const auto & m : solve_bigraphs(g1, g2).solutions) {
            auto t = decode_solution(m, g1, g2);
            auto scan = saturate_interface(t, g1, g2);
            auto fast = saturate_interface(t, g1, g2, {}, &e1, &e2);
            EXPECT_EQ(scan.common, fast.common) << i;
        }
    }
}
