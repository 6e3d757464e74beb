#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace mcb;

TEST(Generator, SameSeedSameInstance)
{
    GeneratorParams p;
    auto a = generate_instance(p, 17);
    auto b = generate_instance(p, 17);
    EXPECT_EQ(a, b);
    auto c = generate_instance(p, 18);
    EXPECT_NE(a, c);
}

TEST(Generator, FullOverlapGivesIsomorphicHosts)
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GeneratorParams p;
        p.entities = 4;
        p.overlap = 4;
        auto [g1, g2] = generate_instance(p, seed);
        EXPECT_TRUE(isomorphic(g1, g2)) << seed;
    }
}

TEST(Generator, OptimumAtLeastOverlap)
{
    GeneratorParams p;
    p.entities = 10;
    p.overlap = 3;
    auto [g1, g2] = generate_instance(p, 42);
    EXPECT_GE(solve_bigraphs(g1, g2).optimum, 3);
}

TEST(Generator, InstancesAreValidAndSolid)
{
    for (int i = 0; i < 100; ++i) {
        GeneratorParams p = fixtures::small_params(i);
        p.entities = 3 + i % 6;
        p.overlap = 1 + i % p.entities;
        auto [g1, g2] = generate_instance(p, 2000 + static_cast<std::uint64_t>(i));
        for (const auto & g : {g1, g2}) {
            EXPECT_TRUE(validate(g).empty()) << i;
            EXPECT_TRUE(is_solid(g).solid) << i;
            EXPECT_LE(static_cast<int>(g.entities.size()), p.entities);
            EXPECT_LE(static_cast<int>(g.edges.size()), p.max_edges + p.entities * p.max_arity);
        }
        EXPECT_NO_THROW(parse_document(print_document({g1, g2})));
    }
}

TEST(Generator, ClosedLinksRespectCap)
{
    for (int i = 0; i < 50; ++i) {
        auto [g1, g2] = generate_instance(fixtures::small_params(i), 2500 + static_cast<std::uint64_t>(i));
        EXPECT_LE(closed_edges(g1).size(), 3u);
        EXPECT_LE(closed_edges(g2).size(), 3u);
    }
}

TEST(Generator, OptimumCoversCore)
{
    for (int i = 0; i < 40; ++i) {
        GeneratorParams p = fixtures::small_params(i);
        auto pl = generate_planted(p, 3000 + static_cast<std::uint64_t>(i));
        EXPECT_EQ(static_cast<int>(pl.pattern.entities.size()), p.overlap);
        EXPECT_TRUE(occurs_with(pl.pattern, pl.target, pl.embedding)) << i;
        EXPECT_EQ(solve_bigraphs(pl.pattern, pl.target).optimum, closed_support_size(pl.pattern)) << i;
    }
}

TEST(Generator, PlantedAroundGivenPattern)
{
    auto pattern = fixtures::parent_child();
    std::vector<Control> sig = {{"P", 1}, {"Q", 1}, {"R", 2}};
    GeneratorParams p;
    p.entities = 30;
    p.max_edges = 8;
    auto pl = generate_planted(pattern, sig, p, 4);
    EXPECT_EQ(pl.target.entities.size(), 30u);
    EXPECT_TRUE(occurs_with(pattern, pl.target, pl.embedding));
}

TEST(Generator, InfeasibleParams)
{
    auto kind = [](GeneratorParams p) -> std::optional<ErrorKind> {
        try {
            generate_instance(p, 1);
        }
        catch (const Error & e) {
            return e.kind();
        }
        return std::nullopt;
    };
    GeneratorParams p;
    p.overlap = p.entities + 1;
    EXPECT_EQ(kind(p), ErrorKind::InfeasibleParams);
    p = {};
    p.entities = 0;
    EXPECT_EQ(kind(p), ErrorKind::InfeasibleParams);
    p = {};
    p.link_density = 1.5;
    EXPECT_EQ(kind(p), ErrorKind::InfeasibleParams);
}
