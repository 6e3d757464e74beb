#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace mcb;

TEST(Oracle, Fig8)
{
    auto r = brute_force_mcb(fixtures::nested_pair(false), fixtures::nested_pair(true));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].score, 1);
}

TEST(Oracle, CapIsEnforced)
{
    GeneratorParams p;
    p.entities = 7;
    p.overlap = 3;
    auto [g1, g2] = generate_instance(p, 1);
    try {
        brute_force_mcb(g1, g2);
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
    }
}

TEST(Oracle, CanonicalPortMapPreservesOrder)
{
    Bigraph a;
    a.regions = 1;
    a.add_entity("v", {"V", 2}, Parent::of_region(0));
    a.add_outer_name("x").add_outer_name("y");
    a.connect(Point::port("v", 0), LinkTarget::outer("x")).connect(Point::port("v", 1), LinkTarget::outer("y"));
    auto ports = canonical_port_map(a, a, {{"v", "v"}}, {});
    ASSERT_TRUE(ports);
    EXPECT_EQ(ports->at(Point::port("v", 0)), Point::port("v", 0));
    EXPECT_EQ(ports->at(Point::port("v", 1)), Point::port("v", 1));
}

TEST(Oracle, ConstraintCheckFlagsGap)
{
    Bigraph two;
    two.regions = 1;
    two.add_entity("x", {"P", 0}, Parent::of_region(0)).add_entity("y", {"P", 0}, Parent::of_entity("x"));
    auto bad = make_mapping({{"a", "x"}, {"c", "y"}}, {}, {});
    auto v = check_solution_constraints(fixtures::chain(), two, bad);
    EXPECT_FALSE(v.empty());
    auto good = make_mapping({{"a", "x"}, {"b", "y"}}, {}, {});
    EXPECT_TRUE(check_solution_constraints(fixtures::chain(), two, good).empty());
}

TEST(Oracle, ConstraintCheckFlagsUnmappedPort)
{
    auto g = fixtures::parent_child();
    auto m = make_mapping({{"p", "p"}}, {}, {});
    EXPECT_FALSE(check_solution_constraints(g, g, m).empty());
}

TEST(Properties, Identity)
{
    for (int i = 0; i < 30; ++i) {
        auto g = generate_instance(fixtures::small_params(i), 1100 + static_cast<std::uint64_t>(i)).first;
        auto r = solve_bigraphs(g, g);
        auto p = check_identity(g, r);
        EXPECT_TRUE(p.pass) << i << " " << p.witness;
    }
}

TEST(Properties, Matching)
{
    for (int i = 0; i < 20; ++i) {
        GeneratorParams p = fixtures::small_params(i);
        p.entities = 5;
        p.overlap = 2 + i % 3;
        auto pl = generate_planted(p, 1200 + static_cast<std::uint64_t>(i));
        auto embs = brute_force_match(pl.pattern, pl.target);
        std::vector<SolutionMapping> found;
        for (const auto & e : embs)
            found.push_back(mapping_of(pl.pattern, pl.target, e));
        EXPECT_NE(std::find(found.begin(), found.end(), mapping_of(pl.pattern, pl.target, pl.embedding)), found.end()) << i;
        auto r = solve_bigraphs(pl.pattern, pl.target);
        auto res = check_matching(pl.pattern, pl.target, embs, r);
        EXPECT_TRUE(res.pass) << i << " " << res.witness;
    }
}

TEST(Properties, CheckPropertiesBundle)
{
    auto g = fixtures::parent_child();
    PropertyInputs in;
    in.third = fixtures::parent_child();
    auto results = check_properties(g, g, solve_bigraphs(g, g), in);
    ASSERT_EQ(results.size(), 3u);
    for (const auto & r : results)
        EXPECT_TRUE(r.pass) << r.name << " " << r.witness;
}

TEST(Properties, SuccessionOnSmallTriples)
{
    for (int i = 0; i < 20; ++i) {
        GeneratorParams p = fixtures::small_params(i);
        p.entities = 3;
        p.overlap = 1 + i % 3;
        auto seed = 1300 + static_cast<std::uint64_t>(i);
        auto [g1, g2] = generate_instance(p, seed);
        GeneratorParams q = p;    // same seed and controls: same signature
        q.overlap = 1 + (i + 1) % 3;
        auto g3 = generate_instance(q, seed).second;
        auto res = check_succession(g1, g2, g3);
        EXPECT_TRUE(res.pass) << i << " " << res.witness;
    }
}
