#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace mcb;

TEST(Bigraph, ValidFixturesHaveNoDiagnostics)
{
    EXPECT_TRUE(validate(fixtures::parent_child()).empty());
    EXPECT_TRUE(validate(fixtures::nested_pair(false)).empty());
    EXPECT_TRUE(validate(fixtures::sample("fig1.big").bigraphs[0]).empty());
}

TEST(Bigraph, ParentCycleIsReported)
{
    auto g = fixtures::chain();
    g.parent["a"] = Parent::of_entity("c");
    auto d = validate(g);
    ASSERT_FALSE(d.empty());
    EXPECT_TRUE(std::any_of(d.begin(), d.end(), [](const auto & x) { return x.kind == Diagnostic::Kind::Acyclicity; }));
}

TEST(Bigraph, UnlinkedPortIsReported)
{
    auto g = fixtures::parent_child();
    g.link.erase(Point::port("q", 0));
    auto d = validate(g);
    EXPECT_TRUE(std::any_of(d.begin(), d.end(), [](const auto & x) { return x.kind == Diagnostic::Kind::MissingLink; }));
}

TEST(Bigraph, IdleEdgeIsReported)
{
    auto g = fixtures::parent_child();
    g.add_edge("idle");
    auto d = validate(g);
    EXPECT_TRUE(std::any_of(d.begin(), d.end(), [](const auto & x) { return x.kind == Diagnostic::Kind::IdleEdge; }));
}

TEST(Bigraph, DanglingParentIsReported)
{
    auto g = fixtures::chain();
    g.parent["c"] = Parent::of_entity("nowhere");
    auto d = validate(g);
    EXPECT_TRUE(std::any_of(d.begin(), d.end(), [](const auto & x) { return x.kind == Diagnostic::Kind::DanglingParent; }));
}

TEST(Bigraph, SolidityViolations)
{
    EXPECT_TRUE(is_solid(fixtures::parent_child()).solid);

    auto site_in_region = fixtures::chain();
    site_in_region.add_site(Parent::of_region(0));
    EXPECT_FALSE(is_solid(site_in_region).solid);

    auto twin_sites = fixtures::parent_child();
    twin_sites.add_site(Parent::of_entity("q"));
    EXPECT_FALSE(is_solid(twin_sites).solid);

    auto empty_region = fixtures::chain();
    empty_region.add_region();
    EXPECT_FALSE(is_solid(empty_region).solid);

    auto open_inner = fixtures::chain();
    open_inner.add_inner_name("x").add_outer_name("y").connect(Point::inner("x"), LinkTarget::outer("y"));
    EXPECT_FALSE(is_solid(open_inner).solid);
}

TEST(Bigraph, Fig1IsSolidWithClosedLinks)
{
    auto g = fixtures::sample("fig1.big").bigraphs[0];
    EXPECT_TRUE(is_solid(g).solid);
    EXPECT_EQ(support_size(g), 7u);
    EXPECT_EQ(g.regions, 2);
    EXPECT_EQ(g.site_count(), 2);
    EXPECT_EQ(g.inner_names, std::set<std::string>{"y"});
    EXPECT_EQ(g.outer_names, std::set<std::string>{"x"});
}

TEST(Bigraph, Navigation)
{
    auto g = fixtures::chain();
    EXPECT_EQ(entity_ancestors(g, "c"), (std::vector<std::string>{"b", "a"}));
    EXPECT_EQ(entity_children(g, Parent::of_entity("a")), std::vector<std::string>{"b"});
    auto pc = fixtures::parent_child();
    EXPECT_EQ(site_children(pc, Parent::of_entity("q")), std::vector<int>{0});
    EXPECT_EQ(preimage(pc, LinkTarget::edge("k")).size(), 2u);
    EXPECT_EQ(pc.ports().size(), 2u);
}
