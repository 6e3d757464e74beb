#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace mcb;

TEST(Occurrence, BigraphOccursInItself)
{
    auto g = fixtures::parent_child();
    auto d = build_decomposition(g, g, identity_embedding(g));
    EXPECT_EQ(d.reassemble(), g);
}

TEST(Occurrence, SubtreeWithSiteOccurs)
{
    auto host = fixtures::chain();
    Bigraph p;
    p.regions = 1;
    p.add_entity("x", {"P", 0}, Parent::of_region(0));
    p.add_site(Parent::of_entity("x"));
    Embedding emb;
    emb.entities["x"] = "b";
    EXPECT_TRUE(occurs_with(p, host, emb));
    auto d = build_decomposition(p, host, emb);
    EXPECT_EQ(d.reassemble(), host);
    EXPECT_EQ(d.context.entities.size(), 1u);
    EXPECT_EQ(d.parameter.entities.size(), 1u);
}

TEST(Occurrence, MissingSiteBlocksOccurrence)
{
    auto host = fixtures::chain();
    Bigraph p;
    p.regions = 1;
    p.add_entity("x", {"P", 0}, Parent::of_region(0));
    Embedding emb;
    emb.entities["x"] = "b";
    EXPECT_FALSE(occurs_with(p, host, emb));
    EXPECT_THROW(build_decomposition(p, host, emb), Error);
}

TEST(Occurrence, ClosedEdgeNeedsAllPoints)
{
    auto host = fixtures::parent_child();
    Bigraph p;
    p.regions = 1;
    p.add_entity("x", {"Q", 1}, Parent::of_region(0));
    p.add_site(Parent::of_entity("x"));
    p.add_edge("e").connect(Point::port("x", 0), LinkTarget::edge("e"));
    Embedding emb;
    emb.entities["x"] = "q";
    emb.edges["e"] = "k";
    EXPECT_FALSE(occurs_with(p, host, emb));

    p.edges.clear();
    p.add_outer_name("y").connect(Point::port("x", 0), LinkTarget::outer("y"));
    emb.edges.clear();
    EXPECT_TRUE(occurs_with(p, host, emb));
}

TEST(Occurrence, ControlMismatchFails)
{
    auto host = fixtures::parent_child();
    Bigraph p;
    p.regions = 1;
    p.add_entity("x", {"P", 1}, Parent::of_region(0));
    p.add_site(Parent::of_entity("x"));
    p.add_outer_name("y").connect(Point::port("x", 0), LinkTarget::outer("y"));
    Embedding emb;
    emb.entities["x"] = "q";
    EXPECT_FALSE(occurs_with(p, host, emb));
}
