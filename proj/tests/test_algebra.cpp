#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace mcb;

TEST(Algebra, IdentityIsNeutral)
{
    auto g = fixtures::parent_child();
    EXPECT_EQ(compose(identity(1), g), g);
    EXPECT_EQ(compose(g, identity(1)), g);
}

TEST(Algebra, ComposePlacesRegionIntoSite)
{
    auto ctx = fixtures::parent_child();
    Bigraph arg;
    arg.regions = 1;
    arg.add_entity("z", {"Z", 0}, Parent::of_region(0));
    auto g = compose(ctx, arg);
    EXPECT_EQ(g.parent.at("z"), Parent::of_entity("q"));
    EXPECT_EQ(g.site_count(), 0);
    EXPECT_EQ(g.entities.size(), 3u);
}

TEST(Algebra, ComposeFusesNames)
{
    Bigraph top;
    top.regions = 1;
    top.add_entity("t", {"T", 1}, Parent::of_region(0));
    top.add_site(Parent::of_entity("t"));
    top.add_edge("e").add_inner_name("x").connect(Point::port("t", 0), LinkTarget::edge("e")).connect(Point::inner("x"), LinkTarget::edge("e"));
    Bigraph bottom;
    bottom.regions = 1;
    bottom.add_entity("u", {"U", 1}, Parent::of_region(0));
    bottom.add_outer_name("x").connect(Point::port("u", 0), LinkTarget::outer("x"));
    auto g = compose(top, bottom);
    EXPECT_EQ(g.link.at(Point::port("u", 0)), LinkTarget::edge("e"));
    EXPECT_TRUE(g.inner_names.empty());
}

TEST(Algebra, ComposeRejectsMismatchedFaces)
{
    try {
        compose(fixtures::chain(), fixtures::chain());
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::InterfaceMismatch);
    }
}

TEST(Algebra, TensorRenumbersAndRejectsOverlap)
{
    auto a = fixtures::parent_child();
    Bigraph b;
    b.regions = 1;
    b.add_entity("z", {"Z", 0}, Parent::of_region(0));
    b.add_site(Parent::of_entity("z"));
    auto t = tensor(a, b);
    EXPECT_EQ(t.regions, 2);
    EXPECT_EQ(t.parent.at("z"), Parent::of_region(1));
    EXPECT_EQ(t.sites.at(1), Parent::of_entity("z"));

    try {
        tensor(a, a);
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::SupportOverlap);
    }
}

TEST(Algebra, IsomorphismIgnoresIdentifiers)
{
    auto a = fixtures::parent_child();
    Bigraph b;
    b.regions = 1;
    b.add_entity("m", {"P", 1}, Parent::of_region(0)).add_entity("n", {"Q", 1}, Parent::of_entity("m"));
    b.add_site(Parent::of_entity("n"));
    b.add_edge("j").connect(Point::port("m", 0), LinkTarget::edge("j")).connect(Point::port("n", 0), LinkTarget::edge("j"));
    EXPECT_TRUE(isomorphic(a, b));
    b.entities["n"] = {"P", 1};
    EXPECT_FALSE(isomorphic(a, b));
}

TEST(Algebra, TensorOfIdentitiesIsIdentity)
{
    EXPECT_TRUE(isomorphic(tensor(identity(1, {"x"}), identity(2, {"y"})), identity(3, {"x", "y"})));
}
