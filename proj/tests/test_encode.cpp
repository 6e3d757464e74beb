#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace mcb;

// fig1: 5 entities, 6 ports, and one closure (e0); e1 is reached by inner name y.
TEST(Encode, Fig1Counts)
{
    auto g = encode(fixtures::sample("fig1.big").bigraphs[0]);
    EXPECT_EQ(g.size(), 12);
    EXPECT_EQ(g.entity_count, 5);
    EXPECT_EQ(g.count(VertexKind::Port), 6);
    EXPECT_EQ(g.count(VertexKind::Closure), 1);
    EXPECT_EQ(g.arcs().size(), 12u);
    EXPECT_EQ(g.support_size, 7u);
    const auto & c = g.vertices[static_cast<std::size_t>(g.vertex_of.at(Element::edge("e0")))];
    EXPECT_EQ(c.in_degree, 3);
    EXPECT_FALSE(g.vertex_of.contains(Element::edge("e1")));
    EXPECT_EQ(g.site_below, (std::vector<char>{0, 0, 1, 1, 0}));
}

TEST(Encode, VertexOrderIsEntitiesPortsClosures)
{
    auto g = encode(fixtures::parent_child());
    ASSERT_EQ(g.size(), 5);
    EXPECT_EQ(g.origin[0], Element::entity("p"));
    EXPECT_EQ(g.origin[1], Element::entity("q"));
    EXPECT_EQ(g.origin[2], Element::port("p", 0));
    EXPECT_EQ(g.origin[3], Element::port("q", 0));
    EXPECT_EQ(g.origin[4], Element::edge("k"));
    EXPECT_EQ(g.vertices[2].label, link_label);
    EXPECT_EQ(g.vertices[4].label, closure_label);
    EXPECT_EQ(g.vertices[0].label, "P");
}

TEST(Encode, ArcDirections)
{
    auto g = encode(fixtures::parent_child());
    EXPECT_EQ(g.relation(0, 1), Arc::Out);
    EXPECT_EQ(g.relation(1, 0), Arc::In);
    EXPECT_EQ(g.relation(0, 2), Arc::Out);
    EXPECT_EQ(g.relation(3, 4), Arc::Out);
    EXPECT_EQ(g.relation(2, 3), Arc::None);
    EXPECT_EQ(g.relation(0, 3), Arc::None);
}

TEST(Encode, ClosedEdgesExcludeNameReachedEdges)
{
    auto b = fixtures::sample("fig1.big").bigraphs[0];
    EXPECT_EQ(closed_edges(b), std::set<std::string>{"e0"});
}

TEST(Encode, PlaceOnlyHasNoLinkVertices)
{
    auto g = encode_place(fixtures::parent_child());
    EXPECT_EQ(g.size(), 2);
    EXPECT_EQ(g.arcs().size(), 1u);
}

TEST(Encode, EmptyBigraphRejected)
{
    Bigraph empty;
    try {
        encode(empty);
        FAIL();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::EmptyBigraph);
    }
}

TEST(Encode, DescendantMapIsSymmetricAncestry)
{
    auto g = encode(fixtures::chain());
    auto tau = descendant_map(g);
    EXPECT_TRUE(tau.related(0, 2));
    EXPECT_TRUE(tau.related(2, 0));
    EXPECT_TRUE(tau.related(1, 2));
    EXPECT_FALSE(tau.related(0, 0));

    auto f = encode(fixtures::sample("fig1.big").bigraphs[0]);
    auto t1 = descendant_map(f);
    EXPECT_TRUE(t1.related(0, 1));
    EXPECT_FALSE(t1.related(1, 2));
    EXPECT_FALSE(t1.related(0, 3));
}

TEST(Encode, InitialPartitionGroupsByLabelAndDegree)
{
    auto a = encode(fixtures::parent_child());
    auto b = encode(fixtures::sample("fig1.big").bigraphs[0]);
    auto classes = initial_partition(a, b);
    // only ports are shared: P and Q have no counterpart in fig1, and k has in-degree 2 against 3
    ASSERT_EQ(classes.size(), 1u);
    EXPECT_TRUE(classes[0].is_link());
    EXPECT_EQ(classes[0].left.size(), 2u);
    EXPECT_EQ(classes[0].right.size(), 6u);

    auto self = initial_partition(a, a);
    EXPECT_EQ(self.size(), 4u);
}

TEST(Encode, GeneratedEncodingsAreConsistent)
{
    for (int i = 0; i < 30; ++i) {
        auto [g1, g2] = generate_instance(fixtures::small_params(i), 100 + static_cast<std::uint64_t>(i));
        for (const auto & b : {g1, g2}) {
            auto g = encode(b);
            std::size_t ports = b.ports().size();
            EXPECT_EQ(g.size(), static_cast<int>(b.entities.size() + ports + closed_edges(b).size()));
            for (int v = 0; v < g.size(); ++v) {
                if (g.kind(v) == VertexKind::Closure) {
                    EXPECT_GE(g.vertices[static_cast<std::size_t>(v)].in_degree, 1);
                }
            }
        }
    }
}
