#pragma once

#include "mcb/mcb.hpp"

#include <string>

namespace fixtures {

using namespace mcb;

inline auto sample(const std::string & name) -> Document { return parse_document(read_file(std::string(MCB_SAMPLES) + "/" + name)); }

/// A(1) holding B(2), every port on its own outer name; `flip` nests B over A.
inline auto nested_pair(bool flip) -> Bigraph
{
    Bigraph g;
    g.regions = 1;
    auto outer = flip ? "b" : "a";
    auto inner = flip ? "a" : "b";
    auto ctl = [](const std::string & v) { return v == "a" ? Control{"A", 1} : Control{"B", 2}; };
    g.add_entity(outer, ctl(outer), Parent::of_region(0)).add_entity(inner, ctl(inner), Parent::of_entity(outer));
    g.add_outer_name("x0").add_outer_name("x1").add_outer_name("x2");
    g.connect(Point::port("a", 0), LinkTarget::outer("x0"))
        .connect(Point::port("b", 0), LinkTarget::outer("x1"))
        .connect(Point::port("b", 1), LinkTarget::outer("x2"));
    return g;
}

/// r0 -> p:P(1) -> q:Q(1) with a site under q, ports of p and q on closed edge k.
inline auto parent_child() -> Bigraph
{
    Bigraph g;
    g.regions = 1;
    g.add_entity("p", {"P", 1}, Parent::of_region(0)).add_entity("q", {"Q", 1}, Parent::of_entity("p"));
    g.add_site(Parent::of_entity("q"));
    g.add_edge("k").connect(Point::port("p", 0), LinkTarget::edge("k")).connect(Point::port("q", 0), LinkTarget::edge("k"));
    return g;
}

/// Three P(0) entities in a chain a > b > c.
inline auto chain() -> Bigraph
{
    Bigraph g;
    g.regions = 1;
    g.add_entity("a", {"P", 0}, Parent::of_region(0)).add_entity("b", {"P", 0}, Parent::of_entity("a"));
    g.add_entity("c", {"P", 0}, Parent::of_entity("b"));
    return g;
}

inline auto small_params(int i) -> GeneratorParams
{
    GeneratorParams p;
    p.entities = 4;
    p.max_edges = 3;
    p.overlap = 1 + i % 4;
    p.controls = 1 + i % 3;
    p.max_arity = 1 + i % 2;
    return p;
}

}
