#pragma once

// From a solver mapping to the common bigraph G_M, its decompositions in both
// hosts, and the saturated (minimally open) interface.

#include "mcb/occurrence.hpp"
#include "mcb/solver.hpp"

namespace mcb {

enum class Side : std::uint8_t { Left, Right };

/// (element of G_M, element of G1, element of G2).
struct Triple {
    Element common;
    Element left;
    Element right;

    auto operator<=>(const Triple &) const = default;
};

struct TripleSolution {
    SolutionMapping mapping;
    Bigraph common;
    std::vector<Triple> triples;
    Decomposition decomposition1;
    Decomposition decomposition2;
};

/// Fresh outer name for a port of G_M that is not on a mapped closed link.
inline auto port_name(const std::string & entity, int index) -> std::string { return "y." + entity + "." + std::to_string(index); }

/// G_M with a fully open interface, on G1's ids: one region per top-level
/// mapped entity, one site under every entity, mapped closures kept as closed
/// links and every other mapped port on its own outer name.
inline auto decode_common(const SolutionMapping & m, const Bigraph & g1) -> Bigraph
{
    if (m.score < 0)
        throw Error(ErrorKind::InvalidMapping, "mapping leaves a mapped entity with unmapped ports");
    std::set<std::string> ents;
    std::set<std::string> edges;
    std::set<Point> ports;
    for (const auto & [a, b] : m.pairs) {
        switch (a.kind) {
        case Element::Kind::Entity: ents.insert(a.id); break;
        case Element::Kind::Edge: edges.insert(a.id); break;
        case Element::Kind::Port: ports.insert(Point::port(a.id, a.index)); break;
        }
    }

    Bigraph gm;
    for (const auto & v : ents) {
        if (! g1.entities.contains(v))
            throw Error(ErrorKind::InvalidMapping, "unknown entity " + v);
        const auto & hp = g1.parent.at(v);
        Parent p = hp.is_entity() && ents.contains(hp.entity) ? hp : Parent::of_region(gm.add_region());
        gm.add_entity(v, g1.entities.at(v), p);
    }
    for (const auto & v : ents)
        gm.add_site(Parent::of_entity(v));
    for (const auto & e : edges)
        gm.add_edge(e);
    for (const auto & v : ents) {
        for (int i = 0; i < g1.arity(v); ++i) {
            Point pt = Point::port(v, i);
            if (! ports.contains(pt))
                throw Error(ErrorKind::InvalidMapping, "port " + describe(pt) + " of a mapped entity is unmapped");
            const auto & t = g1.link.at(pt);
            if (t.is_edge() && edges.contains(t.id))
                gm.connect(pt, t);
            else {
                gm.add_outer_name(port_name(v, i));
                gm.connect(pt, LinkTarget::outer(port_name(v, i)));
            }
        }
    }
    return gm;
}

/// Support embedding of G_M (on G1's ids) into the chosen host.
inline auto host_embedding(const SolutionMapping & m, Side side) -> Embedding
{
    Embedding emb;
    for (const auto & [a, b] : m.pairs) {
        const auto & to = side == Side::Left ? a : b;
        switch (a.kind) {
        case Element::Kind::Entity: emb.entities[a.id] = to.id; break;
        case Element::Kind::Edge: emb.edges[a.id] = to.id; break;
        case Element::Kind::Port: emb.ports[Point::port(a.id, a.index)] = Point::port(to.id, to.index); break;
        }
    }
    return emb;
}

inline auto triples_of(const SolutionMapping & m) -> std::vector<Triple>
{
    std::vector<Triple> out;
    for (const auto & [a, b] : m.pairs)
        out.push_back({a, a, b});
    return out;
}

/// C_K and D_K with host = C_K ∘ (G_M ⊗ id) ∘ D_K. Throws
/// ReconstructionMismatch when the round trip fails.
inline auto decompose_host(const SolutionMapping & m, const Bigraph & common, const Bigraph & host, Side side) -> Decomposition
{
    return build_decomposition(common, host, host_embedding(m, side));
}

inline auto decode_solution(const SolutionMapping & m, const Bigraph & g1, const Bigraph & g2) -> TripleSolution
{
    TripleSolution t;
    t.mapping = m;
    t.common = decode_common(m, g1);
    t.triples = triples_of(m);
    t.decomposition1 = decompose_host(m, t.common, g1, Side::Left);
    t.decomposition2 = decompose_host(m, t.common, g2, Side::Right);
    return t;
}

struct SaturateOptions {
    bool verify = true;    // rebuild both decompositions on the result
};

namespace detail {

    struct HostView {
        const Bigraph * host;
        Embedding emb;

        auto entity(const std::string & v) const -> const std::string & { return emb.entities.at(v); }

        auto port(const Point & p) const -> Point
        {
            if (auto it = emb.ports.find(p); it != emb.ports.end())
                return it->second;
            return Point::port(entity(p.id), p.index);
        }

        const EncodedGraph * enc = nullptr;    // when present, adjacency is read from it instead of scanning the host

        /// Mapped host entities holding an unmapped child or a site.
        auto open_below(const std::set<std::string> & mapped) const -> std::set<std::string>
        {
            std::set<std::string> out;
            if (enc) {
                for (const auto & v : mapped) {
                    auto u = static_cast<std::size_t>(enc->vertex_of.at(Element::entity(v)));
                    if (enc->site_below[u])
                        out.insert(v);
                    for (int w : enc->out[u])
                        if (enc->kind(w) == VertexKind::Entity && ! mapped.contains(enc->origin[static_cast<std::size_t>(w)].id))
                            out.insert(v);
                }
                return out;
            }
            for (const auto & [c, p] : host->parent)
                if (p.is_entity() && mapped.contains(p.entity) && ! mapped.contains(c))
                    out.insert(p.entity);
            for (const auto & p : host->sites)
                if (p.is_entity() && mapped.contains(p.entity))
                    out.insert(p.entity);
            return out;
        }

        /// Link preimages of the given host edges.
        auto points_on(const std::set<LinkTarget> & edges) const -> std::map<LinkTarget, std::set<Point>>
        {
            std::map<LinkTarget, std::set<Point>> out;
            if (enc) {
                for (const auto & e : edges) {
                    auto it = enc->vertex_of.find(Element::edge(e.id));
                    if (it == enc->vertex_of.end()) {
                        out[e].insert(Point::inner({}));    // not closed: some inner name reaches it
                        continue;
                    }
                    for (int p : enc->in[static_cast<std::size_t>(it->second)]) {
                        const auto & o = enc->origin[static_cast<std::size_t>(p)];
                        out[e].insert(Point::port(o.id, o.index));
                    }
                }
                return out;
            }
            for (const auto & [pt, t] : host->link)
                if (edges.contains(t))
                    out[t].insert(pt);
            return out;
        }
    };

    inline auto mapped_entities(const Embedding & emb) -> std::set<std::string>
    {
        std::set<std::string> out;
        for (const auto & [v, w] : emb.entities)
            out.insert(w);
        return out;
    }
}

/// Shrinks G_M's interface until both occurrences would break under any
/// further merge:
///  (a) the site under v is dropped when v's image has no unmapped children
///      and no sites, in both hosts;
///  (b) top-level entities whose host parents coincide in both hosts share a
///      region;
///  (c) ports whose host link targets coincide in both hosts share an outer
///      name.
/// Each rule partitions by an equivalence, so the result does not depend on
/// the order of application and a second pass is a no-op.
/// `e1` and `e2`, when given, must be the encodings of `g1` and `g2`; they
/// replace whole-host scans with adjacency lookups.
inline auto saturate_interface(TripleSolution t, const Bigraph & g1, const Bigraph & g2, SaturateOptions opts = {},
                               const EncodedGraph * e1 = nullptr, const EncodedGraph * e2 = nullptr) -> TripleSolution
{
    Bigraph gm = std::move(t.common);
    detail::HostView h1{&g1, host_embedding(t.mapping, Side::Left), e1};
    detail::HostView h2{&g2, host_embedding(t.mapping, Side::Right), e2};
    auto m1 = detail::mapped_entities(h1.emb);
    auto m2 = detail::mapped_entities(h2.emb);

    Bigraph out;
    out.entities = std::move(gm.entities);
    out.edges = std::move(gm.edges);
    out.inner_names = std::move(gm.inner_names);

    // (b) regions, keyed by the pair of host parents; numbered by first entity
    std::map<std::pair<Parent, Parent>, int> region_of;
    for (const auto & [v, p] : gm.parent) {
        if (p.is_entity()) {
            out.parent[v] = p;
            continue;
        }
        const auto & hp1 = g1.parent.at(h1.entity(v));
        const auto & hp2 = g2.parent.at(h2.entity(v));
        if ((hp1.is_entity() && m1.contains(hp1.entity)) || (hp2.is_entity() && m2.contains(hp2.entity)))
            throw Error(ErrorKind::SaturationBroke, "top-level entity " + v + " has a mapped host parent");
        auto [it, fresh] = region_of.emplace(std::pair{hp1, hp2}, out.regions);
        if (fresh)
            ++out.regions;
        out.parent[v] = Parent::of_region(it->second);
    }

    // (a) sites
    auto open1 = h1.open_below(m1);
    auto open2 = h2.open_below(m2);
    for (const auto & p : gm.sites) {
        if (p.is_entity() && ! open1.contains(h1.entity(p.entity)) && ! open2.contains(h2.entity(p.entity)))
            continue;
        out.add_site(p);
    }

    // (c) outer names, keyed by the pair of host targets
    std::map<std::pair<LinkTarget, LinkTarget>, std::string> name_of;
    for (const auto & [pt, tg] : gm.link) {
        if (! pt.is_port() || tg.is_edge()) {
            out.link[pt] = tg;
            continue;
        }
        auto ht1 = g1.link.at(h1.port(pt));
        auto ht2 = g2.link.at(h2.port(pt));
        auto [it, fresh] = name_of.emplace(std::pair{ht1, ht2}, tg.id);
        out.outer_names.insert(it->second);
        out.link[pt] = LinkTarget::outer(it->second);
    }
    std::set<LinkTarget> edges1, edges2;
    for (const auto & [targets, name] : name_of) {
        if (targets.first.is_edge() && targets.second.is_edge()) {
            edges1.insert(targets.first);
            edges2.insert(targets.second);
        }
    }
    if (! edges1.empty()) {
        auto pre1 = h1.points_on(edges1);
        auto pre2 = h2.points_on(edges2);
        std::map<std::string, std::pair<std::set<Point>, std::set<Point>>> named;
        for (const auto & [pt, tg] : out.link)
            if (pt.is_port() && ! tg.is_edge()) {
                named[tg.id].first.insert(h1.port(pt));
                named[tg.id].second.insert(h2.port(pt));
            }
        for (const auto & [targets, name] : name_of)
            if (targets.first.is_edge() && targets.second.is_edge() && pre1[targets.first] == named[name].first
                && pre2[targets.second] == named[name].second)
                throw Error(ErrorKind::SaturationBroke, "outer name " + name + " could be closed into a link");
    }

    t.common = std::move(out);
    if (opts.verify) {
        try {
            t.decomposition1 = build_decomposition(t.common, g1, h1.emb);
            t.decomposition2 = build_decomposition(t.common, g2, h2.emb);
        }
        catch (const Error & e) {
            throw Error(ErrorKind::SaturationBroke, e.what());
        }
    }
    return t;
}

}
