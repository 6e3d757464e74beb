#pragma once

// Constructive occurrence checking: given a pattern, a host and an embedding
// of the pattern's support into the host, build the context C and parameter
// D with host = C ∘ (pattern ⊗ id) ∘ D and verify the round trip.

#include "mcb/algebra.hpp"

namespace mcb {

/// Support mapping of a pattern into a host. Ports may be permuted within an
/// entity; a pattern port missing from `ports` maps to the same index.
struct Embedding {
    std::map<std::string, std::string> entities;
    std::map<std::string, std::string> edges;
    std::map<Point, Point> ports;

    auto operator<=>(const Embedding &) const = default;
};

inline auto identity_embedding(const Bigraph & b) -> Embedding
{
    Embedding emb;
    for (const auto & [id, c] : b.entities)
        emb.entities[id] = id;
    for (const auto & e : b.edges)
        emb.edges[e] = e;
    return emb;
}

/// Witness for host = context ∘ (embedded ⊗ id) ∘ parameter.
struct Decomposition {
    Bigraph context;
    Bigraph parameter;
    Bigraph embedded;                    // the pattern renamed onto host support
    int place_wires = 0;                 // width of the identity's place part
    std::set<std::string> link_wires;    // names of the identity's link part

    auto reassemble() const -> Bigraph
    {
        return compose(compose(context, tensor(embedded, identity(place_wires, link_wires))), parameter);
    }
};

namespace detail {
    [[noreturn]] inline void no_occurrence(const std::string & why) { throw Error(ErrorKind::ReconstructionMismatch, why); }
}

/// The pattern with its entities, edges and ports renamed through `emb`.
inline auto embed_pattern(const Bigraph & pattern, const Bigraph & host, const Embedding & emb) -> Bigraph
{
    using detail::no_occurrence;
    std::set<std::string> used;
    for (const auto & [v, c] : pattern.entities) {
        auto it = emb.entities.find(v);
        if (it == emb.entities.end())
            no_occurrence("entity " + v + " is not embedded");
        auto h = host.entities.find(it->second);
        if (h == host.entities.end() || h->second != c)
            no_occurrence("entity " + v + " -> " + it->second + " does not match control " + c.name);
        if (! used.insert(it->second).second)
            no_occurrence("entity map not injective at " + it->second);
    }
    std::set<std::string> used_edges;
    for (const auto & e : pattern.edges) {
        auto it = emb.edges.find(e);
        if (it == emb.edges.end() || ! host.edges.contains(it->second))
            no_occurrence("edge " + e + " is not embedded");
        if (! used_edges.insert(it->second).second)
            no_occurrence("edge map not injective at " + it->second);
    }

    auto port_of = [&](const Point & p) -> Point {
        if (auto it = emb.ports.find(p); it != emb.ports.end())
            return it->second;
        return Point::port(emb.entities.at(p.id), p.index);
    };
    std::set<Point> used_ports;
    for (const auto & p : pattern.ports()) {
        auto q = port_of(p);
        if (! q.is_port() || q.id != emb.entities.at(p.id) || q.index < 0 || q.index >= pattern.arity(p.id))
            no_occurrence("port " + describe(p) + " mapped outside its entity");
        if (! used_ports.insert(q).second)
            no_occurrence("port map not a bijection at " + describe(q));
    }

    auto rename_parent = [&](const Parent & p) { return p.is_entity() ? Parent::of_entity(emb.entities.at(p.entity)) : p; };
    Bigraph out;
    out.regions = pattern.regions;
    for (const auto & [v, c] : pattern.entities)
        out.entities[emb.entities.at(v)] = c;
    for (const auto & [v, p] : pattern.parent)
        out.parent[emb.entities.at(v)] = rename_parent(p);
    for (const auto & p : pattern.sites)
        out.sites.push_back(rename_parent(p));
    for (const auto & e : pattern.edges)
        out.edges.insert(emb.edges.at(e));
    out.inner_names = pattern.inner_names;
    out.outer_names = pattern.outer_names;
    for (const auto & [pt, t] : pattern.link) {
        auto src = pt.is_port() ? port_of(pt) : pt;
        out.link[src] = t.is_edge() ? LinkTarget::edge(emb.edges.at(t.id)) : t;
    }
    return out;
}

/// Builds the decomposition witnessing an occurrence of `pattern` in `host`
/// under `emb`. Throws ReconstructionMismatch when no such decomposition
/// exists or the round trip does not reproduce the host exactly.
inline auto build_decomposition(const Bigraph & pattern, const Bigraph & host, const Embedding & emb) -> Decomposition
{
    using detail::no_occurrence;
    Decomposition dec;
    const Bigraph p = embed_pattern(pattern, host, emb);
    dec.embedded = p;

    // --- place graph ---------------------------------------------------------
    auto mapped = [&](const std::string & v) { return p.entities.contains(v); };
    std::map<std::string, bool> below_mapped;    // unmapped host entities: true -> parameter, false -> context
    for (const auto & [v, c] : host.entities) {
        if (mapped(v))
            continue;
        auto up = entity_ancestors(host, v);
        below_mapped[v] = std::any_of(up.begin(), up.end(), mapped);
    }
    auto in_parameter = [&](const Parent & q) { return q.is_entity() && ! mapped(q.entity) && below_mapped.at(q.entity); };

    std::vector<std::optional<Parent>> region_anchor(static_cast<std::size_t>(p.regions));
    for (const auto & [v, pp] : p.parent) {
        const auto & hp = host.parent.at(v);
        if (pp.is_entity()) {
            if (hp != pp)
                no_occurrence("parent of " + v + " differs from pattern");
            continue;
        }
        if (hp.is_entity() && mapped(hp.entity))
            no_occurrence("host parent of root " + v + " is a pattern entity");
        if (in_parameter(hp))
            no_occurrence("root " + v + " sits below an unmapped descendant of the pattern");
        auto & slot = region_anchor[static_cast<std::size_t>(pp.region)];
        if (slot && *slot != hp)
            no_occurrence("entities of region " + std::to_string(pp.region) + " have different host parents");
        slot = hp;
    }
    for (int r = 0; r < p.regions; ++r)
        if (! region_anchor[static_cast<std::size_t>(r)])
            no_occurrence("pattern region " + std::to_string(r) + " has no entity");

    std::map<std::string, int> site_of;
    for (int s = 0; s < p.site_count(); ++s) {
        const auto & sp = p.sites[static_cast<std::size_t>(s)];
        if (sp.is_region())
            no_occurrence("pattern site under a region");
        if (! site_of.emplace(sp.entity, s).second)
            no_occurrence("sibling pattern sites under " + sp.entity);
    }
    auto pattern_site = [&](const std::string & u) {
        auto it = site_of.find(u);
        if (it == site_of.end())
            no_occurrence("host has material under " + u + " but the pattern has no site there");
        return it->second;
    };

    std::vector<int> wire_sites;    // host sites passing straight through the identity
    for (int s = 0; s < host.site_count(); ++s) {
        const auto & hp = host.sites[static_cast<std::size_t>(s)];
        if (! (hp.is_entity() && (mapped(hp.entity) || in_parameter(hp))))
            wire_sites.push_back(s);
    }
    dec.place_wires = static_cast<int>(wire_sites.size());

    Bigraph & ctx = dec.context;
    Bigraph & prm = dec.parameter;
    ctx.regions = host.regions;
    prm.regions = p.site_count() + dec.place_wires;
    for (int r = 0; r < p.regions; ++r)
        ctx.sites.push_back(*region_anchor[static_cast<std::size_t>(r)]);
    for (int s : wire_sites)
        ctx.sites.push_back(host.sites[static_cast<std::size_t>(s)]);

    for (const auto & [v, c] : host.entities) {
        if (mapped(v))
            continue;
        const auto & hp = host.parent.at(v);
        if (below_mapped.at(v)) {
            prm.entities[v] = c;
            prm.parent[v] = (hp.is_entity() && mapped(hp.entity)) ? Parent::of_region(pattern_site(hp.entity)) : hp;
        }
        else {
            ctx.entities[v] = c;
            ctx.parent[v] = hp;
        }
    }
    int wire = 0;
    for (int s = 0; s < host.site_count(); ++s) {
        const auto & hp = host.sites[static_cast<std::size_t>(s)];
        if (hp.is_entity() && mapped(hp.entity))
            prm.sites.push_back(Parent::of_region(pattern_site(hp.entity)));
        else if (in_parameter(hp))
            prm.sites.push_back(hp);
        else
            prm.sites.push_back(Parent::of_region(p.site_count() + wire++));
    }

    // --- link graph ----------------------------------------------------------
    enum class Owner { Pattern, Context, Parameter };
    auto owner_of = [&](const Point & pt) {
        if (! pt.is_port())
            return Owner::Parameter;    // host inner names are the parameter's inner face
        if (mapped(pt.id))
            return Owner::Pattern;
        return below_mapped.at(pt.id) ? Owner::Parameter : Owner::Context;
    };

    std::map<std::string, Owner> edge_owner;
    for (const auto & e : host.edges)
        edge_owner[e] = p.edges.contains(e) ? Owner::Pattern : Owner::Parameter;
    for (const auto & [pt, t] : host.link)
        if (t.is_edge() && edge_owner.at(t.id) == Owner::Parameter && owner_of(pt) != Owner::Parameter)
            edge_owner[t.id] = Owner::Context;

    std::map<std::string, LinkTarget> name_target;
    for (const auto & [pt, pt_target] : p.link) {
        if (! pt.is_port())
            continue;
        const auto & ht = host.link.at(pt);
        if (pt_target.is_edge()) {
            if (ht != pt_target)
                no_occurrence("port " + describe(pt) + " leaves pattern edge " + pt_target.id);
            continue;
        }
        if (ht.is_edge() && edge_owner.at(ht.id) == Owner::Pattern)
            no_occurrence("open port " + describe(pt) + " lands on pattern edge " + ht.id);
        auto [it, fresh] = name_target.emplace(pt_target.id, ht);
        if (! fresh && it->second != ht)
            no_occurrence("outer name " + pt_target.id + " splits in the host");
    }
    for (const auto & y : p.outer_names)
        if (! name_target.contains(y))
            no_occurrence("pattern outer name " + y + " has no port");

    std::map<std::string, std::string> edge_entry;    // pattern edge -> pattern inner name routing parameter points
    for (const auto & [pt, t] : p.link)
        if (! pt.is_port() && t.is_edge())
            edge_entry.emplace(t.id, pt.id);

    std::set<std::string> taken = p.inner_names;
    taken.insert(p.outer_names.begin(), p.outer_names.end());
    std::map<LinkTarget, std::string> wire_name;
    auto wire_for = [&](const LinkTarget & t) {
        if (auto it = wire_name.find(t); it != wire_name.end())
            return it->second;
        std::string name;
        for (int k = static_cast<int>(wire_name.size());; ++k) {
            name = "~w" + std::to_string(k);
            if (! taken.contains(name))
                break;
        }
        taken.insert(name);
        wire_name[t] = name;
        return name;
    };

    for (const auto & [pt, t] : host.link) {
        Owner o = owner_of(pt);
        if (o == Owner::Pattern)
            continue;
        bool to_pattern_edge = t.is_edge() && edge_owner.at(t.id) == Owner::Pattern;
        if (o == Owner::Context) {
            if (to_pattern_edge)
                no_occurrence("context port " + describe(pt) + " lands on pattern edge " + t.id);
            ctx.link[pt] = t;
        }
        else if (t.is_edge() && edge_owner.at(t.id) == Owner::Parameter)
            prm.link[pt] = t;
        else if (to_pattern_edge) {
            auto it = edge_entry.find(t.id);
            if (it == edge_entry.end())
                no_occurrence("parameter point " + describe(pt) + " lands on closed pattern edge " + t.id);
            prm.link[pt] = LinkTarget::outer(it->second);
        }
        else
            prm.link[pt] = LinkTarget::outer(wire_for(t));
    }

    for (const auto & e : host.edges) {
        if (edge_owner.at(e) == Owner::Context)
            ctx.edges.insert(e);
        else if (edge_owner.at(e) == Owner::Parameter)
            prm.edges.insert(e);
    }
    for (const auto & [y, t] : name_target) {
        ctx.inner_names.insert(y);
        ctx.link[Point::inner(y)] = t;
    }
    for (const auto & [t, w] : wire_name) {
        ctx.inner_names.insert(w);
        ctx.link[Point::inner(w)] = t;
        prm.outer_names.insert(w);
        dec.link_wires.insert(w);
    }
    ctx.outer_names = host.outer_names;
    prm.inner_names = host.inner_names;
    prm.outer_names.insert(p.inner_names.begin(), p.inner_names.end());

    if (dec.reassemble() != host)
        no_occurrence("round trip does not reproduce the host");
    return dec;
}

/// True iff host = C ∘ (pattern ⊗ id) ∘ D for some C, D consistent with emb.
inline auto occurs_with(const Bigraph & pattern, const Bigraph & host, const Embedding & emb) -> bool
{
    try {
        build_decomposition(pattern, host, emb);
        return true;
    }
    catch (const std::exception &) {
        return false;
    }
}

}
