#pragma once

// Exhaustive reference implementations for small instances. Nothing here
// touches the encoding or the search; validity is decided by decoding a
// candidate mapping and checking both occurrences constructively.

#include "mcb/decode.hpp"

namespace mcb {

struct OracleCap {
    std::size_t entities = 6;
    std::size_t edges = 4;
};

namespace detail {
    inline void require_cap(const Bigraph & b, const OracleCap & cap)
    {
        if (b.entities.size() > cap.entities || b.edges.size() > cap.edges)
            throw Error(ErrorKind::CapExceeded, std::to_string(b.entities.size()) + " entities, " + std::to_string(b.edges.size())
                                                    + " edges; cap is " + std::to_string(cap.entities) + " + " + std::to_string(cap.edges));
    }

    inline auto port_count_on(const Bigraph & b, const std::string & e) -> std::size_t
    {
        std::size_t n = 0;
        for (const auto & [pt, t] : b.link)
            n += pt.is_port() && t == LinkTarget::edge(e);
        return n;
    }

    inline auto ports_within(const Bigraph & b, const std::string & e, const std::map<std::string, std::string> & ents) -> bool
    {
        for (const auto & [pt, t] : b.link)
            if (t == LinkTarget::edge(e) && ! (pt.is_port() && ents.contains(pt.id)))
                return false;
        return true;
    }

    inline auto values_of(const std::map<std::string, std::string> & m) -> std::set<std::string>
    {
        std::set<std::string> out;
        for (const auto & [k, v] : m)
            out.insert(v);
        return out;
    }

    /// Every partial injection from `keys` into `targets` accepted by `ok`.
    inline auto partial_injections(const std::vector<std::string> & keys, const std::vector<std::string> & targets,
                                   const std::function<bool(const std::string &, const std::string &)> & ok)
        -> std::vector<std::map<std::string, std::string>>
    {
        std::vector<std::map<std::string, std::string>> out;
        std::map<std::string, std::string> cur;
        std::set<std::string> used;
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == keys.size()) {
                out.push_back(cur);
                return;
            }
            rec(k + 1);
            for (const auto & t : targets) {
                if (used.contains(t) || ! ok(keys[k], t))
                    continue;
                cur[keys[k]] = t;
                used.insert(t);
                rec(k + 1);
                used.erase(t);
                cur.erase(keys[k]);
            }
        };
        rec(0);
        return out;
    }
}

/// Port map for fixed entity and edge maps: within each mapped entity pair,
/// ports on a mapped edge go to ports on its image, the remaining ports to
/// the remaining ports, order-preserving inside each group. Empty when the
/// group sizes disagree, i.e. when no bijection respects the edge map.
inline auto canonical_port_map(const Bigraph & a, const Bigraph & b, const std::map<std::string, std::string> & entities,
                               const std::map<std::string, std::string> & edges) -> std::optional<std::map<Point, Point>>
{
    auto images = detail::values_of(edges);
    std::map<Point, Point> out;
    for (const auto & [u, v] : entities) {
        std::map<std::string, std::vector<int>> from;
        std::map<std::string, std::vector<int>> to;
        for (int i = 0; i < a.arity(u); ++i) {
            const auto & t = a.link.at(Point::port(u, i));
            from[t.is_edge() && edges.contains(t.id) ? "#" + edges.at(t.id) : std::string{}].push_back(i);
        }
        for (int j = 0; j < b.arity(v); ++j) {
            const auto & t = b.link.at(Point::port(v, j));
            to[t.is_edge() && images.contains(t.id) ? "#" + t.id : std::string{}].push_back(j);
        }
        for (const auto & [key, idx] : from) {
            auto it = to.find(key);
            if (it == to.end() || it->second.size() != idx.size())
                return std::nullopt;
        }
        for (const auto & [key, idx] : to)
            if (! from.contains(key))
                return std::nullopt;
        for (const auto & [key, idx] : from)
            for (std::size_t k = 0; k < idx.size(); ++k)
                out[Point::port(u, idx[k])] = Point::port(v, to.at(key)[k]);
    }
    return out;
}

/// Assembles a solution mapping (entities, ports, closed links) from support
/// maps and a port map.
inline auto make_mapping(const std::map<std::string, std::string> & entities, const std::map<std::string, std::string> & edges,
                         const std::map<Point, Point> & ports) -> SolutionMapping
{
    SolutionMapping m;
    for (const auto & [u, v] : entities)
        m.pairs.emplace_back(Element::entity(u), Element::entity(v));
    for (const auto & [e, f] : edges)
        m.pairs.emplace_back(Element::edge(e), Element::edge(f));
    for (const auto & [p, q] : ports)
        m.pairs.emplace_back(Element::port(p.id, p.index), Element::port(q.id, q.index));
    std::sort(m.pairs.begin(), m.pairs.end());
    m.score = static_cast<int>(entities.size() + edges.size());
    return m;
}

/// Every mapping whose decoded common bigraph occurs in both inputs, kept
/// at the maximum support size. Empty when that maximum is zero.
inline auto brute_force_mcb(const Bigraph & g1, const Bigraph & g2, OracleCap cap = {}) -> std::vector<SolutionMapping>
{
    detail::require_cap(g1, cap);
    detail::require_cap(g2, cap);

    std::vector<std::string> v1, v2, e1, e2;
    for (const auto & [id, c] : g1.entities)
        v1.push_back(id);
    for (const auto & [id, c] : g2.entities)
        v2.push_back(id);
    e1.assign(g1.edges.begin(), g1.edges.end());
    e2.assign(g2.edges.begin(), g2.edges.end());

    auto entity_maps = detail::partial_injections(v1, v2, [&](const std::string & u, const std::string & v) {
        return g1.entities.at(u) == g2.entities.at(v);
    });

    // candidates bucketed by support size, largest first
    std::map<std::size_t, std::vector<std::pair<std::size_t, std::map<std::string, std::string>>>, std::greater<>> by_size;
    for (std::size_t k = 0; k < entity_maps.size(); ++k) {
        const auto & ents = entity_maps[k];
        if (ents.empty())
            continue;
        std::map<std::string, std::string> inv;
        for (const auto & [u, v] : ents)
            inv[v] = u;
        auto edge_maps = detail::partial_injections(e1, e2, [&](const std::string & e, const std::string & f) {
            return detail::ports_within(g1, e, ents) && detail::ports_within(g2, f, inv)
                && detail::port_count_on(g1, e) == detail::port_count_on(g2, f);
        });
        for (auto & em : edge_maps)
            by_size[ents.size() + em.size()].emplace_back(k, std::move(em));
    }

    for (const auto & [size, candidates] : by_size) {
        std::vector<SolutionMapping> found;
        for (const auto & [k, edges] : candidates) {
            const auto & ents = entity_maps[k];
            auto ports = canonical_port_map(g1, g2, ents, edges);
            if (! ports)
                continue;
            auto m = make_mapping(ents, edges, *ports);
            auto common = decode_common(m, g1);
            if (occurs_with(common, g1, host_embedding(m, Side::Left)) && occurs_with(common, g2, host_embedding(m, Side::Right)))
                found.push_back(std::move(m));
        }
        if (! found.empty()) {
            std::sort(found.begin(), found.end());
            return found;
        }
    }
    return {};
}

/// Every embedding of P into T (ports in canonical order) under which P occurs.
inline auto brute_force_match(const Bigraph & p, const Bigraph & t, OracleCap cap = {}) -> std::vector<Embedding>
{
    detail::require_cap(p, cap);
    std::vector<std::string> vp, vt, ep, et;
    for (const auto & [id, c] : p.entities)
        vp.push_back(id);
    for (const auto & [id, c] : t.entities)
        vt.push_back(id);
    ep.assign(p.edges.begin(), p.edges.end());
    et.assign(t.edges.begin(), t.edges.end());

    std::vector<Embedding> out;
    auto entity_maps = detail::partial_injections(vp, vt, [&](const std::string & u, const std::string & v) {
        return p.entities.at(u) == t.entities.at(v);
    });
    for (const auto & ents : entity_maps) {
        if (ents.size() != vp.size())
            continue;
        for (const auto & edges : detail::partial_injections(ep, et, [](const std::string &, const std::string &) { return true; })) {
            if (edges.size() != ep.size())
                continue;
            auto ports = canonical_port_map(p, t, ents, edges);
            if (! ports)
                continue;
            Embedding emb{ents, edges, *ports};
            if (occurs_with(p, t, emb))
                out.push_back(std::move(emb));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The mapping P -> T described by an embedding, with ports canonicalised.
inline auto mapping_of(const Bigraph & p, const Bigraph & t, const Embedding & emb) -> SolutionMapping
{
    auto ports = canonical_port_map(p, t, emb.entities, emb.edges);
    if (! ports)
        throw Error(ErrorKind::InvalidMapping, "embedding does not respect its edge map");
    return make_mapping(emb.entities, emb.edges, *ports);
}

/// Post-hoc checks on one solver mapping, independent of the search:
/// betweenness closure on both sides, closed links fully mapped with equal
/// port counts, complete port maps, and both occurrences before and after
/// saturation. Returns one message per violation.
inline auto check_solution_constraints(const Bigraph & g1, const Bigraph & g2, const SolutionMapping & m) -> std::vector<std::string>
{
    std::vector<std::string> bad;
    auto check_side = [&](const Bigraph & g, Side side) {
        std::string tag = side == Side::Left ? "G1: " : "G2: ";
        auto emb = host_embedding(m, side);
        std::set<std::string> ents = detail::values_of(emb.entities);
        std::set<Point> ports;
        for (const auto & [a, b] : m.pairs)
            if (a.is_port()) {
                const auto & x = side == Side::Left ? a : b;
                ports.insert(Point::port(x.id, x.index));
            }

        for (const auto & v : ents) {
            bool gap = false;
            for (const auto & up : entity_ancestors(g, v)) {
                if (ents.contains(up) && gap)
                    bad.push_back(tag + "unmapped entity between " + up + " and " + v);
                gap = gap || ! ents.contains(up);
            }
            for (int i = 0; i < g.arity(v); ++i)
                if (! ports.contains(Point::port(v, i)))
                    bad.push_back(tag + "mapped entity " + v + " has unmapped port " + std::to_string(i));
        }
        for (const auto & [e, f] : emb.edges) {
            const auto & host_edge = f;
            for (const auto & pt : preimage(g, LinkTarget::edge(host_edge)))
                if (! pt.is_port() || ! ports.contains(pt))
                    bad.push_back(tag + "closed link " + host_edge + " has unmapped point " + describe(pt));
        }
    };
    check_side(g1, Side::Left);
    check_side(g2, Side::Right);

    for (const auto & [a, b] : m.pairs)
        if (a.kind == Element::Kind::Edge && detail::port_count_on(g1, a.id) != detail::port_count_on(g2, b.id))
            bad.push_back("closure in-degree differs on " + a.id + " -> " + b.id);

    try {
        auto t = decode_solution(m, g1, g2);
        auto s = saturate_interface(t, g1, g2);
        if (! occurs_with(s.common, g1, host_embedding(m, Side::Left)) || ! occurs_with(s.common, g2, host_embedding(m, Side::Right)))
            bad.push_back("saturated common bigraph does not occur in both hosts");
    }
    catch (const std::exception & e) {
        bad.push_back(std::string("decode: ") + e.what());
    }
    return bad;
}

struct PropertyResult {
    std::string name;
    bool pass = true;
    std::string witness;
};

inline auto closed_support_size(const Bigraph & b) -> int { return static_cast<int>(b.entities.size() + closed_edges(b).size()); }

/// MCB(G, G) contains the identity mapping at |G|.
inline auto check_identity(const Bigraph & g, const SearchResult & r) -> PropertyResult
{
    PropertyResult p{"Identity", true, {}};
    std::map<std::string, std::string> ents;
    std::map<std::string, std::string> edges;
    for (const auto & [v, c] : g.entities)
        ents[v] = v;
    for (const auto & e : closed_edges(g))
        edges[e] = e;
    std::map<Point, Point> ports;
    for (const auto & pt : g.ports())
        ports[pt] = pt;
    auto id = make_mapping(ents, edges, ports);
    if (r.optimum != closed_support_size(g)) {
        p.pass = false;
        p.witness = "optimum " + std::to_string(r.optimum) + " != " + std::to_string(closed_support_size(g));
    }
    else if (std::find(r.solutions.begin(), r.solutions.end(), id) == r.solutions.end()) {
        p.pass = false;
        p.witness = "identity mapping missing among " + std::to_string(r.solutions.size()) + " solutions";
    }
    return p;
}

/// Solutions of MCB(G2, G1), inverted, equal those of MCB(G1, G2).
inline auto check_inverse(const SearchResult & forward, const SearchResult & backward) -> PropertyResult
{
    PropertyResult p{"Inverse", true, {}};
    std::vector<SolutionMapping> inv;
    for (const auto & m : backward.solutions)
        inv.push_back(inverse(m));
    std::sort(inv.begin(), inv.end());
    if (forward.optimum != backward.optimum || inv != forward.solutions) {
        p.pass = false;
        p.witness = "optimum " + std::to_string(forward.optimum) + "/" + std::to_string(backward.optimum) + ", solutions "
                  + std::to_string(forward.solutions.size()) + "/" + std::to_string(backward.solutions.size());
    }
    return p;
}

/// With P occurring in T: optimum = |P| and every given embedding of P is
/// among the solutions of MCB(P, T).
inline auto check_matching(const Bigraph & p, const Bigraph & t, const std::vector<Embedding> & embeddings, const SearchResult & r)
    -> PropertyResult
{
    PropertyResult res{"Matching", true, {}};
    if (r.optimum != closed_support_size(p)) {
        res.pass = false;
        res.witness = "optimum " + std::to_string(r.optimum) + " != |P| = " + std::to_string(closed_support_size(p));
        return res;
    }
    for (const auto & emb : embeddings) {
        auto m = mapping_of(p, t, emb);
        m.score = r.optimum;
        if (std::find(r.solutions.begin(), r.solutions.end(), m) == r.solutions.end()) {
            res.pass = false;
            res.witness = "embedding missing from " + std::to_string(r.solutions.size()) + " solutions";
            return res;
        }
    }
    return res;
}

/// Best optimum of MCB(G3, M) over the saturated solutions M of MCB(G1, G2)
/// must equal the same quantity with G1 and G3 exchanged.
inline auto check_succession(const Bigraph & g1, const Bigraph & g2, const Bigraph & g3, const SearchOptions & opts = {}) -> PropertyResult
{
    PropertyResult p{"Succession", true, {}};
    auto best_over = [&](const Bigraph & a, const Bigraph & b, const Bigraph & c) {
        int best = 0;
        for (const auto & m : solve_bigraphs(a, b, opts).solutions) {
            auto s = saturate_interface(decode_solution(m, a, b), a, b);
            best = std::max(best, solve_bigraphs(c, s.common, opts).optimum);
        }
        return best;
    };
    int x = best_over(g1, g2, g3);
    int y = best_over(g3, g2, g1);
    if (x != y) {
        p.pass = false;
        p.witness = std::to_string(x) + " vs " + std::to_string(y);
    }
    return p;
}

struct PropertyInputs {
    std::optional<Bigraph> third;           // enables Succession
    std::vector<Embedding> occurrences;     // enables Matching (G1 as pattern)
};

/// Runs every applicable property on a solved pair.
inline auto check_properties(const Bigraph & g1, const Bigraph & g2, const SearchResult & r, const PropertyInputs & in = {},
                             const SearchOptions & opts = {}) -> std::vector<PropertyResult>
{
    std::vector<PropertyResult> out;
    if (g1 == g2)
        out.push_back(check_identity(g1, r));
    out.push_back(check_inverse(r, solve_bigraphs(g2, g1, opts)));
    if (! in.occurrences.empty())
        out.push_back(check_matching(g1, g2, in.occurrences, r));
    if (in.third)
        out.push_back(check_succession(g1, g2, *in.third, opts));
    return out;
}

}

namespace mcb {

/// Every single interface refinement of a saturated common bigraph (drop a
/// site, merge two regions, merge two outer names, close an outer name into a
/// link) that still occurs in both hosts. Empty at a saturation fixpoint.
inline auto surviving_refinements(const TripleSolution & t, const Bigraph & g1, const Bigraph & g2) -> std::vector<std::string>
{
    const Bigraph & gm = t.common;
    auto emb1 = host_embedding(t.mapping, Side::Left);
    auto emb2 = host_embedding(t.mapping, Side::Right);
    std::vector<std::string> out;
    auto survives = [&](const Bigraph & cand, const Embedding & a, const Embedding & b) {
        return occurs_with(cand, g1, a) && occurs_with(cand, g2, b);
    };

    for (int s = 0; s < gm.site_count(); ++s) {
        Bigraph c = gm;
        c.sites.erase(c.sites.begin() + s);
        if (survives(c, emb1, emb2))
            out.push_back("drop site s" + std::to_string(s));
    }
    for (int r1 = 0; r1 < gm.regions; ++r1)
        for (int r2 = r1 + 1; r2 < gm.regions; ++r2) {
            Bigraph c = gm;
            auto renumber = [&](Parent & p) {
                if (! p.is_region())
                    return;
                if (p.region == r2)
                    p.region = r1;
                else if (p.region > r2)
                    --p.region;
            };
            for (auto & [v, p] : c.parent)
                renumber(p);
            for (auto & p : c.sites)
                renumber(p);
            --c.regions;
            if (survives(c, emb1, emb2))
                out.push_back("merge regions r" + std::to_string(r1) + " r" + std::to_string(r2));
        }
    std::vector<std::string> names(gm.outer_names.begin(), gm.outer_names.end());
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            Bigraph c = gm;
            c.outer_names.erase(names[j]);
            for (auto & [pt, tg] : c.link)
                if (tg == LinkTarget::outer(names[j]))
                    tg = LinkTarget::outer(names[i]);
            if (survives(c, emb1, emb2))
                out.push_back("merge names " + names[i] + " " + names[j]);
        }
    for (const auto & y : names) {
        std::optional<Point> any;
        for (const auto & [pt, tg] : gm.link)
            if (tg == LinkTarget::outer(y))
                any = pt;
        if (! any)
            continue;
        auto target = [&](const Bigraph & h, const Embedding & e) {
            auto it = e.ports.find(*any);
            return h.link.at(it != e.ports.end() ? it->second : Point::port(e.entities.at(any->id), any->index));
        };
        auto t1 = target(g1, emb1);
        auto t2 = target(g2, emb2);
        if (! t1.is_edge() || ! t2.is_edge())
            continue;
        Bigraph c = gm;
        std::string e = "~closed." + y;
        c.outer_names.erase(y);
        c.add_edge(e);
        for (auto & [pt, tg] : c.link)
            if (tg == LinkTarget::outer(y))
                tg = LinkTarget::edge(e);
        auto a = emb1;
        auto b = emb2;
        a.edges[e] = t1.id;
        b.edges[e] = t2.id;
        if (survives(c, a, b))
            out.push_back("close name " + y);
    }
    return out;
}

}
