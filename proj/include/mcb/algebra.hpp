#pragma once

// Composition, tensor product, identities, and isomorphism up to
// renumbering of regions, sites, names and support.

#include "mcb/bigraph.hpp"

#include <functional>

namespace mcb {

namespace detail {
    inline void require_disjoint_support(const Bigraph & a, const Bigraph & b)
    {
        for (const auto & [id, c] : b.entities)
            if (a.entities.contains(id) || a.edges.contains(id))
                throw Error(ErrorKind::SupportOverlap, "shared support element " + id);
        for (const auto & e : b.edges)
            if (a.edges.contains(e) || a.entities.contains(e))
                throw Error(ErrorKind::SupportOverlap, "shared support element " + e);
    }
}

/// The identity bigraph on <width, names>: site i sits in region i and inner
/// name x is linked to outer name x.
inline auto identity(int width, const std::set<std::string> & names = {}) -> Bigraph
{
    Bigraph id;
    id.regions = width;
    for (int i = 0; i < width; ++i)
        id.add_site(Parent::of_region(i));
    for (const auto & x : names) {
        id.add_inner_name(x).add_outer_name(x);
        id.connect(Point::inner(x), LinkTarget::outer(x));
    }
    return id;
}

/// a ∘ b: site i of a receives region i of b, inner name x of a is fused
/// with outer name x of b.
inline auto compose(const Bigraph & a, const Bigraph & b) -> Bigraph
{
    if (a.site_count() != b.regions || a.inner_names != b.outer_names)
        throw Error(ErrorKind::InterfaceMismatch,
                    "inner face <" + std::to_string(a.site_count()) + "> vs outer face <" + std::to_string(b.regions) + ">");
    detail::require_disjoint_support(a, b);

    Bigraph g;
    g.regions = a.regions;
    g.entities = a.entities;
    g.entities.insert(b.entities.begin(), b.entities.end());
    g.edges = a.edges;
    g.edges.insert(b.edges.begin(), b.edges.end());
    g.inner_names = b.inner_names;
    g.outer_names = a.outer_names;

    auto lift = [&](const Parent & p) -> Parent { return p.is_region() ? a.sites.at(static_cast<std::size_t>(p.region)) : p; };
    g.parent = a.parent;
    for (const auto & [id, p] : b.parent)
        g.parent[id] = lift(p);
    for (const auto & p : b.sites)
        g.sites.push_back(lift(p));

    for (const auto & [pt, t] : a.link)
        if (pt.is_port())
            g.link[pt] = t;
    for (const auto & [pt, t] : b.link)
        g.link[pt] = t.is_edge() ? t : a.link.at(Point::inner(t.id));
    return g;
}

/// a ⊗ b: juxtaposition, b's regions and sites numbered after a's.
inline auto tensor(const Bigraph & a, const Bigraph & b) -> Bigraph
{
    detail::require_disjoint_support(a, b);
    for (const auto & x : b.inner_names)
        if (a.inner_names.contains(x))
            throw Error(ErrorKind::NameClash, "inner name " + x);
    for (const auto & y : b.outer_names)
        if (a.outer_names.contains(y))
            throw Error(ErrorKind::NameClash, "outer name " + y);

    Bigraph g = a;
    auto shift = [&](Parent p) {
        if (p.is_region())
            p.region += a.regions;
        return p;
    };
    g.regions = a.regions + b.regions;
    for (const auto & [id, c] : b.entities)
        g.entities[id] = c;
    for (const auto & [id, p] : b.parent)
        g.parent[id] = shift(p);
    for (const auto & p : b.sites)
        g.sites.push_back(shift(p));
    g.edges.insert(b.edges.begin(), b.edges.end());
    g.link.insert(b.link.begin(), b.link.end());
    g.inner_names.insert(b.inner_names.begin(), b.inner_names.end());
    g.outer_names.insert(b.outer_names.begin(), b.outer_names.end());
    return g;
}

namespace detail {

    /// Link structure after an entity bijection: every target is described by
    /// the set of (renamed) ports on it plus its inner-name count.
    struct TargetShape {
        LinkTarget::Kind kind;
        std::set<Point> ports;
        int inner = 0;

        auto operator<=>(const TargetShape &) const = default;
    };

    inline auto target_shapes(const Bigraph & b, const std::function<std::string(const std::string &)> & rename)
        -> std::multiset<TargetShape>
    {
        std::map<LinkTarget, TargetShape> shapes;
        for (const auto & e : b.edges)
            shapes[LinkTarget::edge(e)] = TargetShape{LinkTarget::Kind::Edge, {}, 0};
        for (const auto & y : b.outer_names)
            shapes[LinkTarget::outer(y)] = TargetShape{LinkTarget::Kind::OuterName, {}, 0};
        for (const auto & [pt, t] : b.link) {
            auto & s = shapes[t];
            if (pt.is_port())
                s.ports.insert(Point::port(rename(pt.id), pt.index));
            else
                ++s.inner;
        }
        std::multiset<TargetShape> out;
        for (auto & [t, s] : shapes)
            out.insert(std::move(s));
        return out;
    }

    /// Place structure after an entity bijection: regions and entity parents
    /// described by their child multisets.
    inline auto place_consistent(const Bigraph & a, const Bigraph & b, const std::map<std::string, std::string> & to_b) -> bool
    {
        auto sites_per = [](const Bigraph & g, auto && key) {
            std::map<std::string, int> out;
            for (const auto & p : g.sites)
                ++out[key(p)];
            return out;
        };
        for (const auto & [v, p] : a.parent) {
            const auto & q = b.parent.at(to_b.at(v));
            if (p.is_entity() != q.is_entity())
                return false;
            if (p.is_entity() && to_b.at(p.entity) != q.entity)
                return false;
        }
        // regions: shape = (sorted entity children, site count)
        auto region_shapes = [&](const Bigraph & g, bool map_names) {
            std::vector<std::pair<std::vector<std::string>, int>> shapes(static_cast<std::size_t>(g.regions));
            for (const auto & [v, p] : g.parent)
                if (p.is_region())
                    shapes[static_cast<std::size_t>(p.region)].first.push_back(map_names ? to_b.at(v) : v);
            for (const auto & p : g.sites)
                if (p.is_region())
                    ++shapes[static_cast<std::size_t>(p.region)].second;
            for (auto & s : shapes)
                std::sort(s.first.begin(), s.first.end());
            std::sort(shapes.begin(), shapes.end());
            return shapes;
        };
        if (a.regions != b.regions || region_shapes(a, true) != region_shapes(b, false))
            return false;
        auto a_sites = sites_per(a, [&](const Parent & p) { return p.is_entity() ? to_b.at(p.entity) : std::string{}; });
        auto b_sites = sites_per(b, [&](const Parent & p) { return p.is_entity() ? p.entity : std::string{}; });
        return a_sites == b_sites;
    }
}

/// Isomorphism up to renumbering of regions and sites and renaming of
/// support elements and names. Ports keep their indices. Exponential in the
/// worst case; intended for tests on small bigraphs.
inline auto isomorphic(const Bigraph & a, const Bigraph & b) -> bool
{
    if (a.entities.size() != b.entities.size() || a.edges.size() != b.edges.size() || a.regions != b.regions
        || a.sites.size() != b.sites.size() || a.inner_names.size() != b.inner_names.size()
        || a.outer_names.size() != b.outer_names.size())
        return false;

    std::vector<std::string> order;
    for (const auto & [id, c] : a.entities)
        order.push_back(id);
    std::map<std::string, std::string> to_b;
    std::set<std::string> used;
    auto b_shapes = detail::target_shapes(b, [](const std::string & s) { return s; });

    std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
        if (k == order.size()) {
            if (! detail::place_consistent(a, b, to_b))
                return false;
            return detail::target_shapes(a, [&](const std::string & s) { return to_b.at(s); }) == b_shapes;
        }
        const auto & v = order[k];
        for (const auto & [w, c] : b.entities) {
            if (used.contains(w) || c != a.entities.at(v))
                continue;
            to_b[v] = w;
            used.insert(w);
            if (extend(k + 1))
                return true;
            used.erase(w);
            to_b.erase(v);
        }
        return false;
    };
    return extend(0);
}

}
