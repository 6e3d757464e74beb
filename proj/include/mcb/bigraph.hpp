#pragma once

// Concrete bigraphs: a place forest and a link hypergraph over a shared
// entity set, with interface <m, X> -> <n, Y>.

#include "mcb/error.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mcb {

struct Control {
    std::string name;
    int arity = 0;

    auto operator<=>(const Control &) const = default;
};

/// Target of the parent map: an entity or a region index.
struct Parent {
    enum class Kind : std::uint8_t { Region, Entity };

    Kind kind = Kind::Region;
    int region = 0;
    std::string entity;

    static auto of_region(int r) -> Parent { return Parent{Kind::Region, r, {}}; }
    static auto of_entity(std::string id) -> Parent { return Parent{Kind::Entity, 0, std::move(id)}; }

    auto is_region() const -> bool { return kind == Kind::Region; }
    auto is_entity() const -> bool { return kind == Kind::Entity; }

    auto operator<=>(const Parent &) const = default;
};

/// Source of the link map: a port (entity, index) or an inner name.
struct Point {
    enum class Kind : std::uint8_t { Port, InnerName };

    Kind kind = Kind::Port;
    std::string id;
    int index = -1;

    static auto port(std::string entity, int i) -> Point { return Point{Kind::Port, std::move(entity), i}; }
    static auto inner(std::string name) -> Point { return Point{Kind::InnerName, std::move(name), -1}; }

    auto is_port() const -> bool { return kind == Kind::Port; }

    auto operator<=>(const Point &) const = default;
};

/// Target of the link map: a (closed or open) edge or an outer name.
struct LinkTarget {
    enum class Kind : std::uint8_t { Edge, OuterName };

    Kind kind = Kind::Edge;
    std::string id;

    static auto edge(std::string e) -> LinkTarget { return LinkTarget{Kind::Edge, std::move(e)}; }
    static auto outer(std::string y) -> LinkTarget { return LinkTarget{Kind::OuterName, std::move(y)}; }

    auto is_edge() const -> bool { return kind == Kind::Edge; }

    auto operator<=>(const LinkTarget &) const = default;
};

/// A concrete bigraph. Entities, edges and names are identified by opaque
/// strings; regions and sites are dense ranges 0..n-1 / 0..m-1.
struct Bigraph {
    std::map<std::string, Control> entities;
    std::map<std::string, Parent> parent;
    std::vector<Parent> sites;
    int regions = 0;
    std::set<std::string> edges;
    std::map<Point, LinkTarget> link;
    std::set<std::string> inner_names;
    std::set<std::string> outer_names;

    auto add_region() -> int { return regions++; }

    auto add_entity(const std::string & id, const Control & control, const Parent & where) -> Bigraph &
    {
        entities[id] = control;
        parent[id] = where;
        return *this;
    }

    auto add_site(const Parent & where) -> int
    {
        sites.push_back(where);
        return static_cast<int>(sites.size()) - 1;
    }

    auto add_edge(const std::string & id) -> Bigraph &
    {
        edges.insert(id);
        return *this;
    }

    auto add_outer_name(const std::string & y) -> Bigraph &
    {
        outer_names.insert(y);
        return *this;
    }

    auto add_inner_name(const std::string & x) -> Bigraph &
    {
        inner_names.insert(x);
        return *this;
    }

    auto connect(const Point & from, const LinkTarget & to) -> Bigraph &
    {
        link[from] = to;
        return *this;
    }

    auto arity(const std::string & entity) const -> int { return entities.at(entity).arity; }

    /// All ports (v, i) in entity-then-index order.
    auto ports() const -> std::vector<Point>
    {
        std::vector<Point> out;
        for (const auto & [id, control] : entities)
            for (int i = 0; i < control.arity; ++i)
                out.push_back(Point::port(id, i));
        return out;
    }

    auto site_count() const -> int { return static_cast<int>(sites.size()); }

    auto operator==(const Bigraph &) const -> bool = default;
};

inline auto support_size(const Bigraph & b) -> std::size_t { return b.entities.size() + b.edges.size(); }

/// Entity ids whose parent is exactly `p`.
inline auto entity_children(const Bigraph & b, const Parent & p) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto & [id, q] : b.parent)
        if (q == p)
            out.push_back(id);
    return out;
}

/// Site indices whose parent is exactly `p`.
inline auto site_children(const Bigraph & b, const Parent & p) -> std::vector<int>
{
    std::vector<int> out;
    for (int s = 0; s < b.site_count(); ++s)
        if (b.sites[s] == p)
            out.push_back(s);
    return out;
}

/// Strict ancestors of an entity, nearest first. Stops on a cycle.
inline auto entity_ancestors(const Bigraph & b, const std::string & v) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::set<std::string> seen{v};
    auto it = b.parent.find(v);
    while (it != b.parent.end() && it->second.is_entity()) {
        const auto & up = it->second.entity;
        if (! seen.insert(up).second)
            break;
        out.push_back(up);
        it = b.parent.find(up);
    }
    return out;
}

/// Points linked to a given target.
inline auto preimage(const Bigraph & b, const LinkTarget & t) -> std::vector<Point>
{
    std::vector<Point> out;
    for (const auto & [p, q] : b.link)
        if (q == t)
            out.push_back(p);
    return out;
}

struct Diagnostic {
    enum class Kind : std::uint8_t {
        Acyclicity,
        MissingParent,
        DanglingParent,
        ControlMismatch,
        MissingLink,
        UnknownPoint,
        DanglingLink,
        IdleEdge,
        IdleRegion,
        NameCollision,
    };

    Kind kind;
    std::vector<std::string> elements;

    auto operator==(const Diagnostic &) const -> bool = default;
};

inline auto to_string(Diagnostic::Kind k) -> std::string
{
    switch (k) {
    case Diagnostic::Kind::Acyclicity: return "Acyclicity";
    case Diagnostic::Kind::MissingParent: return "MissingParent";
    case Diagnostic::Kind::DanglingParent: return "DanglingParent";
    case Diagnostic::Kind::ControlMismatch: return "ControlMismatch";
    case Diagnostic::Kind::MissingLink: return "MissingLink";
    case Diagnostic::Kind::UnknownPoint: return "UnknownPoint";
    case Diagnostic::Kind::DanglingLink: return "DanglingLink";
    case Diagnostic::Kind::IdleEdge: return "IdleEdge";
    case Diagnostic::Kind::IdleRegion: return "IdleRegion";
    case Diagnostic::Kind::NameCollision: return "NameCollision";
    }
    return "Unknown";
}

inline auto to_string(const Diagnostic & d) -> std::string
{
    std::string s = to_string(d.kind) + "(";
    for (std::size_t i = 0; i < d.elements.size(); ++i)
        s += (i ? "," : "") + d.elements[i];
    return s + ")";
}

inline auto describe(const Point & p) -> std::string
{
    return p.is_port() ? p.id + "." + std::to_string(p.index) : p.id;
}

namespace detail {
    inline auto parent_ok(const Bigraph & b, const Parent & p) -> bool
    {
        return p.is_region() ? (p.region >= 0 && p.region < b.regions) : b.entities.contains(p.entity);
    }
}

/// Structural invariants only: totality and acyclicity of prnt, totality and
/// well-formedness of link. Idle regions/edges are permitted here since
/// contexts and parameters built during decomposition are routinely idle.
inline auto structural_diagnostics(const Bigraph & b) -> std::vector<Diagnostic>
{
    using K = Diagnostic::Kind;
    std::vector<Diagnostic> out;

    for (const auto & [id, control] : b.entities) {
        auto it = b.parent.find(id);
        if (it == b.parent.end())
            out.push_back({K::MissingParent, {id}});
        else if (! detail::parent_ok(b, it->second))
            out.push_back({K::DanglingParent, {id}});
    }
    for (const auto & [id, p] : b.parent)
        if (! b.entities.contains(id))
            out.push_back({K::DanglingParent, {id}});
    for (int s = 0; s < b.site_count(); ++s)
        if (! detail::parent_ok(b, b.sites[s]))
            out.push_back({K::DanglingParent, {"s" + std::to_string(s)}});

    // prnt acyclic: walk up from every entity; report each cycle once by its sorted members
    std::set<std::vector<std::string>> cycles;
    for (const auto & [id, control] : b.entities) {
        std::vector<std::string> path{id};
        std::map<std::string, std::size_t> pos{{id, 0}};
        auto it = b.parent.find(id);
        while (it != b.parent.end() && it->second.is_entity() && b.entities.contains(it->second.entity)) {
            const auto & up = it->second.entity;
            if (auto seen = pos.find(up); seen != pos.end()) {
                std::vector<std::string> cycle(path.begin() + static_cast<long>(seen->second), path.end());
                std::sort(cycle.begin(), cycle.end());
                cycles.insert(cycle);
                break;
            }
            pos[up] = path.size();
            path.push_back(up);
            it = b.parent.find(up);
        }
    }
    for (const auto & c : cycles)
        out.push_back({K::Acyclicity, c});

    std::set<Point> expected;
    for (const auto & p : b.ports())
        expected.insert(p);
    for (const auto & x : b.inner_names)
        expected.insert(Point::inner(x));
    for (const auto & p : expected)
        if (! b.link.contains(p))
            out.push_back({K::MissingLink, {describe(p)}});
    for (const auto & [p, t] : b.link) {
        if (! expected.contains(p))
            out.push_back({K::UnknownPoint, {describe(p)}});
        bool ok = t.is_edge() ? b.edges.contains(t.id) : b.outer_names.contains(t.id);
        if (! ok)
            out.push_back({K::DanglingLink, {describe(p), t.id}});
    }
    for (const auto & e : b.edges)
        if (b.outer_names.contains(e))
            out.push_back({K::NameCollision, {e}});
    return out;
}

/// Full validation for solver inputs: structural invariants plus no idle
/// edges and no idle regions.
inline auto validate(const Bigraph & b) -> std::vector<Diagnostic>
{
    using K = Diagnostic::Kind;
    auto out = structural_diagnostics(b);

    std::set<std::string> used_edges;
    for (const auto & [p, t] : b.link)
        if (t.is_edge())
            used_edges.insert(t.id);
    for (const auto & e : b.edges)
        if (! used_edges.contains(e))
            out.push_back({K::IdleEdge, {e}});

    std::vector<bool> region_used(static_cast<std::size_t>(std::max(b.regions, 0)), false);
    auto mark = [&](const Parent & p) {
        if (p.is_region() && p.region >= 0 && p.region < b.regions)
            region_used[static_cast<std::size_t>(p.region)] = true;
    };
    for (const auto & [id, p] : b.parent)
        mark(p);
    for (const auto & p : b.sites)
        mark(p);
    for (int r = 0; r < b.regions; ++r)
        if (! region_used[static_cast<std::size_t>(r)])
            out.push_back({K::IdleRegion, {"r" + std::to_string(r)}});
    return out;
}

struct SolidityReport {
    bool solid = true;
    std::vector<std::string> violations;
};

inline auto is_solid(const Bigraph & b) -> SolidityReport
{
    SolidityReport report;
    auto fail = [&](std::string v) {
        report.solid = false;
        report.violations.push_back(std::move(v));
    };

    for (int s = 0; s < b.site_count(); ++s)
        if (b.sites[s].is_region())
            fail("site s" + std::to_string(s) + " has region r" + std::to_string(b.sites[s].region) + " as parent");

    std::map<Parent, int> sites_under;
    for (const auto & p : b.sites)
        ++sites_under[p];
    for (const auto & [p, count] : sites_under)
        if (count > 1)
            fail("sibling sites under " + (p.is_region() ? "r" + std::to_string(p.region) : p.entity));

    for (const auto & [pt, t] : b.link)
        if (! pt.is_port() && ! t.is_edge())
            fail("inner name " + pt.id + " linked to outer name " + t.id);

    std::vector<bool> has_entity(static_cast<std::size_t>(std::max(b.regions, 0)), false);
    for (const auto & [id, p] : b.parent)
        if (p.is_region() && p.region >= 0 && p.region < b.regions)
            has_entity[static_cast<std::size_t>(p.region)] = true;
    for (int r = 0; r < b.regions; ++r)
        if (! has_entity[static_cast<std::size_t>(r)])
            fail("region r" + std::to_string(r) + " has no entity child");

    std::set<std::string> named;
    for (const auto & [pt, t] : b.link)
        if (pt.is_port() && ! t.is_edge())
            named.insert(t.id);
    for (const auto & y : b.outer_names)
        if (! named.contains(y))
            fail("outer name " + y + " has no port");
    return report;
}

}
