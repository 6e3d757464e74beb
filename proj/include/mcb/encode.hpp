#pragma once

// Bigraph -> labelled directed graph. Entities keep their control as label
// and their inverted parent relation as arcs; every port becomes a "link"
// vertex under its entity, and every closed link becomes a "closure" vertex
// fed by its ports. Regions, sites and names are dropped.

#include "mcb/bigraph.hpp"

#include <cstdint>
#include <tuple>

namespace mcb {

enum class VertexKind : std::uint8_t { Entity, Port, Closure };

inline constexpr const char * link_label = "link";
inline constexpr const char * closure_label = "closure";

/// A support element or port of a bigraph.
struct Element {
    enum class Kind : std::uint8_t { Entity, Port, Edge };

    Kind kind = Kind::Entity;
    std::string id;
    int index = -1;

    static auto entity(std::string v) -> Element { return Element{Kind::Entity, std::move(v), -1}; }
    static auto port(std::string v, int i) -> Element { return Element{Kind::Port, std::move(v), i}; }
    static auto edge(std::string e) -> Element { return Element{Kind::Edge, std::move(e), -1}; }

    auto is_port() const -> bool { return kind == Kind::Port; }

    auto operator<=>(const Element &) const = default;
};

inline auto to_string(const Element & e) -> std::string
{
    return e.is_port() ? e.id + "." + std::to_string(e.index) : e.id;
}

struct EncodedVertex {
    int id = 0;
    VertexKind kind = VertexKind::Entity;
    std::string label;
    int in_degree = 0;    // grouping key for closures
};

/// Adjacency between two vertices as seen from the first one.
enum class Arc : std::uint8_t { None = 0, Out = 1, In = 2 };

class EncodedGraph {
public:
    std::vector<EncodedVertex> vertices;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;
    std::vector<Element> origin;
    std::map<Element, int> vertex_of;
    int entity_count = 0;
    std::size_t support_size = 0;    // |V_B| + |E_B| of the source bigraph
    std::vector<char> site_below;    // per entity vertex; not part of the graph, kept for decoding

    auto size() const -> int { return static_cast<int>(vertices.size()); }

    auto add_vertex(VertexKind kind, std::string label, Element from) -> int
    {
        int id = size();
        vertices.push_back({id, kind, std::move(label), 0});
        out.emplace_back();
        in.emplace_back();
        vertex_of[from] = id;
        origin.push_back(std::move(from));
        return id;
    }

    void add_arc(int from, int to)
    {
        out[static_cast<std::size_t>(from)].push_back(to);
        in[static_cast<std::size_t>(to)].push_back(from);
        ++vertices[static_cast<std::size_t>(to)].in_degree;
    }

    /// Builds the dense relation matrix; call once construction is finished.
    void finalize()
    {
        auto n = static_cast<std::size_t>(size());
        rel_.assign(n * n, Arc::None);
        for (std::size_t u = 0; u < n; ++u)
            for (int w : out[u]) {
                rel_[u * n + static_cast<std::size_t>(w)] = Arc::Out;
                rel_[static_cast<std::size_t>(w) * n + u] = Arc::In;
            }
    }

    auto relation(int u, int w) const -> Arc { return rel_[static_cast<std::size_t>(u) * vertices.size() + static_cast<std::size_t>(w)]; }

    auto kind(int v) const -> VertexKind { return vertices[static_cast<std::size_t>(v)].kind; }

    auto degree(int v) const -> int
    {
        return static_cast<int>(out[static_cast<std::size_t>(v)].size() + in[static_cast<std::size_t>(v)].size());
    }

    auto arcs() const -> std::set<std::pair<int, int>>
    {
        std::set<std::pair<int, int>> all;
        for (int u = 0; u < size(); ++u)
            for (int w : out[static_cast<std::size_t>(u)])
                all.emplace(u, w);
        return all;
    }

    auto count(VertexKind k) const -> int
    {
        return static_cast<int>(std::count_if(vertices.begin(), vertices.end(), [k](const auto & v) { return v.kind == k; }));
    }

private:
    std::vector<Arc> rel_;
};

/// Entity vertices and parent arcs only; regions and sites are discarded.
inline auto encode_place(const Bigraph & b) -> EncodedGraph
{
    if (b.entities.empty())
        throw Error(ErrorKind::EmptyBigraph, "bigraph has no entities");
    EncodedGraph g;
    g.support_size = support_size(b);
    for (const auto & [id, control] : b.entities)
        g.add_vertex(VertexKind::Entity, control.name, Element::entity(id));
    g.entity_count = g.size();
    g.site_below.assign(static_cast<std::size_t>(g.entity_count), 0);
    for (const auto & p : b.sites)
        if (p.is_entity())
            g.site_below[static_cast<std::size_t>(g.vertex_of.at(Element::entity(p.entity)))] = 1;
    for (const auto & [id, p] : b.parent)
        if (p.is_entity())
            g.add_arc(g.vertex_of.at(Element::entity(p.entity)), g.vertex_of.at(Element::entity(id)));
    g.finalize();
    return g;
}

/// Edges whose link preimage consists of ports only.
inline auto closed_edges(const Bigraph & b) -> std::set<std::string>
{
    std::set<std::string> closed = b.edges;
    for (const auto & [pt, t] : b.link)
        if (! pt.is_port() && t.is_edge())
            closed.erase(t.id);
    return closed;
}

/// Adds one "link" vertex per port (arc entity -> port) and one "closure"
/// vertex per closed link (arc port -> closure). Ports on open links get no
/// further arcs, and ports sharing a link are not connected to each other.
inline auto flatten_links(EncodedGraph g, const Bigraph & b) -> EncodedGraph
{
    for (const auto & [id, control] : b.entities) {
        int v = g.vertex_of.at(Element::entity(id));
        for (int i = 0; i < control.arity; ++i) {
            int p = g.add_vertex(VertexKind::Port, link_label, Element::port(id, i));
            g.add_arc(v, p);
        }
    }
    for (const auto & e : closed_edges(b))
        g.add_vertex(VertexKind::Closure, closure_label, Element::edge(e));
    for (const auto & [pt, t] : b.link) {
        if (! pt.is_port() || ! t.is_edge())
            continue;
        auto closure = g.vertex_of.find(Element::edge(t.id));
        if (closure != g.vertex_of.end())
            g.add_arc(g.vertex_of.at(Element::port(pt.id, pt.index)), closure->second);
    }
    g.finalize();
    return g;
}

inline auto encode(const Bigraph & b) -> EncodedGraph { return flatten_links(encode_place(b), b); }

/// τ: entity pairs related by ancestry in either direction through place arcs.
class DescendantMap {
public:
    DescendantMap() = default;

    explicit DescendantMap(int n) : n_(n), bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false) {}

    auto related(int u, int w) const -> bool
    {
        if (u < 0 || w < 0 || u >= n_ || w >= n_)
            return false;
        return bits_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(w)];
    }

    void set(int u, int w)
    {
        bits_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(w)] = true;
        bits_[static_cast<std::size_t>(w) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(u)] = true;
    }

    auto size() const -> int { return n_; }

private:
    int n_ = 0;
    std::vector<bool> bits_;
};

inline auto descendant_map(const EncodedGraph & g) -> DescendantMap
{
    DescendantMap tau(g.entity_count);
    for (int v = 0; v < g.entity_count; ++v) {
        std::vector<int> stack{v};
        std::vector<bool> seen(static_cast<std::size_t>(g.entity_count), false);
        while (! stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.out[static_cast<std::size_t>(u)]) {
                if (g.kind(w) != VertexKind::Entity || seen[static_cast<std::size_t>(w)])
                    continue;
                seen[static_cast<std::size_t>(w)] = true;
                tau.set(v, w);
                stack.push_back(w);
            }
        }
    }
    return tau;
}

/// A group of unmatched vertex pairs sharing label and adjacency pattern to
/// the current mapping. `adjacent` is the class-wide visibility bit A(l)[0];
/// the per-member bits are A(l)[k+1].
struct LabelClass {
    VertexKind kind = VertexKind::Entity;
    std::string label;
    int degree = 0;
    std::vector<int> left;
    std::vector<int> right;
    std::vector<char> left_visible;
    std::vector<char> right_visible;
    bool adjacent = false;

    auto is_link() const -> bool { return kind == VertexKind::Port; }

    auto left_selectable(std::size_t k) const -> bool { return adjacent || left_visible[k]; }
    auto right_selectable(std::size_t k) const -> bool { return adjacent || right_visible[k]; }
};

/// Vertices grouped by (kind, label), closures additionally by in-degree.
/// Classes with an empty side can never contribute and are dropped.
inline auto initial_partition(const EncodedGraph & g1, const EncodedGraph & g2) -> std::vector<LabelClass>
{
    using Key = std::tuple<VertexKind, std::string, int>;
    auto key = [](const EncodedVertex & v) { return Key{v.kind, v.label, v.kind == VertexKind::Closure ? v.in_degree : 0}; };
    std::map<Key, LabelClass> classes;
    for (const auto & v : g1.vertices)
        classes[key(v)].left.push_back(v.id);
    for (const auto & v : g2.vertices)
        classes[key(v)].right.push_back(v.id);

    std::vector<LabelClass> out;
    for (auto & [k, c] : classes) {
        if (c.left.empty() || c.right.empty())
            continue;
        c.kind = std::get<0>(k);
        c.label = std::get<1>(k);
        c.degree = std::get<2>(k);
        char visible = c.kind == VertexKind::Entity ? 1 : 0;
        c.left_visible.assign(c.left.size(), visible);
        c.right_visible.assign(c.right.size(), visible);
        out.push_back(std::move(c));
    }
    return out;
}

}
