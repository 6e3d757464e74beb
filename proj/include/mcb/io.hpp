#pragma once

// .big instance files (JSON), solution output in json/text/dot.
//
// {"signature": [{"name": "A", "arity": 1}],
//  "bigraph": {"entities": [{"id": "v0", "control": "A"}],
//              "parent": [["r0", "v0"], ["v0", "s0"]],
//              "edges": ["e0"], "links": [[["v0", 0], "e0"]],
//              "regions": 1, "sites": 1, "inner": [], "outer": []}}
//
// A pair document carries "pair": [bigraph, bigraph] instead of "bigraph".
// Region keys are r<i>, site keys s<i>; a link source is [entity, port] or
// an inner name.

#include "mcb/decode.hpp"

#include <json.hpp>

#include <regex>
#include <sstream>

namespace mcb {

using json = nlohmann::ordered_json;

struct Document {
    std::vector<Control> signature;
    std::vector<Bigraph> bigraphs;
};

namespace detail {

    inline auto line_col(const std::string & text, std::size_t byte) -> std::pair<int, int>
    {
        int line = 1;
        int col = 1;
        for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            }
            else
                ++col;
        }
        return {line, col};
    }

    [[noreturn]] inline void invalid(const std::string & why) { throw Error(ErrorKind::ValidationError, why); }

    inline auto indexed_key(const std::string & s, char tag) -> std::optional<int>
    {
        static const std::regex re("[rs](0|[1-9][0-9]{0,8})");
        if (s.empty() || s[0] != tag || ! std::regex_match(s, re))
            return std::nullopt;
        return std::stoi(s.substr(1));
    }

    inline auto bigraph_from_json(const json & j, const std::map<std::string, Control> & sig) -> Bigraph
    {
        if (! j.is_object())
            invalid("bigraph block must be an object");
        Bigraph b;
        b.regions = j.value("regions", 0);
        int sites = j.value("sites", 0);
        if (b.regions < 0 || sites < 0)
            invalid("negative region or site count");

        for (const auto & e : j.value("entities", json::array())) {
            auto id = e.at("id").get<std::string>();
            auto control = e.at("control").get<std::string>();
            if (indexed_key(id, 'r') || indexed_key(id, 's'))
                invalid("entity id " + id + " clashes with region/site keys");
            auto it = sig.find(control);
            if (it == sig.end())
                invalid("entity " + id + " has undeclared control " + control);
            if (! b.entities.emplace(id, it->second).second)
                invalid("duplicate entity " + id);
        }

        std::vector<std::optional<Parent>> site_parent(static_cast<std::size_t>(sites));
        for (const auto & pr : j.value("parent", json::array())) {
            if (! pr.is_array() || pr.size() != 2)
                invalid("parent entries are [parent, child] pairs");
            auto up = pr[0].get<std::string>();
            auto down = pr[1].get<std::string>();
            Parent p;
            if (auto r = indexed_key(up, 'r'))
                p = Parent::of_region(*r);
            else
                p = Parent::of_entity(up);
            if (auto s = indexed_key(down, 's')) {
                if (*s >= sites)
                    invalid("site " + down + " out of range");
                if (site_parent[static_cast<std::size_t>(*s)])
                    invalid("site " + down + " has two parents");
                site_parent[static_cast<std::size_t>(*s)] = p;
            }
            else {
                if (b.parent.contains(down))
                    invalid("entity " + down + " has two parents");
                b.parent[down] = p;
            }
        }
        for (int s = 0; s < sites; ++s) {
            if (! site_parent[static_cast<std::size_t>(s)])
                invalid("site s" + std::to_string(s) + " has no parent");
            b.sites.push_back(*site_parent[static_cast<std::size_t>(s)]);
        }

        for (const auto & e : j.value("edges", json::array()))
            b.edges.insert(e.get<std::string>());
        for (const auto & x : j.value("inner", json::array()))
            b.inner_names.insert(x.get<std::string>());
        for (const auto & y : j.value("outer", json::array()))
            b.outer_names.insert(y.get<std::string>());

        for (const auto & l : j.value("links", json::array())) {
            if (! l.is_array() || l.size() != 2)
                invalid("link entries are [source, target] pairs");
            Point src = l[0].is_array() ? Point::port(l[0].at(0).get<std::string>(), l[0].at(1).get<int>()) : Point::inner(l[0].get<std::string>());
            auto tgt = l[1].get<std::string>();
            LinkTarget t = b.edges.contains(tgt) ? LinkTarget::edge(tgt) : LinkTarget::outer(tgt);
            if (b.link.contains(src))
                invalid("point " + describe(src) + " linked twice");
            b.link[src] = t;
        }
        return b;
    }

    inline auto bigraph_to_json(const Bigraph & b) -> json
    {
        json j;
        j["entities"] = json::array();
        for (const auto & [id, c] : b.entities)
            j["entities"].push_back({{"id", id}, {"control", c.name}});
        auto key = [](const Parent & p) { return p.is_region() ? "r" + std::to_string(p.region) : p.entity; };
        j["parent"] = json::array();
        for (const auto & [id, p] : b.parent)
            j["parent"].push_back({key(p), id});
        for (int s = 0; s < b.site_count(); ++s)
            j["parent"].push_back({key(b.sites[static_cast<std::size_t>(s)]), "s" + std::to_string(s)});
        j["edges"] = b.edges;
        j["links"] = json::array();
        for (const auto & [pt, t] : b.link) {
            json src = pt.is_port() ? json::array({pt.id, pt.index}) : json(pt.id);
            j["links"].push_back({src, t.id});
        }
        j["regions"] = b.regions;
        j["sites"] = b.site_count();
        j["inner"] = b.inner_names;
        j["outer"] = b.outer_names;
        return j;
    }

    inline void check_input(const Bigraph & b)
    {
        auto diags = validate(b);
        if (! diags.empty()) {
            std::string msg;
            for (const auto & d : diags)
                msg += (msg.empty() ? "" : ", ") + to_string(d);
            throw Error(ErrorKind::ValidationError, msg);
        }
        auto solid = is_solid(b);
        if (! solid.solid) {
            std::string msg;
            for (const auto & v : solid.violations)
                msg += (msg.empty() ? "" : "; ") + v;
            throw Error(ErrorKind::NonSolid, msg);
        }
    }
}

/// Controls used by the given bigraphs, in name order.
inline auto signature_of(const std::vector<Bigraph> & bs) -> std::vector<Control>
{
    std::map<std::string, Control> sig;
    for (const auto & b : bs)
        for (const auto & [id, c] : b.entities)
            sig[c.name] = c;
    std::vector<Control> out;
    for (const auto & [n, c] : sig)
        out.push_back(c);
    return out;
}

/// Parses a single or pair document. Every bigraph is validated and must be
/// solid. Throws SyntaxError (with line and column), ValidationError or
/// NonSolid.
inline auto parse_document(const std::string & text) -> Document
{
    json j;
    try {
        j = json::parse(text);
    }
    catch (const json::parse_error & e) {
        auto [line, col] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(col));
    }

    Document doc;
    try {
        if (! j.is_object())
            detail::invalid("document must be an object");
        std::map<std::string, Control> sig;
        for (const auto & c : j.value("signature", json::array())) {
            Control ctl{c.at("name").get<std::string>(), c.at("arity").get<int>()};
            if (ctl.arity < 0)
                detail::invalid("control " + ctl.name + " has negative arity");
            if (! sig.emplace(ctl.name, ctl).second)
                detail::invalid("control " + ctl.name + " declared twice");
            doc.signature.push_back(ctl);
        }
        if (j.contains("bigraph") == j.contains("pair"))
            detail::invalid("document needs exactly one of \"bigraph\" and \"pair\"");
        if (j.contains("bigraph"))
            doc.bigraphs.push_back(detail::bigraph_from_json(j.at("bigraph"), sig));
        else {
            const auto & pr = j.at("pair");
            if (! pr.is_array() || pr.size() != 2)
                detail::invalid("\"pair\" must hold two bigraphs");
            for (const auto & b : pr)
                doc.bigraphs.push_back(detail::bigraph_from_json(b, sig));
        }
    }
    catch (const json::exception & e) {
        throw Error(ErrorKind::ValidationError, e.what());
    }
    for (const auto & b : doc.bigraphs)
        detail::check_input(b);
    return doc;
}

inline auto parse_bigraph(const std::string & text) -> Bigraph
{
    auto doc = parse_document(text);
    if (doc.bigraphs.size() != 1)
        throw Error(ErrorKind::ValidationError, "expected a single bigraph document");
    return doc.bigraphs.front();
}

inline auto print_document(const std::vector<Bigraph> & bs, std::vector<Control> signature = {}) -> std::string
{
    if (signature.empty())
        signature = signature_of(bs);
    json j;
    j["signature"] = json::array();
    for (const auto & c : signature)
        j["signature"].push_back({{"name", c.name}, {"arity", c.arity}});
    if (bs.size() == 1)
        j["bigraph"] = detail::bigraph_to_json(bs.front());
    else {
        j["pair"] = json::array();
        for (const auto & b : bs)
            j["pair"].push_back(detail::bigraph_to_json(b));
    }
    return j.dump(2) + "\n";
}

inline auto print_bigraph(const Bigraph & b) -> std::string { return print_document({b}); }

enum class Format : std::uint8_t { Json, Text, Dot };

struct SolveReport {
    SearchResult result;
    std::vector<TripleSolution> solutions;
};

namespace detail {
    inline auto element_json(const Element & e) -> json
    {
        if (! e.is_port())
            return e.id;
        json port = json::array();    // array({id, index}) would deduce an object
        port.push_back(e.id);
        port.push_back(e.index);
        return port;
    }

    inline auto interface_text(const Bigraph & b) -> std::string
    {
        auto names = [](const std::set<std::string> & s) {
            std::string out = "{";
            for (const auto & x : s)
                out += (out.size() > 1 ? "," : "") + x;
            return out + "}";
        };
        return "<" + std::to_string(b.site_count()) + ", " + names(b.inner_names) + "> -> <" + std::to_string(b.regions) + ", "
             + names(b.outer_names) + ">";
    }

    inline auto dot_id(const std::string & s) -> std::string
    {
        std::string out = "\"";
        for (char c : s)
            out += c == '"' ? std::string("\\\"") : std::string(1, c);
        return out + "\"";
    }
}

inline auto emit_json(const SolveReport & r) -> std::string
{
    json j;
    j["optimum"] = r.result.optimum;
    j["count"] = r.solutions.size();
    j["nodes"] = r.result.nodes;
    j["aborted"] = r.result.aborted;
    j["solutions"] = json::array();
    for (const auto & s : r.solutions) {
        json t = json::array();
        for (const auto & tr : s.triples)
        {
            json row = json::array();
            for (const auto * e : {&tr.common, &tr.left, &tr.right})
                row.push_back(detail::element_json(*e));
            t.push_back(std::move(row));
        }
        j["solutions"].push_back({{"score", s.mapping.score}, {"triples", t}, {"common", detail::bigraph_to_json(s.common)}});
    }
    return j.dump(2) + "\n";
}

inline auto emit_text(const SolveReport & r) -> std::string
{
    std::ostringstream os;
    os << "optimum " << r.result.optimum << "\n";
    os << "solutions " << r.solutions.size() << "\n";
    os << "nodes " << r.result.nodes << (r.result.aborted ? " (aborted)" : "") << "\n";
    for (std::size_t k = 0; k < r.solutions.size(); ++k) {
        const auto & s = r.solutions[k];
        os << "\n#" << k + 1 << " score " << s.mapping.score << " interface " << detail::interface_text(s.common) << "\n";
        for (const auto & tr : s.triples)
            os << "  " << to_string(tr.left) << " -> " << to_string(tr.right) << "\n";
    }
    return os.str();
}

/// One cluster per solution showing the encoding of its common bigraph:
/// entities as labelled boxes, place arcs solid, flattened link arcs dashed,
/// closures as small points.
inline auto emit_dot(const SolveReport & r) -> std::string
{
    std::ostringstream os;
    os << "digraph mcb {\n  node [fontname=\"Helvetica\"];\n";
    for (std::size_t k = 0; k < r.solutions.size(); ++k) {
        const auto & gm = r.solutions[k].common;
        auto g = encode(gm);
        std::string tag = "s" + std::to_string(k + 1) + ":";
        os << "  subgraph cluster_" << k + 1 << " {\n    label=\"solution " << k + 1 << "\";\n";
        for (const auto & v : g.vertices) {
            auto id = detail::dot_id(tag + to_string(g.origin[static_cast<std::size_t>(v.id)]));
            switch (v.kind) {
            case VertexKind::Entity: os << "    " << id << " [shape=box, label=" << detail::dot_id(v.label) << "];\n"; break;
            case VertexKind::Port: os << "    " << id << " [shape=circle, width=0.15, label=\"\"];\n"; break;
            case VertexKind::Closure: os << "    " << id << " [shape=point, width=0.08];\n"; break;
            }
        }
        for (const auto & [u, w] : g.arcs()) {
            bool place = g.kind(u) == VertexKind::Entity && g.kind(w) == VertexKind::Entity;
            os << "    " << detail::dot_id(tag + to_string(g.origin[static_cast<std::size_t>(u)])) << " -> "
               << detail::dot_id(tag + to_string(g.origin[static_cast<std::size_t>(w)])) << (place ? "" : " [style=dashed]") << ";\n";
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

inline auto emit_solutions(const SolveReport & r, Format f) -> std::string
{
    switch (f) {
    case Format::Json: return emit_json(r);
    case Format::Text: return emit_text(r);
    case Format::Dot: return emit_dot(r);
    }
    return {};
}

}
