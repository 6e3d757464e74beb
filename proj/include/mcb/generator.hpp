#pragma once

// Seeded random instances. A core bigraph with its own open interface is
// grown into hosts by adding context material above it and parameter
// material below its sites, so the core occurs in every host it is grown
// into. Hosts are valid and solid, have no inner names, and are fully
// determined by the parameters and the seed.

#include "mcb/occurrence.hpp"

#include <numeric>
#include <random>

namespace mcb {

struct GeneratorParams {
    int entities = 5;            // per host
    int controls = 3;
    int max_arity = 2;
    double link_density = 0.5;   // chance that a port joins a closed link
    int overlap = 3;             // core entities shared by both hosts
    int max_edges = 3;           // closed links per host
};

struct Planted {
    Bigraph pattern;
    Bigraph target;
    Embedding embedding;
    std::vector<Control> signature;
};

inline auto check_params(const GeneratorParams & p) -> void
{
    auto fail = [](const std::string & why) { throw Error(ErrorKind::InfeasibleParams, why); };
    if (p.entities < 1)
        fail("entities must be positive");
    if (p.controls < 1)
        fail("controls must be positive");
    if (p.max_arity < 0)
        fail("max_arity must be non-negative");
    if (p.overlap < 0 || p.overlap > p.entities)
        fail("overlap must lie in [0, entities]");
    if (p.max_edges < 0)
        fail("max_edges must be non-negative");
    if (! (p.link_density >= 0.0 && p.link_density <= 1.0))
        fail("link_density must lie in [0, 1]");
}

namespace detail {

    class Rng {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        auto below(std::size_t n) -> std::size_t { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
        auto chance(double p) -> bool { return static_cast<double>(engine_() % 1'000'000) < p * 1'000'000.0; }

        template <typename T>
        auto pick(const std::vector<T> & xs) -> const T & { return xs[below(xs.size())]; }

        auto engine() -> std::mt19937_64 & { return engine_; }

    private:
        std::mt19937_64 engine_;
    };

    inline auto control_name(int k) -> std::string
    {
        std::string s;
        do {
            s.insert(s.begin(), static_cast<char>('A' + k % 26));
            k = k / 26 - 1;
        } while (k >= 0);
        return s;
    }

    /// Renames entities, edges and outer names to v<i>, e<i>, x<i> under a
    /// random permutation; returns the entity and edge renamings.
    inline auto scramble(const Bigraph & b, Rng & rng) -> std::tuple<Bigraph, std::map<std::string, std::string>, std::map<std::string, std::string>>
    {
        auto perm = [&](std::size_t n) {
            std::vector<std::size_t> p(n);
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng.engine());
            return p;
        };
        std::map<std::string, std::string> ent, edge, name;
        auto pe = perm(b.entities.size());
        std::size_t k = 0;
        for (const auto & [v, c] : b.entities)
            ent[v] = "v" + std::to_string(pe[k++]);
        auto pg = perm(b.edges.size());
        k = 0;
        for (const auto & e : b.edges)
            edge[e] = "e" + std::to_string(pg[k++]);
        auto pn = perm(b.outer_names.size());
        k = 0;
        for (const auto & y : b.outer_names)
            name[y] = "x" + std::to_string(pn[k++]);

        auto rp = [&](const Parent & p) { return p.is_entity() ? Parent::of_entity(ent.at(p.entity)) : p; };
        Bigraph out;
        out.regions = b.regions;
        for (const auto & [v, c] : b.entities)
            out.add_entity(ent.at(v), c, rp(b.parent.at(v)));
        for (const auto & p : b.sites)
            out.add_site(rp(p));
        for (const auto & [e, f] : edge)
            out.add_edge(f);
        for (const auto & [y, x] : name)
            out.add_outer_name(x);
        for (const auto & [pt, t] : b.link)
            out.connect(Point::port(ent.at(pt.id), pt.index), t.is_edge() ? LinkTarget::edge(edge.at(t.id)) : LinkTarget::outer(name.at(t.id)));
        return {out, ent, edge};
    }
}

inline auto make_signature(const GeneratorParams & p, std::uint64_t seed) -> std::vector<Control>
{
    detail::Rng rng(seed);
    std::vector<Control> sig;
    for (int k = 0; k < p.controls; ++k)
        sig.push_back({detail::control_name(k), static_cast<int>(rng.below(static_cast<std::size_t>(p.max_arity) + 1))});
    return sig;
}

/// The shared core: `overlap` entities c<i> in a random forest, sites under
/// some entities (at most one each), ports on core closed links or on outer
/// names y<i>.
inline auto generate_core(const GeneratorParams & p, const std::vector<Control> & sig, detail::Rng & rng) -> Bigraph
{
    Bigraph core;
    std::vector<std::string> ids;
    for (int i = 0; i < p.overlap; ++i) {
        std::string v = "c" + std::to_string(i);
        std::size_t choice = rng.below(ids.size() + 2);
        Parent where = choice == 0 || core.regions == 0 ? Parent::of_region(core.add_region())
                     : choice == 1                      ? Parent::of_region(static_cast<int>(rng.below(static_cast<std::size_t>(core.regions))))
                                                        : Parent::of_entity(ids[choice - 2]);
        core.add_entity(v, rng.pick(sig), where);
        ids.push_back(v);
    }
    for (const auto & v : ids)
        if (rng.chance(0.5))
            core.add_site(Parent::of_entity(v));

    std::vector<std::string> names;
    for (const auto & pt : core.ports()) {
        if (rng.chance(p.link_density) && (! core.edges.empty() || static_cast<int>(core.edges.size()) < p.max_edges)) {
            std::vector<std::string> edges(core.edges.begin(), core.edges.end());
            bool fresh = edges.empty() || (static_cast<int>(edges.size()) < p.max_edges && rng.chance(0.5));
            std::string e = fresh ? "k" + std::to_string(edges.size()) : rng.pick(edges);
            core.add_edge(e).connect(pt, LinkTarget::edge(e));
        }
        else {
            bool fresh = names.empty() || rng.chance(0.7);
            std::string y = fresh ? "y" + std::to_string(names.size()) : rng.pick(names);
            if (fresh)
                names.push_back(y);
            core.add_outer_name(y).connect(pt, LinkTarget::outer(y));
        }
    }
    return core;
}

/// Grows a host around `core` up to p.entities entities and returns it with
/// the embedding of the core. Context entities go under host regions or
/// other context entities, core regions under a host region or a context
/// entity, parameter entities under core entities that have a site or under
/// other parameter entities.
inline auto grow_host(const Bigraph & core, const GeneratorParams & p, const std::vector<Control> & sig, detail::Rng & rng)
    -> std::pair<Bigraph, Embedding>
{
    int extras = p.entities - static_cast<int>(core.entities.size());
    Bigraph h;
    h.entities = core.entities;
    h.edges = core.edges;

    if (extras <= 0) {
        h.regions = core.regions;
        h.parent = core.parent;
        h.sites = core.sites;
        h.outer_names = core.outer_names;
        h.link = core.link;
    }
    else {
        std::vector<std::string> with_site;
        for (const auto & s : core.sites)
            with_site.push_back(s.entity);

        std::vector<Parent> slots;    // context-side place targets
        std::vector<std::string> context, parameter;
        for (int i = 0; i < extras; ++i) {
            std::string v = "h" + std::to_string(i);
            bool below = ! with_site.empty() && rng.chance(0.4);
            if (below) {
                std::vector<std::string> under = with_site;
                under.insert(under.end(), parameter.begin(), parameter.end());
                h.add_entity(v, rng.pick(sig), Parent::of_entity(rng.pick(under)));
                parameter.push_back(v);
            }
            else {
                Parent where = slots.empty() || rng.chance(0.3) ? Parent::of_region(h.add_region()) : rng.pick(slots);
                if (where.is_region() && std::find(slots.begin(), slots.end(), where) == slots.end())
                    slots.push_back(where);
                h.add_entity(v, rng.pick(sig), where);
                context.push_back(v);
                slots.push_back(Parent::of_entity(v));
            }
        }

        std::vector<Parent> anchor(static_cast<std::size_t>(core.regions));
        for (auto & a : anchor) {
            a = slots.empty() || rng.chance(0.3) ? Parent::of_region(h.add_region()) : rng.pick(slots);
            if (a.is_region() && std::find(slots.begin(), slots.end(), a) == slots.end())
                slots.push_back(a);
        }
        for (const auto & [v, q] : core.parent)
            h.parent[v] = q.is_region() ? anchor[static_cast<std::size_t>(q.region)] : q;

        std::vector<std::string> site_ok = context;
        site_ok.insert(site_ok.end(), parameter.begin(), parameter.end());
        site_ok.insert(site_ok.end(), with_site.begin(), with_site.end());
        std::sort(site_ok.begin(), site_ok.end());
        for (const auto & v : site_ok)
            if (rng.chance(0.25))
                h.add_site(Parent::of_entity(v));

        // core links: closed links kept, each core outer name sent to one host target
        std::vector<std::string> host_edges;    // closed links extra ports may join
        std::vector<std::string> names;
        int edge_count = static_cast<int>(core.edges.size());
        auto fresh_name = [&] {
            std::string x = "o" + std::to_string(names.size());
            names.push_back(x);
            h.add_outer_name(x);
            return x;
        };
        std::map<std::string, LinkTarget> target_of;
        for (const auto & y : core.outer_names) {
            if (edge_count < p.max_edges && rng.chance(p.link_density)) {
                std::string e = "f" + std::to_string(edge_count++);
                h.add_edge(e);
                host_edges.push_back(e);
                target_of[y] = LinkTarget::edge(e);
            }
            else
                target_of[y] = LinkTarget::outer(fresh_name());
        }
        for (const auto & [pt, t] : core.link)
            h.link[pt] = t.is_edge() ? t : target_of.at(t.id);

        std::vector<std::string> extra_ids = context;
        extra_ids.insert(extra_ids.end(), parameter.begin(), parameter.end());
        std::sort(extra_ids.begin(), extra_ids.end());
        for (const auto & v : extra_ids) {
            for (int i = 0; i < h.arity(v); ++i) {
                Point pt = Point::port(v, i);
                bool room = edge_count < p.max_edges;
                if (rng.chance(p.link_density) && (room || ! host_edges.empty())) {
                    std::string e;
                    if (room && (host_edges.empty() || rng.chance(0.5))) {
                        e = "f" + std::to_string(edge_count++);
                        h.add_edge(e);
                        host_edges.push_back(e);
                    }
                    else
                        e = rng.pick(host_edges);
                    h.connect(pt, LinkTarget::edge(e));
                }
                else
                    h.connect(pt, LinkTarget::outer(names.empty() || rng.chance(0.6) ? fresh_name() : rng.pick(names)));
            }
        }
    }

    auto [out, ent, edge] = detail::scramble(h, rng);
    Embedding emb;
    for (const auto & [v, c] : core.entities)
        emb.entities[v] = ent.at(v);
    for (const auto & e : core.edges)
        emb.edges[e] = edge.at(e);
    return {out, emb};
}

/// Two hosts grown independently around one core; the optimum is at least
/// the core's size. With overlap = entities both hosts are renamings of the
/// core.
inline auto generate_instance(const GeneratorParams & p, std::uint64_t seed) -> std::pair<Bigraph, Bigraph>
{
    check_params(p);
    auto sig = make_signature(p, seed);
    detail::Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto core = generate_core(p, sig, rng);
    auto a = grow_host(core, p, sig, rng).first;
    auto b = grow_host(core, p, sig, rng).first;
    return {a, b};
}

/// A core as pattern and one host grown around it, with the planted embedding.
inline auto generate_planted(const GeneratorParams & p, std::uint64_t seed) -> Planted
{
    check_params(p);
    if (p.overlap < 1)
        throw Error(ErrorKind::InfeasibleParams, "a planted pattern needs at least one entity");
    auto sig = make_signature(p, seed);
    detail::Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto core = generate_core(p, sig, rng);
    auto [target, emb] = grow_host(core, p, sig, rng);
    return {core, target, emb, sig};
}

/// Grows a target around a given pattern. The pattern must be solid, have
/// no inner names and sites only under entities.
inline auto generate_planted(const Bigraph & pattern, const std::vector<Control> & sig, const GeneratorParams & p, std::uint64_t seed)
    -> Planted
{
    check_params(p);
    if (! pattern.inner_names.empty())
        throw Error(ErrorKind::InfeasibleParams, "pattern has inner names");
    if (static_cast<int>(pattern.entities.size()) > p.entities)
        throw Error(ErrorKind::InfeasibleParams, "pattern larger than target");
    detail::Rng rng(seed);
    auto [target, emb] = grow_host(pattern, p, sig, rng);
    return {pattern, target, emb, sig};
}

}
