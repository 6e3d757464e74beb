#pragma once

// McSplit-style branch and bound for maximum common bigraphs over the
// encodings produced by encode.hpp.
//
// Beyond plain McSplit the search enforces:
//  - compositional validity: an entity outside every class adjacent to the
//    mapping may only be chosen while it is unrelated by ancestry (τ) to all
//    mapped entities; solutions leaving an unmapped entity strictly between
//    two mapped ones are rejected when recorded;
//  - closures become selectable only once all of their ports are mapped;
//  - after an entity of arity n is mapped, the next n choices are its ports
//    (port lock), and the score only counts entities and closures.

#include "mcb/encode.hpp"

#include <chrono>
#include <functional>
#include <limits>

namespace mcb {

enum class ScoreMode : std::uint8_t {
    SupportSize,    // entities + closures, -1 while a mapped entity lacks ports
    VertexCount,    // every mapped vertex counts; unmodified MCIS score, for ablation only
};

struct SearchOptions {
    enum class Driver : std::uint8_t { Descending, Default };

    Driver driver = Driver::Descending;
    bool enumerate_all = true;
    ScoreMode score_mode = ScoreMode::SupportSize;
    std::optional<double> timeout_seconds;
    std::optional<long> node_limit;
};

/// A mapping between G1 and G2 elements (entities, ports, closed links).
/// Pairs are sorted by their G1 element.
struct SolutionMapping {
    std::vector<std::pair<Element, Element>> pairs;
    int score = 0;

    auto operator<=>(const SolutionMapping &) const = default;
};

inline auto inverse(const SolutionMapping & m) -> SolutionMapping
{
    SolutionMapping inv{{}, m.score};
    for (const auto & [a, b] : m.pairs)
        inv.pairs.emplace_back(b, a);
    std::sort(inv.pairs.begin(), inv.pairs.end());
    return inv;
}

struct SearchResult {
    std::vector<SolutionMapping> solutions;
    int optimum = 0;
    long nodes = 0;
    bool aborted = false;
};

struct Assignment {
    int left = 0;
    int right = 0;

    auto operator<=>(const Assignment &) const = default;
};

struct Branch {
    std::size_t class_index = 0;
    int left = 0;
};

/// One node of the search: mapping, label classes with visibility bits and
/// the port lock. Copied on every branch, so backtracking restores all of it.
class SearchState {
public:
    SearchState(const EncodedGraph & g1, const EncodedGraph & g2, const DescendantMap & tau1, const DescendantMap & tau2,
                ScoreMode mode = ScoreMode::SupportSize)
        : g1_(&g1), g2_(&g2), tau1_(&tau1), tau2_(&tau2), mode_(mode),
          classes_(initial_partition(g1, g2)),
          mapped1_(static_cast<std::size_t>(g1.size()), -1),
          mapped2_(static_cast<std::size_t>(g2.size()), -1)
    {
    }

    auto classes() const -> const std::vector<LabelClass> & { return classes_; }
    auto mapping() const -> const std::vector<Assignment> & { return mapping_; }
    auto port_lock() const -> int { return port_lock_; }
    auto last_refine_touches() const -> long { return refine_touches_; }
    auto image_of(int u) const -> int { return mapped1_[static_cast<std::size_t>(u)]; }
    auto preimage_of(int v) const -> int { return mapped2_[static_cast<std::size_t>(v)]; }

    /// Maps u -> v, then splits classes and refines visibility.
    void assign(int u, int v)
    {
        mapping_.push_back({u, v});
        mapped1_[static_cast<std::size_t>(u)] = v;
        mapped2_[static_cast<std::size_t>(v)] = u;
        switch (g1_->kind(u)) {
        case VertexKind::Entity:
            last_entity_ = u;
            port_lock_ = port_count(u);
            break;
        case VertexKind::Port:
            if (port_lock_ > 0)
                --port_lock_;
            break;
        case VertexKind::Closure:
            break;
        }
        partition_classes(u, v);
        refine_visibility(u, v);
    }

    /// Splits every class by its directed adjacency to (u, v); u and v leave
    /// their class, member bits travel with their vertices, and classes with
    /// an empty side are dropped.
    void partition_classes(int u, int v)
    {
        std::vector<LabelClass> next;
        next.reserve(classes_.size() + 4);
        for (auto & c : classes_) {
            std::array<LabelClass, 3> parts;
            for (auto & part : parts) {
                part.kind = c.kind;
                part.label = c.label;
                part.degree = c.degree;
            }
            for (std::size_t k = 0; k < c.left.size(); ++k) {
                int w = c.left[k];
                if (w == u)
                    continue;
                auto & part = parts[static_cast<std::size_t>(g1_->relation(u, w))];
                part.left.push_back(w);
                part.left_visible.push_back(c.left_visible[k]);
            }
            for (std::size_t k = 0; k < c.right.size(); ++k) {
                int w = c.right[k];
                if (w == v)
                    continue;
                auto & part = parts[static_cast<std::size_t>(g2_->relation(v, w))];
                part.right.push_back(w);
                part.right_visible.push_back(c.right_visible[k]);
            }
            for (std::size_t r = 0; r < parts.size(); ++r) {
                auto & part = parts[r];
                if (part.left.empty() || part.right.empty())
                    continue;
                part.adjacent = c.kind != VertexKind::Closure && (c.adjacent || r != static_cast<std::size_t>(Arc::None));
                next.push_back(std::move(part));
            }
        }
        classes_ = std::move(next);
    }

    /// Visibility after mapping (u, v). Classes adjacent to the mapping stay
    /// fully visible. In non-adjacent entity classes, members related to u
    /// (resp. v) by ancestry are hidden. Closure members are visible exactly
    /// when all of their ports are mapped; link classes only ever become
    /// visible through adjacency.
    void refine_visibility(int u, int v)
    {
        refine_touches_ = 0;
        bool entity_step = g1_->kind(u) == VertexKind::Entity;
        for (auto & c : classes_) {
            if (c.kind == VertexKind::Entity) {
                if (c.adjacent || ! entity_step)
                    continue;
                for (std::size_t k = 0; k < c.left.size(); ++k) {
                    ++refine_touches_;
                    if (c.left_visible[k] && tau1_->related(u, c.left[k]))
                        c.left_visible[k] = 0;
                }
                for (std::size_t k = 0; k < c.right.size(); ++k) {
                    ++refine_touches_;
                    if (c.right_visible[k] && tau2_->related(v, c.right[k]))
                        c.right_visible[k] = 0;
                }
            }
            else if (c.kind == VertexKind::Closure) {
                for (std::size_t k = 0; k < c.left.size(); ++k) {
                    ++refine_touches_;
                    c.left_visible[k] = all_parents_mapped(*g1_, mapped1_, c.left[k]);
                }
                for (std::size_t k = 0; k < c.right.size(); ++k) {
                    ++refine_touches_;
                    c.right_visible[k] = all_parents_mapped(*g2_, mapped2_, c.right[k]);
                }
            }
        }
    }

    /// Removes u from the G1 side of class `ci` (the "u stays unmapped" branch).
    void exclude(std::size_t ci, int u)
    {
        auto & c = classes_[ci];
        auto it = std::find(c.left.begin(), c.left.end(), u);
        auto k = static_cast<std::size_t>(it - c.left.begin());
        c.left.erase(it);
        c.left_visible.erase(c.left_visible.begin() + static_cast<long>(k));
        if (c.left.empty())
            classes_.erase(classes_.begin() + static_cast<long>(ci));
    }

    /// Support size of the mapped common bigraph, or -1 while some mapped G1
    /// entity has an unmapped port.
    auto score() const -> int
    {
        if (mode_ == ScoreMode::VertexCount)
            return static_cast<int>(mapping_.size());
        if (port_lock_ > 0)
            return -1;
        int count = 0;
        for (const auto & a : mapping_) {
            switch (g1_->kind(a.left)) {
            case VertexKind::Entity:
                for (int p : g1_->out[static_cast<std::size_t>(a.left)])
                    if (g1_->kind(p) == VertexKind::Port && image_of(p) < 0)
                        return -1;
                ++count;
                break;
            case VertexKind::Closure:
                ++count;
                break;
            case VertexKind::Port:
                break;
            }
        }
        return count;
    }

    /// Mapped non-port count plus, over every non-link class, the smaller side.
    auto bound() const -> int
    {
        int b = 0;
        for (const auto & a : mapping_)
            if (mode_ == ScoreMode::VertexCount || g1_->kind(a.left) != VertexKind::Port)
                ++b;
        for (const auto & c : classes_)
            if (mode_ == ScoreMode::VertexCount || ! c.is_link())
                b += static_cast<int>(std::min(c.left.size(), c.right.size()));
        return b;
    }

    /// While the port lock is held: the lowest unmapped port of the last
    /// mapped entity. Otherwise the selectable vertex of highest degree (ties
    /// to the smallest id) in the class minimising max(|S1|, |S2|); among
    /// equal classes the better vertex wins. Empty when nothing is selectable.
    auto select_branch() const -> std::optional<Branch>
    {
        if (port_lock_ > 0 && mode_ == ScoreMode::SupportSize) {
            for (int p : g1_->out[static_cast<std::size_t>(last_entity_)]) {
                if (g1_->kind(p) != VertexKind::Port || image_of(p) >= 0)
                    continue;
                for (std::size_t ci = 0; ci < classes_.size(); ++ci) {
                    const auto & c = classes_[ci];
                    for (std::size_t k = 0; k < c.left.size(); ++k)
                        if (c.left[k] == p && c.left_selectable(k))
                            return Branch{ci, p};
                }
                return std::nullopt;
            }
        }

        std::optional<Branch> best;
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        int best_degree = -1;
        for (std::size_t ci = 0; ci < classes_.size(); ++ci) {
            const auto & c = classes_[ci];
            bool any_right = false;
            for (std::size_t k = 0; k < c.right.size() && ! any_right; ++k)
                any_right = c.right_selectable(k);
            if (! any_right)
                continue;
            int pick = -1;
            int pick_degree = -1;
            for (std::size_t k = 0; k < c.left.size(); ++k) {
                if (! c.left_selectable(k))
                    continue;
                int w = c.left[k];
                int d = g1_->degree(w);
                if (d > pick_degree || (d == pick_degree && w < pick)) {
                    pick = w;
                    pick_degree = d;
                }
            }
            if (pick < 0)
                continue;
            std::size_t size = std::max(c.left.size(), c.right.size());
            if (size < best_size || (size == best_size && (pick_degree > best_degree || (pick_degree == best_degree && pick < best->left)))) {
                best = Branch{ci, pick};
                best_size = size;
                best_degree = pick_degree;
            }
        }
        return best;
    }

    /// Selectable G2 vertices of the branch's class, in id order.
    auto candidates(const Branch & br) const -> std::vector<int>
    {
        const auto & c = classes_[br.class_index];
        std::vector<int> out;
        for (std::size_t k = 0; k < c.right.size(); ++k)
            if (c.right_selectable(k))
                out.push_back(c.right[k]);
        std::sort(out.begin(), out.end());
        return out;
    }

    auto locked() const -> bool { return port_lock_ > 0 && mode_ == ScoreMode::SupportSize; }

    /// No unmapped entity lies strictly between two mapped entities, on
    /// either side.
    auto betweenness_ok() const -> bool { return closed_under_betweenness(*g1_, mapped1_) && closed_under_betweenness(*g2_, mapped2_); }

    auto to_solution() const -> SolutionMapping
    {
        SolutionMapping m;
        m.score = score();
        for (const auto & a : mapping_)
            m.pairs.emplace_back(g1_->origin[static_cast<std::size_t>(a.left)], g2_->origin[static_cast<std::size_t>(a.right)]);
        std::sort(m.pairs.begin(), m.pairs.end());
        return m;
    }

private:
    auto port_count(int u) const -> int
    {
        int n = 0;
        for (int p : g1_->out[static_cast<std::size_t>(u)])
            n += g1_->kind(p) == VertexKind::Port;
        return n;
    }

    static auto all_parents_mapped(const EncodedGraph & g, const std::vector<int> & mapped, int w) -> char
    {
        for (int p : g.in[static_cast<std::size_t>(w)])
            if (mapped[static_cast<std::size_t>(p)] < 0)
                return 0;
        return 1;
    }

    static auto place_parent(const EncodedGraph & g, int v) -> int
    {
        for (int p : g.in[static_cast<std::size_t>(v)])
            if (g.kind(p) == VertexKind::Entity)
                return p;
        return -1;
    }

    static auto closed_under_betweenness(const EncodedGraph & g, const std::vector<int> & mapped) -> bool
    {
        for (int v = 0; v < g.entity_count; ++v) {
            if (mapped[static_cast<std::size_t>(v)] < 0)
                continue;
            bool gap = false;
            for (int p = place_parent(g, v); p >= 0; p = place_parent(g, p)) {
                bool m = mapped[static_cast<std::size_t>(p)] >= 0;
                if (m && gap)
                    return false;
                gap = gap || ! m;
            }
        }
        return true;
    }

    const EncodedGraph * g1_;
    const EncodedGraph * g2_;
    const DescendantMap * tau1_;
    const DescendantMap * tau2_;
    ScoreMode mode_;
    std::vector<LabelClass> classes_;
    std::vector<Assignment> mapping_;
    std::vector<int> mapped1_;
    std::vector<int> mapped2_;
    int port_lock_ = 0;
    int last_entity_ = -1;
    long refine_touches_ = 0;
};

namespace detail {

    /// Pairs of a mapping restricted to entities and closed links.
    inline auto support_key(const SolutionMapping & m) -> std::vector<std::pair<Element, Element>>
    {
        std::vector<std::pair<Element, Element>> key;
        for (const auto & pr : m.pairs)
            if (! pr.first.is_port())
                key.push_back(pr);
        return key;
    }

    class Search {
    public:
        Search(const EncodedGraph & g1, const EncodedGraph & g2, const DescendantMap & t1, const DescendantMap & t2,
               const SearchOptions & opts)
            : g1_(g1), g2_(g2), t1_(t1), t2_(t2), opts_(opts), start_(std::chrono::steady_clock::now())
        {
        }

        /// One decision problem: all mappings scoring exactly `goal`.
        auto run_goal(int goal) -> bool
        {
            goal_ = goal;
            threshold_ = goal;
            SearchState root(g1_, g2_, t1_, t2_, opts_.score_mode);
            expand(root, true);
            return ! found_.empty();
        }

        /// Single maximising pass; ties with the incumbent are kept.
        void run_maximise()
        {
            goal_.reset();
            threshold_ = 1;
            SearchState root(g1_, g2_, t1_, t2_, opts_.score_mode);
            expand(root, true);
        }

        auto result() const -> SearchResult
        {
            SearchResult r;
            r.nodes = nodes_;
            r.aborted = aborted_;
            r.optimum = found_.empty() ? 0 : incumbent_;
            for (const auto & [key, m] : found_)
                r.solutions.push_back(m);
            std::sort(r.solutions.begin(), r.solutions.end());
            return r;
        }

        auto aborted() const -> bool { return aborted_; }

    private:
        auto out_of_budget() -> bool
        {
            if (aborted_)
                return true;
            if (opts_.node_limit && nodes_ > *opts_.node_limit)
                aborted_ = true;
            else if (opts_.timeout_seconds && (nodes_ & 255) == 0) {
                std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
                aborted_ = elapsed.count() > *opts_.timeout_seconds;
            }
            return aborted_;
        }

        auto done() const -> bool { return aborted_ || (! opts_.enumerate_all && ! found_.empty() && goal_); }

        void consider(const SearchState & s)
        {
            int sc = s.score();
            if (sc < threshold_ || (goal_ && sc != *goal_) || ! s.betweenness_ok())
                return;
            if (sc > incumbent_) {
                found_.clear();
                incumbent_ = sc;
                if (! goal_)
                    threshold_ = sc;
            }
            if (! opts_.enumerate_all && ! found_.empty())
                return;
            auto m = s.to_solution();
            auto key = support_key(m);
            auto it = found_.find(key);
            if (it == found_.end())
                found_.emplace(std::move(key), std::move(m));
            else if (m < it->second)
                it->second = std::move(m);
        }

        void expand(SearchState & s, bool fresh)
        {
            if (out_of_budget() || done())
                return;
            ++nodes_;
            if (fresh)
                consider(s);
            if (s.bound() < threshold_)
                return;
            auto br = s.select_branch();
            if (! br)
                return;
            for (int w : s.candidates(*br)) {
                SearchState child = s;
                child.assign(br->left, w);
                expand(child, true);
                if (done())
                    return;
            }
            if (s.locked())
                return;
            s.exclude(br->class_index, br->left);
            expand(s, false);
        }

        const EncodedGraph & g1_;
        const EncodedGraph & g2_;
        const DescendantMap & t1_;
        const DescendantMap & t2_;
        SearchOptions opts_;
        std::chrono::steady_clock::time_point start_;
        std::optional<int> goal_;
        int threshold_ = 1;
        int incumbent_ = 0;
        long nodes_ = 0;
        bool aborted_ = false;
        std::map<std::vector<std::pair<Element, Element>>, SolutionMapping> found_;
    };

    inline void require_entities(const EncodedGraph & g1, const EncodedGraph & g2)
    {
        if (g1.entity_count == 0 || g2.entity_count == 0)
            throw Error(ErrorKind::EmptyInput, "both encodings need at least one entity");
    }
}

/// McSplit↓: decision problems for goals min(|G1|, |G2|), then one less,
/// until a goal admits a solution. Prunes when bound < goal and enumerates
/// every optimal mapping at the first satisfiable goal. Port permutations of
/// the same entity/closure mapping are reported once, with the
/// lexicographically smallest port assignment.
inline auto solve_mcb(const EncodedGraph & g1, const EncodedGraph & g2, const DescendantMap & tau1, const DescendantMap & tau2,
                      SearchOptions opts = {}) -> SearchResult
{
    detail::require_entities(g1, g2);
    detail::Search search(g1, g2, tau1, tau2, opts);
    int top = opts.score_mode == ScoreMode::VertexCount ? std::min(g1.size(), g2.size())
                                                        : static_cast<int>(std::min(g1.support_size, g2.support_size));
    for (int goal = top; goal >= 1; --goal)
        if (search.run_goal(goal) || search.aborted())
            break;
    return search.result();
}

/// Classic maximising McSplit: one pass, pruning when bound < incumbent.
inline auto solve_default(const EncodedGraph & g1, const EncodedGraph & g2, const DescendantMap & tau1, const DescendantMap & tau2,
                          SearchOptions opts = {}) -> SearchResult
{
    detail::require_entities(g1, g2);
    detail::Search search(g1, g2, tau1, tau2, opts);
    search.run_maximise();
    return search.result();
}

inline auto solve(const EncodedGraph & g1, const EncodedGraph & g2, const DescendantMap & tau1, const DescendantMap & tau2,
                  const SearchOptions & opts = {}) -> SearchResult
{
    return opts.driver == SearchOptions::Driver::Descending ? solve_mcb(g1, g2, tau1, tau2, opts)
                                                            : solve_default(g1, g2, tau1, tau2, opts);
}

struct BoundAudit {
    long nodes = 0;
    long violations = 0;
};

/// Exhaustive search without pruning that checks, at every node, that the
/// bound is at least the best valid score reachable below it.
inline auto audit_bound(const EncodedGraph & g1, const EncodedGraph & g2, const DescendantMap & tau1, const DescendantMap & tau2)
    -> BoundAudit
{
    BoundAudit audit;
    std::function<int(SearchState &, bool)> walk = [&](SearchState & s, bool fresh) -> int {
        ++audit.nodes;
        int best = 0;
        if (fresh && s.betweenness_ok())
            best = std::max(best, s.score());
        int b = s.bound();
        if (auto br = s.select_branch()) {
            for (int w : s.candidates(*br)) {
                SearchState child = s;
                child.assign(br->left, w);
                best = std::max(best, walk(child, true));
            }
            if (! s.locked()) {
                SearchState rest = s;
                rest.exclude(br->class_index, br->left);
                best = std::max(best, walk(rest, false));
            }
        }
        if (b < best)
            ++audit.violations;
        return best;
    };
    SearchState root(g1, g2, tau1, tau2);
    walk(root, true);
    return audit;
}

}

namespace mcb {

/// Encodes both bigraphs and runs the selected driver.
inline auto solve_bigraphs(const Bigraph & g1, const Bigraph & g2, const SearchOptions & opts = {}) -> SearchResult
{
    auto e1 = encode(g1);
    auto e2 = encode(g2);
    return solve(e1, e2, descendant_map(e1), descendant_map(e2), opts);
}

}
