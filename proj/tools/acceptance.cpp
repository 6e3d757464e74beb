// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
//
//   acceptance --samples DIR

#include "mcb/mcb.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace mcb;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int suite_size = 200;
constexpr double suite_budget_s = 300.0;
constexpr int identity_count = 100;
constexpr int inverse_count = 100;
constexpr int matching_count = 50;
constexpr int audit_count = 50;
constexpr int perf_count = 20;
constexpr double perf_median_s = 1.0;
constexpr double perf_worst_s = 5.0;
constexpr double saturation_share = 0.05;

auto seconds_since(Clock::time_point t) -> double { return std::chrono::duration<double>(Clock::now() - t).count(); }

bool all_passed = true;

auto report(int n, bool pass, const std::string & what) -> void
{
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << "  " << what << std::endl;
    all_passed = all_passed && pass;
}

/// The criterion-1 suite: at most 5 entities and 3 closed links per side,
/// overlap, controls, arity and density varied with the index.
auto suite_params(int i) -> GeneratorParams
{
    GeneratorParams p;
    p.entities = 5;
    p.max_edges = 3;
    p.overlap = 1 + i % 5;
    p.controls = 1 + i % 3;
    p.max_arity = 1 + (i / 3) % 3;
    p.link_density = 0.3 + 0.1 * (i % 5);
    return p;
}

struct Invariants {
    long solutions = 0;
    std::vector<std::string> failures;

    void check(const Bigraph & g1, const Bigraph & g2, const SearchResult & r)
    {
        for (const auto & m : r.solutions) {
            ++solutions;
            for (auto & v : check_solution_constraints(g1, g2, m))
                failures.push_back(std::move(v));
        }
    }
};

auto load(const std::string & path) -> Bigraph { return parse_document(read_file(path)).bigraphs.at(0); }

auto strip_timing(const std::string & csv) -> std::string
{
    std::istringstream in(csv);
    std::string line;
    std::string out;
    while (std::getline(in, line)) {
        auto cut = line.size();
        for (int k = 0; k < 2 && cut != std::string::npos; ++k)
            cut = line.rfind(',', cut - 1);
        out += line.substr(0, cut) + "\n";
    }
    return out;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"acceptance criteria"};
    std::string samples = "samples";
    app.add_option("--samples", samples)->check(CLI::ExistingDirectory);
    CLI11_PARSE(app, argc, argv);

    Invariants inv;
    int drivers_agree = 0;

    // 1, with the driver comparison for 6 on the same suite
    {
        int agree = 0;
        std::string first_miss;
        auto t0 = Clock::now();
        for (int i = 0; i < suite_size; ++i) {
            auto [g1, g2] = generate_instance(suite_params(i), 9000 + static_cast<std::uint64_t>(i));
            auto expect = brute_force_mcb(g1, g2);
            auto got = solve_bigraphs(g1, g2);
            SearchOptions dflt;
            dflt.driver = SearchOptions::Driver::Default;
            auto other = solve_bigraphs(g1, g2, dflt);
            if (got.solutions == expect)
                ++agree;
            else if (first_miss.empty())
                first_miss = ", first mismatch at #" + std::to_string(i);
            if (other.optimum == got.optimum && other.solutions == got.solutions)
                ++drivers_agree;
            inv.check(g1, g2, got);
        }
        double elapsed = seconds_since(t0);
        std::ostringstream os;
        os << agree << "/" << suite_size << " equal to brute force in " << std::fixed << std::setprecision(1) << elapsed << " s (limit "
           << suite_budget_s << " s)" << first_miss;
        report(1, agree == suite_size && elapsed < suite_budget_s, os.str());
    }

    // 2
    {
        auto g1 = load(samples + "/fig8-1.big");
        auto g2 = load(samples + "/fig8-2.big");
        bool ok = true;
        std::ostringstream os2;
        for (auto d : {SearchOptions::Driver::Descending, SearchOptions::Driver::Default}) {
            SearchOptions o;
            o.driver = d;
            auto r = solve_bigraphs(g1, g2, o);
            inv.check(g1, g2, r);
            ok = ok && r.optimum == 1 && r.solutions.size() == 2;
            if (d == SearchOptions::Driver::Descending)
                os2 << "optimum " << r.optimum << " with " << r.solutions.size() << " solutions";
        }
        SearchOptions ablation;
        ablation.score_mode = ScoreMode::VertexCount;
        auto r = solve_bigraphs(g1, g2, ablation);
        ok = ok && r.optimum == 3 && r.solutions.size() == 1;
        os2 << "; unmodified score gives " << r.solutions.size() << " mapping of size " << r.optimum;
        report(2, ok, os2.str());
    }

    // 3
    {
        int pass = 0;
        int total = 0;
        std::string witness;
        auto tally = [&](const PropertyResult & p) {
            ++total;
            if (p.pass)
                ++pass;
            else if (witness.empty())
                witness = ", " + p.name + ": " + p.witness;
        };
        for (int i = 0; i < identity_count; ++i) {
            auto g = generate_instance(suite_params(i), 20000 + static_cast<std::uint64_t>(i)).first;
            auto r = solve_bigraphs(g, g);
            inv.check(g, g, r);
            tally(check_identity(g, r));
        }
        for (int i = 0; i < inverse_count; ++i) {
            auto [g1, g2] = generate_instance(suite_params(i), 30000 + static_cast<std::uint64_t>(i));
            auto fwd = solve_bigraphs(g1, g2);
            auto bwd = solve_bigraphs(g2, g1);
            inv.check(g1, g2, fwd);
            inv.check(g2, g1, bwd);
            tally(check_inverse(fwd, bwd));
        }
        for (int i = 0; i < matching_count; ++i) {
            GeneratorParams p = suite_params(i);
            p.entities = 6;
            p.overlap = 2 + i % 3;
            auto pl = generate_planted(p, 40000 + static_cast<std::uint64_t>(i));
            auto r = solve_bigraphs(pl.pattern, pl.target);
            inv.check(pl.pattern, pl.target, r);
            auto embs = brute_force_match(pl.pattern, pl.target);
            embs.push_back(pl.embedding);
            tally(check_matching(pl.pattern, pl.target, embs, r));
        }
        report(3, pass == total,
               std::to_string(pass) + "/" + std::to_string(total) + " (identity " + std::to_string(identity_count) + ", inverse "
                   + std::to_string(inverse_count) + ", matching " + std::to_string(matching_count) + ")" + witness);
    }

    // 4
    report(4, inv.failures.empty(),
           std::to_string(inv.solutions) + " solutions checked, " + std::to_string(inv.failures.size()) + " violations"
               + (inv.failures.empty() ? "" : ", first: " + inv.failures.front()));

    // 5
    {
        long nodes = 0;
        long violations = 0;
        for (int i = 0; i < audit_count; ++i) {
            GeneratorParams p = suite_params(i);
            p.entities = 4;
            p.overlap = 1 + i % 4;
            auto [g1, g2] = generate_instance(p, 50000 + static_cast<std::uint64_t>(i));
            auto e1 = encode(g1);
            auto e2 = encode(g2);
            auto a = audit_bound(e1, e2, descendant_map(e1), descendant_map(e2));
            nodes += a.nodes;
            violations += a.violations;
        }
        report(5, violations == 0,
               std::to_string(audit_count) + " instances, " + std::to_string(nodes) + " nodes, " + std::to_string(violations)
                   + " bound violations");
    }

    report(6, drivers_agree == suite_size, std::to_string(drivers_agree) + "/" + std::to_string(suite_size) + " identical optima and solution sets");

    // 7
    {
        std::vector<Control> sig = {{"Room", 1}, {"Device", 2}, {"Person", 1}, {"Desk", 0}, {"Call", 2}};
        Bigraph p;
        p.regions = 1;
        p.add_entity("room", {"Room", 1}, Parent::of_region(0)).add_entity("dev", {"Device", 2}, Parent::of_entity("room"));
        p.add_site(Parent::of_entity("room"));
        p.add_edge("k").connect(Point::port("room", 0), LinkTarget::edge("k")).connect(Point::port("dev", 0), LinkTarget::edge("k"));
        p.add_outer_name("y").connect(Point::port("dev", 1), LinkTarget::outer("y"));

        GeneratorParams gp;
        gp.entities = 110;
        gp.max_edges = 40;
        gp.controls = 5;
        gp.overlap = 2;
        BenchOptions opts;
        opts.saturate.verify = false;
        std::vector<double> totals;
        double search = 0;
        double saturate = 0;
        int min_size = 1 << 30;
        int max_size = 0;
        int pattern_size = 0;
        bool found = true;
        for (int s = 0; s < perf_count; ++s) {
            auto pl = generate_planted(p, sig, gp, 1000 + static_cast<std::uint64_t>(s));
            auto rec = bench_instance("perf", pl.pattern, pl.target, opts);
            pattern_size = rec.enc_v1;
            min_size = std::min(min_size, rec.enc_v2);
            max_size = std::max(max_size, rec.enc_v2);
            found = found && rec.optimum == closed_support_size(p);
            totals.push_back((rec.ms_search + rec.ms_saturate) / 1000.0);
            search += rec.ms_search;
            saturate += rec.ms_saturate;
        }
        std::sort(totals.begin(), totals.end());
        double median = totals[totals.size() / 2];
        double worst = totals.back();
        double share = saturate / (search + saturate);
        std::ostringstream os;
        os << std::setprecision(3) << "pattern " << pattern_size << " vs targets " << min_size << ".." << max_size << ": median " << median
           << " s, worst " << worst << " s, saturation " << 100 * share << "% of wall time";
        report(7, found && median <= perf_median_s && worst <= perf_worst_s && share < saturation_share, os.str());
    }

    // 8
    {
        auto dir = samples + "/bench";
        auto a = strip_timing(bench_csv(bench_directory(dir)));
        auto b = strip_timing(bench_csv(bench_directory(dir)));
        auto rows = std::count(a.begin(), a.end(), '\n') - 1;
        report(8, a == b && rows > 0, std::to_string(rows) + " instances, " + (a == b ? "identical" : "different") + " CSV without timings");
    }

    return all_passed ? 0 : 1;
}
