// mcb: maximum common bigraphs from the command line.
//
// exit codes: 0 ok, 1 usage, 2 parse/validation, 3 timeout, 4 internal inconsistency

#include "mcb/mcb.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

enum Exit : int { Ok = 0, Usage = 1, BadInput = 2, Timeout = 3, Inconsistent = 4 };

auto default_seed() -> std::uint64_t
{
    if (const char * s = std::getenv("MCB_SEED"))
        return std::strtoull(s, nullptr, 10);
    return 1;
}

/// One pair document, or two single documents sharing control names.
auto load_pair(const std::vector<std::string> & files) -> std::pair<mcb::Bigraph, mcb::Bigraph>
{
    std::vector<mcb::Bigraph> bs;
    std::map<std::string, int> arity;
    for (const auto & f : files) {
        auto doc = mcb::parse_document(mcb::read_file(f));
        for (const auto & c : doc.signature) {
            auto [it, fresh] = arity.emplace(c.name, c.arity);
            if (! fresh && it->second != c.arity)
                throw mcb::Error(mcb::ErrorKind::ValidationError, "control " + c.name + " has different arities across inputs");
        }
        bs.insert(bs.end(), doc.bigraphs.begin(), doc.bigraphs.end());
    }
    if (bs.size() != 2)
        throw mcb::Error(mcb::ErrorKind::ValidationError, "expected two bigraphs, got " + std::to_string(bs.size()));
    return {bs[0], bs[1]};
}

auto exit_for(const mcb::Error & e) -> int
{
    switch (e.kind()) {
    case mcb::ErrorKind::SyntaxError:
    case mcb::ErrorKind::ValidationError:
    case mcb::ErrorKind::NonSolid:
    case mcb::ErrorKind::EmptyBigraph:
    case mcb::ErrorKind::EmptyInput: return BadInput;
    case mcb::ErrorKind::ReconstructionMismatch:
    case mcb::ErrorKind::SaturationBroke:
    case mcb::ErrorKind::InvalidMapping: return Inconsistent;
    case mcb::ErrorKind::InfeasibleParams:
    case mcb::ErrorKind::CapExceeded: return Usage;
    default: return Inconsistent;
    }
}

struct SolveArgs {
    std::vector<std::string> files;
    bool first = false;
    bool all = false;
    bool no_saturate = false;
    double timeout = 0;
    std::string format = "text";
    std::string driver = "descending";
};

auto run_solve(const SolveArgs & a) -> int
{
    auto [g1, g2] = load_pair(a.files);
    mcb::SearchOptions opts;
    opts.enumerate_all = ! a.first;
    opts.driver = a.driver == "default" ? mcb::SearchOptions::Driver::Default : mcb::SearchOptions::Driver::Descending;
    if (a.timeout > 0)
        opts.timeout_seconds = a.timeout;

    mcb::SolveReport report;
    report.result = mcb::solve_bigraphs(g1, g2, opts);
    for (const auto & m : report.result.solutions) {
        auto t = mcb::decode_solution(m, g1, g2);
        report.solutions.push_back(a.no_saturate ? t : mcb::saturate_interface(std::move(t), g1, g2));
    }
    auto fmt = a.format == "json" ? mcb::Format::Json : a.format == "dot" ? mcb::Format::Dot : mcb::Format::Text;
    std::cout << mcb::emit_solutions(report, fmt);
    return report.result.aborted ? Timeout : Ok;
}

auto run_match(const std::vector<std::string> & files, double timeout) -> int
{
    auto [p, t] = load_pair(files);
    mcb::SearchOptions opts;
    opts.enumerate_all = false;
    if (timeout > 0)
        opts.timeout_seconds = timeout;
    auto r = mcb::solve_bigraphs(p, t, opts);
    int size = mcb::closed_support_size(p);
    std::cout << (r.optimum == size ? "match" : "no match") << " (optimum " << r.optimum << ", |P| " << size << ")\n";
    return r.aborted ? Timeout : Ok;
}

auto run_oracle_check(int cap, int count, std::uint64_t seed) -> int
{
    int agree = 0;
    for (int i = 0; i < count; ++i) {
        mcb::GeneratorParams p;
        p.entities = cap;
        p.overlap = 1 + i % cap;
        p.controls = 1 + i % 3;
        p.max_arity = 1 + i % 3;
        p.max_edges = 3;
        auto [g1, g2] = mcb::generate_instance(p, seed + static_cast<std::uint64_t>(i));
        auto expect = mcb::brute_force_mcb(g1, g2, {static_cast<std::size_t>(cap), 3});
        auto got = mcb::solve_bigraphs(g1, g2);
        if (got.solutions == expect)
            ++agree;
        else
            std::cerr << "instance " << i << ": solver " << got.solutions.size() << " solutions at " << got.optimum << ", oracle "
                      << expect.size() << "\n";
    }
    std::cout << agree << "/" << count << " match\n";
    return agree == count ? Ok : Inconsistent;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"Maximum common bigraphs"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto * solve = app.add_subcommand("solve", "all maximum common bigraphs of two bigraphs");
    solve->add_option("files", solve_args.files, "A.big B.big, or one pair document")->required()->expected(1, 2)->check(CLI::ExistingFile);
    auto * all = solve->add_flag("--all", solve_args.all, "enumerate every optimal mapping (default)");
    solve->add_flag("--first", solve_args.first, "stop at the first optimal mapping")->excludes(all);
    solve->add_flag("--no-saturate", solve_args.no_saturate, "report the fully open common bigraph");
    solve->add_option("--timeout", solve_args.timeout, "seconds");
    solve->add_option("--format", solve_args.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
    solve->add_option("--driver", solve_args.driver, "descending or default")->check(CLI::IsMember({"descending", "default"}));

    std::vector<std::string> match_files;
    double match_timeout = 0;
    auto * match = app.add_subcommand("match", "does P occur in T as a whole");
    match->add_option("files", match_files, "P.big T.big")->required()->expected(1, 2)->check(CLI::ExistingFile);
    match->add_option("--timeout", match_timeout, "seconds");

    mcb::GeneratorParams gen_params;
    std::uint64_t gen_seed = default_seed();
    std::string gen_out;
    auto * gen = app.add_subcommand("gen", "random instance pair");
    gen->add_option("--entities", gen_params.entities)->required();
    gen->add_option("--overlap", gen_params.overlap)->required();
    gen->add_option("--seed", gen_seed);
    gen->add_option("--controls", gen_params.controls);
    gen->add_option("--max-arity", gen_params.max_arity);
    gen->add_option("--density", gen_params.link_density);
    gen->add_option("--max-edges", gen_params.max_edges);
    gen->add_option("--out", gen_out, "file (default stdout)");

    int cap = 5;
    int count = 200;
    std::uint64_t check_seed = default_seed();
    auto * check = app.add_subcommand("oracle-check", "compare solver and brute force on random pairs");
    check->add_option("--cap", cap, "entities per side")->check(CLI::Range(1, 6));
    check->add_option("--count", count)->check(CLI::PositiveNumber);
    check->add_option("--seed", check_seed);

    std::string bench_dir;
    std::string bench_out = "-";
    double bench_timeout = 0;
    auto * bench = app.add_subcommand("bench", "benchmark every pair document in a directory");
    bench->add_option("--dir", bench_dir)->required()->check(CLI::ExistingDirectory);
    bench->add_option("--out", bench_out, "csv file (default stdout)");
    bench->add_option("--timeout", bench_timeout, "seconds per instance");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (*solve)
            return run_solve(solve_args);
        if (*match)
            return run_match(match_files, match_timeout);
        if (*gen) {
            auto sig = mcb::make_signature(gen_params, gen_seed);
            auto [a, b] = mcb::generate_instance(gen_params, gen_seed);
            auto text = mcb::print_document({a, b}, sig);
            if (gen_out.empty())
                std::cout << text;
            else
                std::ofstream(gen_out) << text;
            return Ok;
        }
        if (*check)
            return run_oracle_check(cap, count, check_seed);
        if (*bench) {
            mcb::BenchOptions opts;
            opts.saturate.verify = false;
            if (bench_timeout > 0)
                opts.search.timeout_seconds = bench_timeout;
            auto records = mcb::bench_directory(bench_dir, opts);
            auto csv = mcb::bench_csv(records);
            if (bench_out == "-")
                std::cout << csv;
            else
                std::ofstream(bench_out) << csv;
            bool aborted = std::any_of(records.begin(), records.end(), [](const auto & r) { return r.aborted; });
            return aborted ? Timeout : Ok;
        }
    }
    catch (const mcb::Error & e) {
        std::cerr << e.what() << "\n";
        return exit_for(e);
    }
    catch (const std::exception & e) {
        std::cerr << e.what() << "\n";
        return BadInput;
    }
    return Usage;
}
