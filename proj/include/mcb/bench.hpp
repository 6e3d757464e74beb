#pragma once

// Benchmark records over pair documents, written as CSV.

#include "mcb/io.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>

namespace mcb {

struct BenchRecord {
    std::string instance;
    int enc_v1 = 0;
    int enc_v2 = 0;
    int optimum = 0;
    std::size_t solutions = 0;
    long nodes = 0;
    bool aborted = false;
    double ms_search = 0;
    double ms_saturate = 0;
};

struct BenchOptions {
    SearchOptions search;
    SaturateOptions saturate;
};

inline auto bench_instance(const std::string & name, const Bigraph & g1, const Bigraph & g2, const BenchOptions & opts = {}) -> BenchRecord
{
    using clock = std::chrono::steady_clock;
    BenchRecord rec;
    rec.instance = name;

    auto t0 = clock::now();
    auto e1 = encode(g1);
    auto e2 = encode(g2);
    auto r = solve(e1, e2, descendant_map(e1), descendant_map(e2), opts.search);
    auto t1 = clock::now();
    for (const auto & m : r.solutions)
        saturate_interface(TripleSolution{m, decode_common(m, g1), triples_of(m), {}, {}}, g1, g2, opts.saturate, &e1, &e2);
    auto t2 = clock::now();

    rec.enc_v1 = e1.size();
    rec.enc_v2 = e2.size();
    rec.optimum = r.optimum;
    rec.solutions = r.solutions.size();
    rec.nodes = r.nodes;
    rec.aborted = r.aborted;
    rec.ms_search = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rec.ms_saturate = std::chrono::duration<double, std::milli>(t2 - t1).count();
    return rec;
}

inline constexpr const char * bench_header = "instance,enc_v1,enc_v2,optimum,solutions,nodes,ms_search,ms_saturate";

inline auto bench_csv(const std::vector<BenchRecord> & records) -> std::string
{
    std::ostringstream os;
    os << bench_header << "\n" << std::fixed << std::setprecision(3);
    for (const auto & r : records)
        os << r.instance << "," << r.enc_v1 << "," << r.enc_v2 << "," << r.optimum << "," << r.solutions << "," << r.nodes << ","
           << r.ms_search << "," << r.ms_saturate << "\n";
    return os.str();
}

/// Pair documents (*.big holding "pair") under `dir`, in file-name order.
inline auto bench_inputs(const std::filesystem::path & dir) -> std::vector<std::filesystem::path>
{
    std::vector<std::filesystem::path> files;
    for (const auto & entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".big")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return files;
}

inline auto read_file(const std::filesystem::path & p) -> std::string
{
    std::ifstream in(p, std::ios::binary);
    if (! in)
        throw std::runtime_error("cannot read " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline auto bench_directory(const std::filesystem::path & dir, const BenchOptions & opts = {}) -> std::vector<BenchRecord>
{
    std::vector<BenchRecord> out;
    for (const auto & f : bench_inputs(dir)) {
        auto doc = parse_document(read_file(f));
        if (doc.bigraphs.size() != 2)
            continue;
        out.push_back(bench_instance(f.stem().string(), doc.bigraphs[0], doc.bigraphs[1], opts));
    }
    return out;
}

}
