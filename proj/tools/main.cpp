// Command-line front end: compute independent domination polynomials,
// generate graph families and random corpora, run identity verification
// suites, and benchmark the algorithms against each other.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "idpoly/algorithms.hpp"
#include "idpoly/compose.hpp"
#include "idpoly/edgelist.hpp"
#include "idpoly/errors.hpp"
#include "idpoly/verify.hpp"

using nlohmann::json;
using namespace idpoly;

namespace {

// Exit codes: 0 success, 1 verification failures, 2 parse failure or
// invalid spec, 3 size bound exceeded, 4 algorithm/input mismatch.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitBound = 3;
constexpr int kExitMismatch = 4;

struct InputOptions {
    std::string input_path;
    std::string family;
    int n = 0;
    int p = 0;
    int q = 0;
    double prob = 0.5;
    std::uint64_t seed = 0;
};

void add_family_flags(CLI::App* cmd, InputOptions& opt) {
    cmd->add_option("--family", opt.family,
                    "family kind: edgeless|complete|complete-bipartite|path|cycle|star|random");
    cmd->add_option("--n", opt.n, "vertex count");
    cmd->add_option("--p", opt.p, "first part size (complete-bipartite)");
    cmd->add_option("--q", opt.q, "second part size (complete-bipartite)");
    cmd->add_option("--prob", opt.prob, "edge probability (random)");
    cmd->add_option("--seed", opt.seed, "random seed");
}

FamilySpec spec_from(const InputOptions& opt) {
    FamilySpec spec;
    spec.kind = family_kind_from_string(opt.family);
    spec.n = opt.n;
    spec.p = opt.p;
    spec.q = opt.q;
    spec.edge_prob = opt.prob;
    spec.seed = opt.seed;
    return spec;
}

struct LoadedGraph {
    Graph graph;
    std::string instance;
};

LoadedGraph load_graph(const InputOptions& opt) {
    if (!opt.input_path.empty()) {
        std::ifstream in(opt.input_path);
        if (!in) throw ParseError("cannot open " + opt.input_path, 1);
        return {parse_edge_list(in), opt.input_path};
    }
    if (opt.family.empty())
        throw std::invalid_argument("either --input or --family is required");
    FamilySpec spec = spec_from(opt);
    return {generate(spec), spec.describe()};
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

Polynomial run_algorithm(const std::string& alg, const Graph& g, int max_n,
                         RecursiveStats* stats = nullptr) {
    if (alg == "brute") return id_brute_force(g, max_n > 0 ? max_n : kBruteForceMaxN);
    if (alg == "recursive") return id_recursive(g, stats);
    int bound = max_n > 0 ? max_n : kSubsetFormulaMaxN;
    if (alg == "inclusion-exclusion") return id_inclusion_exclusion(g, bound);
    if (alg == "essential") return id_essential_formula(g, bound);
    if (alg == "coefficient") return id_coefficient_formula(g, bound);
    throw std::invalid_argument("unknown algorithm: " + alg +
                                " (expected brute|recursive|inclusion-exclusion|essential|coefficient)");
}

int cmd_compute(const InputOptions& input, const std::string& alg, const std::string& format,
                int max_n) {
    LoadedGraph lg = load_graph(input);
    auto t0 = std::chrono::steady_clock::now();
    Polynomial p = run_algorithm(alg, lg.graph, max_n);
    double ms = elapsed_ms(t0);

    auto coeffs = p.coeff_strings();
    std::optional<std::size_t> id_number;
    if (!p.is_zero()) id_number = p.min_degree();
    BigInt mis_count = p.evaluate(1);

    if (format == "machine") {
        json rec = {
            {"command", "compute"},
            {"instance", lg.instance},
            {"algorithm", alg},
            {"n", lg.graph.order()},
            {"coefficients", coeffs},
            {"id_number", id_number ? json(*id_number) : json(nullptr)},
            {"mis_count", mis_count.str()},
            {"time_ms", ms},
        };
        std::cout << rec.dump() << '\n';
    } else {
        std::cout << "instance: " << lg.instance << '\n';
        std::cout << "n: " << lg.graph.order() << '\n';
        std::cout << "algorithm: " << alg << '\n';
        std::cout << "id(G,x) = " << p.to_string() << '\n';
        std::cout << "coefficients:";
        for (const auto& c : coeffs) std::cout << ' ' << c;
        std::cout << '\n';
        std::cout << "id_number: " << (id_number ? std::to_string(*id_number) : "undefined")
                  << '\n';
        std::cout << "mis_count: " << mis_count.str() << '\n';
        std::cout << "time_ms: " << ms << '\n';
    }
    return kExitOk;
}

int cmd_generate(const InputOptions& input, const std::string& out_path) {
    if (input.family.empty()) throw std::invalid_argument("--family is required");
    Graph g = generate(spec_from(input));
    std::string text = serialize_edge_list(g);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open " + out_path + " for writing");
        out << text;
    }
    return kExitOk;
}

struct VerifyTally {
    std::size_t instances = 0;
    std::size_t passed = 0;
    std::size_t skipped = 0;
    std::size_t failed = 0;
};

void emit_reports(const std::vector<Report>& reports, const std::string& format,
                  VerifyTally& tally) {
    for (const auto& r : reports) {
        ++tally.instances;
        switch (r.status) {
            case VerifyStatus::passed: ++tally.passed; break;
            case VerifyStatus::hypothesis_unmet: ++tally.skipped; break;
            case VerifyStatus::failed: ++tally.failed; break;
        }
        if (format == "machine") {
            json rec = {
                {"command", "verify"},
                {"identity", r.identity},
                {"instance", r.instance},
                {"status", to_string(r.status)},
            };
            if (!r.witness.empty()) rec["witness"] = r.witness;
            std::cout << rec.dump() << '\n';
        } else {
            std::cout << r.to_line() << '\n';
        }
    }
}

int cmd_verify(const std::string& scope, const std::string& corpus, int max_n,
               const InputOptions& input, int count, const std::vector<std::string>& files,
               const std::string& format) {
    auto run_scope = [&](const Graph& g, const std::string& instance) {
        if (scope == "all") return verify_all(g, instance);
        return run_identity(scope, g, instance);
    };

    VerifyTally tally;
    if (corpus == "exhaustive") {
        for (int n = 1; n <= max_n; ++n) {
            std::uint64_t masks = std::uint64_t{1} << pair_count(n);
            for (std::uint64_t mask = 0; mask < masks; ++mask) {
                Graph g = graph_from_pair_mask(n, mask);
                std::ostringstream label;
                label << "n=" << n << "/mask=" << mask;
                emit_reports(run_scope(g, label.str()), format, tally);
            }
        }
    } else if (corpus == "random") {
        for (int i = 0; i < count; ++i) {
            Graph g = make_random(input.n, input.prob, input.seed + static_cast<std::uint64_t>(i));
            std::ostringstream label;
            label << "random n=" << input.n << " prob=" << input.prob << " seed=" << input.seed
                  << " i=" << i;
            emit_reports(run_scope(g, label.str()), format, tally);
        }
    } else if (corpus == "files") {
        for (const auto& path : files) {
            std::ifstream in(path);
            if (!in) throw ParseError("cannot open " + path, 1);
            Graph g = parse_edge_list(in);
            emit_reports(run_scope(g, path), format, tally);
        }
    } else {
        throw std::invalid_argument("unknown corpus: " + corpus);
    }

    if (format == "machine") {
        json rec = {
            {"command", "verify-summary"}, {"scope", scope},
            {"instances", tally.instances}, {"passed", tally.passed},
            {"skipped", tally.skipped},     {"failed", tally.failed},
        };
        std::cout << rec.dump() << '\n';
    } else {
        std::cout << "summary: scope=" << scope << " instances=" << tally.instances
                  << " passed=" << tally.passed << " skipped=" << tally.skipped
                  << " failed=" << tally.failed << '\n';
    }
    return tally.failed == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const std::vector<std::string>& algs, const std::string& corpus,
              const InputOptions& input, int count, const std::vector<std::string>& files) {
    std::vector<LoadedGraph> instances;
    if (corpus == "files" || !files.empty()) {
        for (const auto& path : files) {
            std::ifstream in(path);
            if (!in) throw ParseError("cannot open " + path, 1);
            instances.push_back({parse_edge_list(in), path});
        }
    } else if (corpus == "random") {
        for (int i = 0; i < count; ++i) {
            FamilySpec spec = spec_from(InputOptions{
                "", "random", input.n, 0, 0, input.prob, input.seed + static_cast<std::uint64_t>(i)});
            instances.push_back({generate(spec), spec.describe()});
        }
    } else {
        instances.push_back(load_graph(input));
    }

    std::cout << "algorithm            instance                                   n   time_ms     memo\n";
    for (const auto& inst : instances) {
        for (const auto& alg : algs) {
            RecursiveStats stats;
            try {
                auto t0 = std::chrono::steady_clock::now();
                Polynomial p = run_algorithm(alg, inst.graph, 0, &stats);
                double ms = elapsed_ms(t0);
                (void)p;
                std::printf("%-20s %-40s %5d %9.2f %8zu\n", alg.c_str(), inst.instance.c_str(),
                            inst.graph.order(), ms, stats.memo_entries);
            } catch (const BoundError&) {
                std::printf("%-20s %-40s %5d %9s %8s\n", alg.c_str(), inst.instance.c_str(),
                            inst.graph.order(), "skipped", "-");
            } catch (const InputMismatchError&) {
                std::printf("%-20s %-40s %5d %9s %8s\n", alg.c_str(), inst.instance.c_str(),
                            inst.graph.order(), "mismatch", "-");
            }
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"independent domination polynomial toolkit"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "compute id(G,x) with a chosen algorithm");
    InputOptions compute_in;
    compute->add_option("--input", compute_in.input_path, "edge-list file");
    add_family_flags(compute, compute_in);
    std::string alg = "recursive";
    std::string format = "text";
    int max_n = 0;
    compute->add_option("--alg", alg, "brute|recursive|inclusion-exclusion|essential|coefficient");
    compute->add_option("--format", format, "text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
    compute->add_option("--max-n", max_n, "override the algorithm size bound");

    // generate
    auto* generate_cmd = app.add_subcommand("generate", "write a family graph as an edge list");
    InputOptions generate_in;
    add_family_flags(generate_cmd, generate_in);
    std::string out_path;
    generate_cmd->add_option("--out", out_path, "output path (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run identity verification suites");
    InputOptions verify_in;
    std::string scope = "all";
    std::string corpus = "exhaustive";
    int verify_max_n = 5;
    int count = 100;
    std::vector<std::string> verify_files;
    std::string verify_format = "text";
    verify_cmd->add_option("--scope", scope, "all or an identity name");
    verify_cmd->add_option("--corpus", corpus, "exhaustive|random|files");
    verify_cmd->add_option("--max-n", verify_max_n, "exhaustive corpus bound");
    verify_cmd->add_option("--n", verify_in.n, "random corpus graph size");
    verify_cmd->add_option("--count", count, "random corpus size");
    verify_cmd->add_option("--prob", verify_in.prob, "random corpus edge probability");
    verify_cmd->add_option("--seed", verify_in.seed, "random corpus seed");
    verify_cmd->add_option("--format", verify_format, "text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
    verify_cmd->add_option("files", verify_files, "edge-list files (corpus=files)");

    // bench
    auto* bench = app.add_subcommand("bench", "time algorithms on instances");
    InputOptions bench_in;
    std::vector<std::string> bench_algs = {"brute", "recursive"};
    std::string bench_corpus;
    int bench_count = 5;
    std::vector<std::string> bench_files;
    bench->add_option("--alg", bench_algs, "algorithms to time");
    bench->add_option("--input", bench_in.input_path, "edge-list file");
    add_family_flags(bench, bench_in);
    bench->add_option("--corpus", bench_corpus, "random|files");
    bench->add_option("--count", bench_count, "random corpus size");
    bench->add_option("files", bench_files, "edge-list files (corpus=files)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(compute_in, alg, format, max_n);
        if (generate_cmd->parsed()) return cmd_generate(generate_in, out_path);
        if (verify_cmd->parsed())
            return cmd_verify(scope, corpus, verify_max_n, verify_in, count, verify_files,
                              verify_format);
        if (bench->parsed())
            return cmd_bench(bench_algs, bench_corpus, bench_in, bench_count, bench_files);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const BoundError& e) {
        std::cerr << "bound exceeded: " << e.what() << '\n';
        return kExitBound;
    } catch (const InputMismatchError& e) {
        std::cerr << "algorithm/input mismatch: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid request: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}
