// mpkc: exact Max Partial k-Coloring workbench for (bull,chair)-free and
// (bull,E)-free graphs.
//
// Exit codes: 0 success, 1 usage/input error, 2 class violation (a witness
// certifies the input graph is outside the class), 3 resource budget exceeded.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "mpkc/decompose.hpp"
#include "mpkc/diff.hpp"
#include "mpkc/errors.hpp"
#include "mpkc/gen.hpp"
#include "mpkc/graph_io.hpp"
#include "mpkc/gyarfas.hpp"
#include "mpkc/instance_io.hpp"
#include "mpkc/oracle.hpp"
#include "mpkc/parallel.hpp"
#include "mpkc/patterns.hpp"
#include "mpkc/solver.hpp"

using namespace mpkc;

namespace {

std::string vertex_list(const std::vector<int>& vs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i] + 1;
    return out.str();
}

AssertLevel parse_assert(const std::string& s) {
    if (s == "off") return AssertLevel::Off;
    if (s == "cheap") return AssertLevel::Cheap;
    if (s == "full") return AssertLevel::Full;
    throw InputError("unknown assert level: " + s);
}

SolveMode parse_mode(const std::string& s) {
    if (s == "auto") return SolveMode::Auto;
    if (s == "subexp") return SolveMode::Subexp;
    if (s == "oracle") return SolveMode::Oracle;
    throw InputError("unknown mode: " + s);
}

ClassFilter parse_filter(const std::string& s) {
    if (s == "none") return ClassFilter::None;
    if (s == "chair") return ClassFilter::Chair;
    if (s == "e") return ClassFilter::E;
    throw InputError("unknown class filter: " + s);
}

Family parse_family(const std::string& s) {
    if (s == "random-class") return Family::RandomClass;
    if (s == "fat-path") return Family::FatPath;
    if (s == "fat-cycle") return Family::FatCycle;
    if (s == "co-bipartite") return Family::CoBipartite;
    if (s == "named") return Family::Named;
    if (s == "decomposable") return Family::Decomposable;
    throw InputError("unknown family: " + s);
}

Instance load_instance(const std::string& graph_path, const std::string& revenue_path, int k_flag) {
    Graph g = read_graph_file(graph_path);
    RevenueFile rev = read_revenue_file(revenue_path);
    if (rev.revenue.n() != g.n())
        throw InputError("revenue table has " + std::to_string(rev.revenue.n()) +
                         " rows but the graph has " + std::to_string(g.n()) + " vertices");
    if (k_flag > 0 && k_flag != rev.k)
        throw InputError("--k " + std::to_string(k_flag) + " contradicts the revenue file (k = " +
                         std::to_string(rev.k) + ")");
    return make_instance(std::move(g), rev.k, std::move(rev.revenue));
}

void emit_solution(const Solution& sol, const std::string& out_path) {
    if (out_path.empty())
        write_solution(std::cout, sol);
    else
        write_solution_file(out_path, sol);
    std::cerr << "value " << sol.value.str() << ", " << sol.colored.size()
              << " vertices colored\n";
}

struct SolveArgs {
    std::string graph, revenue, out;
    int k = 0;
    int n0 = 8;
    int oracle_limit = 16;
    long long branch_cap = 100000000;
    std::string mode = "auto";
    std::string assert_level = "cheap";
};

void add_solve_flags(CLI::App* cmd, SolveArgs& args, bool with_mode) {
    cmd->add_option("--graph", args.graph, "graph file")->required();
    cmd->add_option("--revenue", args.revenue, "revenue file")->required();
    cmd->add_option("--k", args.k, "cross-check against the revenue file's k");
    cmd->add_option("--n0", args.n0, "brute-force threshold");
    cmd->add_option("--branch-cap", args.branch_cap, "guess budget before aborting");
    cmd->add_option("--assert", args.assert_level, "off|cheap|full");
    cmd->add_option("--oracle-limit", args.oracle_limit, "brute-force safety limit");
    cmd->add_option("--out", args.out, "solution file (stdout when omitted)");
    if (with_mode) cmd->add_option("--mode", args.mode, "auto|subexp|oracle");
}

int run_solve(const SolveArgs& args, bool oracle_only) {
    Instance inst = load_instance(args.graph, args.revenue, args.k);
    SolverConfig cfg;
    cfg.n0 = args.n0;
    cfg.branch_cap = args.branch_cap;
    cfg.assert_level = parse_assert(args.assert_level);
    cfg.mode = oracle_only ? SolveMode::Oracle : parse_mode(args.mode);
    cfg.oracle_limit = args.oracle_limit;
    Solver solver(cfg);
    Solution sol = cfg.mode == SolveMode::Subexp ? solver.solve_subexponential(inst)
                                                 : solver.solve(inst);
    emit_solution(sol, args.out);
    StatsView stats = solver.stats();
    std::cerr << "nodes " << stats.nodes << ", branches " << stats.branches << "\n";
    return 0;
}

int run_check(const std::string& graph_path) {
    Graph g = read_graph_file(graph_path);
    ClassMembership m = class_membership(g);
    auto show = [&](const char* name, bool free, const std::optional<Embedding>& witness) {
        std::cout << name << "-free: " << (free ? "yes" : "no");
        if (!free && witness) std::cout << "  witness: " << vertex_list(*witness);
        std::cout << "\n";
    };
    show("bull", m.bull_free, m.bull_witness);
    show("chair", m.chair_free, m.chair_witness);
    show("E", m.e_free, m.e_witness);
    return 0;
}

int run_decompose(const std::string& graph_path) {
    Graph g = read_graph_file(graph_path);
    if (!is_connected(g)) throw InputError("decompose needs a connected graph");
    if (is_complete_graph(g)) {
        std::cout << "complete graph: nothing to decompose\n";
        return 0;
    }
    int start = -1;
    for (int v = 0; v < g.n() && start < 0; ++v)
        if (g.degree(v) != g.n() - 1) start = v;
    InducedPath path = extend_maximal(g, gyarfas_path(g, start));
    std::cout << "maximal induced path (" << path.size() << " vertices): " << vertex_list(path)
              << "\n";
    if (path.size() < 7) {
        std::cout << "path too short for the fat decomposition; the short-path case applies\n";
        return 0;
    }
    FatDecomposition dec = build_decomposition(g, path);
    std::cout << "kind: " << (dec.kind == SpineKind::Path ? "fat path" : "fat cycle")
              << ", order " << dec.order() << "\n";
    std::cout << "part sizes:";
    for (const auto& part : dec.parts) std::cout << " " << part.count();
    std::cout << "\nseparator size: " << dec.separator.count()
              << ", remainder size: " << dec.remainder.count() << "\n";
    auto violations = validate_decomposition(g, dec);
    if (violations.empty()) {
        std::cout << "validation: clean\n";
    } else {
        for (const auto& v : violations)
            std::cout << "validation: " << v.rule << " [" << vertex_list(v.witness) << "]\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Max Partial k-Coloring workbench"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve_cmd = app.add_subcommand("solve", "run the structural solver");
    add_solve_flags(solve_cmd, solve_args, true);

    SolveArgs oracle_args;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "run the brute-force reference");
    add_solve_flags(oracle_cmd, oracle_args, false);

    std::string check_graph;
    CLI::App* check_cmd = app.add_subcommand("check", "class membership with witnesses");
    check_cmd->add_option("--graph", check_graph, "graph file")->required();

    std::string dec_graph;
    CLI::App* dec_cmd = app.add_subcommand("decompose", "path and fat decomposition report");
    dec_cmd->add_option("--graph", dec_graph, "graph file")->required();

    CLI::App* gen_cmd = app.add_subcommand("gen", "emit graphs and revenue tables");
    gen_cmd->require_subcommand(1);
    GenSpec gen_spec;
    std::string gen_family = "random-class", gen_filter = "none", gen_out;
    CLI::App* gen_graph_cmd = gen_cmd->add_subcommand("graph", "emit a graph file");
    gen_graph_cmd->add_option("--family", gen_family,
                              "random-class|fat-path|fat-cycle|co-bipartite|decomposable|named");
    gen_graph_cmd->add_option("--name", gen_spec.named, "bull|chair|e|path|cycle|complete|star");
    gen_graph_cmd->add_option("--n", gen_spec.n, "vertex count");
    gen_graph_cmd->add_option("--p", gen_spec.edge_prob, "edge probability");
    gen_graph_cmd->add_option("--filter", gen_filter, "none|chair|e");
    gen_graph_cmd->add_option("--seed", gen_spec.seed, "generator seed");
    gen_graph_cmd->add_option("--parts", gen_spec.parts, "fat families: part count");
    gen_graph_cmd->add_option("--max-part", gen_spec.max_part, "fat families: largest part");
    gen_graph_cmd->add_option("--out", gen_out, "output file (stdout when omitted)");

    int rev_n = 0, rev_k = 2;
    long long rev_min = 0, rev_max = 9;
    double rev_zero = 0.3;
    std::uint64_t rev_seed = 1;
    std::string rev_graph, rev_out;
    CLI::App* gen_rev_cmd = gen_cmd->add_subcommand("revenue", "emit a revenue file");
    gen_rev_cmd->add_option("--n", rev_n, "vertex count (or use --graph)");
    gen_rev_cmd->add_option("--graph", rev_graph, "take the vertex count from this graph");
    gen_rev_cmd->add_option("--k", rev_k, "color count");
    gen_rev_cmd->add_option("--min", rev_min, "minimum entry");
    gen_rev_cmd->add_option("--max", rev_max, "maximum entry");
    gen_rev_cmd->add_option("--zero-fraction", rev_zero, "probability an entry is zeroed");
    gen_rev_cmd->add_option("--seed", rev_seed, "generator seed");
    gen_rev_cmd->add_option("--out", rev_out, "output file (stdout when omitted)");

    long long diff_count = 100;
    DiffEnvelope diff_env;
    std::string diff_filter = "e", diff_assert = "cheap", diff_repro = "diff_repro";
    std::uint64_t diff_seed = 1;
    bool diff_no_subexp = false;
    CLI::App* diff_cmd = app.add_subcommand("diff", "differential run against the oracle");
    diff_cmd->add_option("--count", diff_count, "instances to run");
    diff_cmd->add_option("--n-min", diff_env.n_min, "smallest instance");
    diff_cmd->add_option("--n-max", diff_env.n_max, "largest instance (oracle-safe)");
    diff_cmd->add_option("--k", diff_env.k, "color count");
    diff_cmd->add_option("--filter", diff_filter, "none|chair|e");
    diff_cmd->add_option("--n0", diff_env.n0, "brute-force threshold for the solver");
    diff_cmd->add_option("--assert", diff_assert, "off|cheap|full");
    diff_cmd->add_option("--max-rev", diff_env.max_rev, "largest revenue entry");
    diff_cmd->add_option("--zero-fraction", diff_env.zero_fraction, "zeroed-entry probability");
    diff_cmd->add_option("--seed", diff_seed, "base seed");
    diff_cmd->add_option("--repro-dir", diff_repro, "where mismatch reproducers are written");
    diff_cmd->add_flag("--no-subexp", diff_no_subexp, "skip the clique wrapper");

    std::vector<int> bench_ns{8, 9}, bench_ks{1, 2};
    int bench_seeds = 3, bench_n0 = 8;
    std::string bench_family = "random-class", bench_filter = "e";
    std::vector<std::string> bench_modes{"oracle", "solve", "solve-omp", "subexp"};
    double bench_p = 0.3;
    CLI::App* bench_cmd = app.add_subcommand("bench", "timing sweep, CSV on stdout");
    bench_cmd->add_option("--family", bench_family, "generator family");
    bench_cmd->add_option("--filter", bench_filter, "none|chair|e");
    bench_cmd->add_option("--n", bench_ns, "vertex counts");
    bench_cmd->add_option("--k", bench_ks, "color counts");
    bench_cmd->add_option("--p", bench_p, "edge probability");
    bench_cmd->add_option("--seeds", bench_seeds, "seeds per point");
    bench_cmd->add_option("--n0", bench_n0, "brute-force threshold");
    bench_cmd->add_option("--mode", bench_modes, "subset of oracle|solve|solve-omp|subexp");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) return run_solve(solve_args, false);
        if (*oracle_cmd) return run_solve(oracle_args, true);
        if (*check_cmd) return run_check(check_graph);
        if (*dec_cmd) return run_decompose(dec_graph);

        if (*gen_graph_cmd) {
            gen_spec.family = parse_family(gen_family);
            gen_spec.filter = parse_filter(gen_filter);
            Graph g = gen_graph(gen_spec);
            if (gen_out.empty())
                write_graph(std::cout, g);
            else
                write_graph_file(gen_out, g);
            return 0;
        }
        if (*gen_rev_cmd) {
            int n = rev_n;
            if (!rev_graph.empty()) n = read_graph_file(rev_graph).n();
            if (n <= 0) throw InputError("gen revenue needs --n or --graph");
            Revenue rev = gen_revenue(n, rev_k, rev_min, rev_max, rev_zero, rev_seed);
            if (rev_out.empty())
                write_revenue(std::cout, rev);
            else
                write_revenue_file(rev_out, rev);
            return 0;
        }
        if (*diff_cmd) {
            diff_env.filter = parse_filter(diff_filter);
            diff_env.assert_level = parse_assert(diff_assert);
            diff_env.run_subexp = !diff_no_subexp;
            DiffReport report = differential_run(diff_count, diff_env, diff_seed, diff_repro);
            std::cout << report.count << " instances, " << report.mismatches.size()
                      << " mismatches\n";
            for (const auto& mm : report.mismatches)
                std::cout << "mismatch #" << mm.index << ": " << mm.detail << " -> "
                          << mm.repro_path << "\n";
            return report.ok() ? 0 : 1;
        }
        if (*bench_cmd) {
            std::cout << "family,n,k,seed,mode,value,millis\n";
            for (int n : bench_ns) {
                for (int k : bench_ks) {
                    for (int s = 0; s < bench_seeds; ++s) {
                        GenSpec spec;
                        spec.family = parse_family(bench_family);
                        spec.filter = parse_filter(bench_filter);
                        spec.n = n;
                        spec.edge_prob = bench_p;
                        spec.seed = derive_seed(0xBE7C4, static_cast<std::uint64_t>(
                                                              n * 1000003 + k * 1009 + s));
                        Graph g = gen_graph(spec);
                        Revenue rev = gen_revenue(g.n(), k, 0, 9, 0.3,
                                                  derive_seed(spec.seed, 1));
                        Instance inst = make_instance(g, k, rev);
                        for (const std::string& mode : bench_modes) {
                            if (mode == "oracle" && inst.n() > 16) continue;
                            SolverConfig cfg;
                            cfg.n0 = bench_n0;
                            cfg.workers = mode == "solve-omp" ? worker_budget() : 1;
                            cfg.mode = mode == "oracle" ? SolveMode::Oracle : SolveMode::Auto;
                            auto t0 = std::chrono::steady_clock::now();
                            Solver solver(cfg);
                            Solution sol = mode == "subexp" ? solver.solve_subexponential(inst)
                                                            : solver.solve(inst);
                            auto ms = std::chrono::duration_cast<std::chrono::microseconds>(
                                          std::chrono::steady_clock::now() - t0)
                                          .count();
                            std::cout << bench_family << "," << g.n() << "," << k << "," << s
                                      << "," << mode << "," << sol.value.str() << ","
                                      << static_cast<double>(ms) / 1000.0 << "\n";
                        }
                    }
                }
            }
            return 0;
        }
    } catch (const ClassViolationError& e) {
        std::cerr << "class violation: " << e.what() << "\n";
        if (!e.witness.empty()) std::cerr << "witness: " << vertex_list(e.witness) << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
