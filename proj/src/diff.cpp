#include "mpkc/diff.hpp"

#include <filesystem>
#include <fstream>
#include <mutex>

#include "mpkc/graph_io.hpp"
#include "mpkc/instance_io.hpp"
#include "mpkc/oracle.hpp"
#include "mpkc/parallel.hpp"

namespace mpkc {

namespace {

Instance instance_for(const DiffEnvelope& env, std::uint64_t seed) {
    Rng rng(seed);
    Graph g;
    // mix plain filtered G(n,p) with long-spine samples, so both the short-path
    // and the long-path branches of the recursion see real traffic
    bool spine = env.n_max >= 8 && rng.chance(0.45);
    if (spine) {
        GenSpec spec;
        spec.family = Family::Decomposable;
        spec.n = env.n_max;
        spec.seed = rng.next();
        Graph candidate = gen_graph(spec);
        if (candidate.n() <= env.n_max && passes_filter(class_membership(candidate), env.filter))
            g = std::move(candidate);
        else
            spine = false;
    }
    if (!spine) {
        GenSpec spec;
        spec.family = Family::RandomClass;
        spec.n = rng.range(std::max(1, env.n_min), std::max(1, env.n_max));
        spec.edge_prob = 0.05 + 0.85 * rng.unit();
        spec.filter = env.filter;
        spec.seed = rng.next();
        g = gen_graph(spec);
    }
    Revenue rev = gen_revenue(g.n(), env.k, 0, env.max_rev, env.zero_fraction, rng.next());
    return make_instance(std::move(g), env.k, std::move(rev));
}

struct RunOutcome {
    bool mismatch = false;
    std::string detail;
    StatsView stats;
};

RunOutcome run_one(const Instance& inst, const DiffEnvelope& env, const SolveHook& hook) {
    RunOutcome out;
    SolverConfig cfg;
    cfg.n0 = env.n0;
    cfg.assert_level = env.assert_level;
    cfg.branch_cap = env.branch_cap;
    cfg.oracle_limit = env.oracle_limit;
    try {
        Solution expected = brute_force(inst, env.oracle_limit);
        Solution got;
        if (hook) {
            got = hook(inst, cfg);
        } else {
            Solver solver(cfg);
            got = solver.solve(inst);
            out.stats += solver.stats();
        }
        if (got.value != expected.value) {
            out.mismatch = true;
            out.detail = "solve value " + got.value.str() + " != oracle " + expected.value.str();
            return out;
        }
        if (env.run_subexp) {
            Solver wrapper(cfg);
            Solution sub = wrapper.solve_subexponential(inst);
            out.stats += wrapper.stats();
            if (sub.value != expected.value) {
                out.mismatch = true;
                out.detail = "subexponential value " + sub.value.str() + " != oracle " +
                             expected.value.str();
            }
        }
    } catch (const std::exception& e) {
        out.mismatch = true;
        out.detail = std::string("exception: ") + e.what();
    }
    return out;
}

Instance shrink(Instance inst, const DiffEnvelope& env, const SolveHook& hook) {
    bool progress = true;
    while (progress && inst.n() > 1) {
        progress = false;
        for (int v = 0; v < inst.n(); ++v) {
            VertexSet keep = VertexSet::full(inst.n());
            keep.reset(v);
            Instance smaller = subinstance(inst, keep).instance;
            if (run_one(smaller, env, hook).mismatch) {
                inst = std::move(smaller);
                progress = true;
                break;
            }
        }
    }
    return inst;
}

std::string write_repro(const std::string& dir, long long index, const Instance& inst,
                        const std::string& detail) {
    namespace fs = std::filesystem;
    fs::path base = fs::path(dir) / ("mismatch_" + std::to_string(index));
    fs::create_directories(base);
    write_graph_file((base / "graph.txt").string(), inst.g());
    write_revenue_file((base / "revenue.json").string(), inst.revenue);
    std::ofstream meta(base / "meta.json");
    meta << "{\n  \"detail\": \"" << detail << "\",\n  \"n\": " << inst.n()
         << ",\n  \"k\": " << inst.k << "\n}\n";
    return base.string();
}

} // namespace

DiffReport differential_run(long long count, const DiffEnvelope& env, std::uint64_t seed,
                            const std::string& repro_dir, const SolveHook& solve_hook) {
    if (env.n_max > env.oracle_limit)
        throw InputError("differential envelope exceeds the oracle safety limit");
    DiffReport report;
    report.count = count;
    std::vector<RunOutcome> outcomes(static_cast<std::size_t>(std::max<long long>(count, 0)));
    std::vector<Instance> instances(outcomes.size());

    parallel_for(count, true, worker_budget(), [&](long long i) {
        Instance inst = instance_for(env, derive_seed(seed, static_cast<std::uint64_t>(i)));
        outcomes[static_cast<std::size_t>(i)] = run_one(inst, env, solve_hook);
        instances[static_cast<std::size_t>(i)] = std::move(inst);
    });

    for (long long i = 0; i < count; ++i) {
        auto& outcome = outcomes[static_cast<std::size_t>(i)];
        report.stats += outcome.stats;
        if (!outcome.mismatch) continue;
        DiffMismatch mm;
        mm.index = i;
        mm.detail = outcome.detail;
        mm.shrunk = shrink(instances[static_cast<std::size_t>(i)], env, solve_hook);
        if (!repro_dir.empty())
            mm.repro_path = write_repro(repro_dir, i, mm.shrunk, outcome.detail);
        report.mismatches.push_back(std::move(mm));
    }
    return report;
}

} // namespace mpkc
