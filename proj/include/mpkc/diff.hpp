#ifndef MPKC_DIFF_HPP
#define MPKC_DIFF_HPP

#include <functional>
#include <string>

#include "mpkc/gen.hpp"
#include "mpkc/solver.hpp"

namespace mpkc {

// Envelope for one differential batch; kept within the oracle's safety range.
struct DiffEnvelope {
    int n_min = 5;
    int n_max = 9;
    int k = 2;
    ClassFilter filter = ClassFilter::E;
    long long max_rev = 9;
    double zero_fraction = 0.3;
    int n0 = 4;                 // forces the structural recursion through both cases
    AssertLevel assert_level = AssertLevel::Cheap;
    bool run_subexp = true;
    int oracle_limit = 16;
    long long branch_cap = 100000000;
};

struct DiffMismatch {
    long long index = 0;
    std::string detail;
    std::string repro_path; // directory with graph.txt / revenue.json / meta.json
    Instance shrunk;        // smallest instance still showing the mismatch
};

struct DiffReport {
    long long count = 0;
    std::vector<DiffMismatch> mismatches;
    StatsView stats;
    bool ok() const { return mismatches.empty(); }
};

// Replaceable solver entry, so a deliberately corrupted solver can be pushed
// through the same pipeline to prove the driver catches and shrinks bugs.
using SolveHook = std::function<Solution(const Instance&, const SolverConfig&)>;

// Generates `count` certified instances, runs the structural solver, the
// clique wrapper and the brute-force oracle on each, and reports every value
// disagreement together with a greedily shrunk reproducer. Instances run
// concurrently; per-instance seeds are derived by counter, so the outcome is
// independent of scheduling.
DiffReport differential_run(long long count, const DiffEnvelope& env, std::uint64_t seed,
                            const std::string& repro_dir = "", const SolveHook& solve_hook = {});

} // namespace mpkc

#endif
