#ifndef MPKC_SOLVER_HPP
#define MPKC_SOLVER_HPP

#include <atomic>
#include <cstdint>
#include <vector>

#include "mpkc/decompose.hpp"
#include "mpkc/fat_dp.hpp"
#include "mpkc/gyarfas.hpp"
#include "mpkc/instance.hpp"

namespace mpkc {

enum class AssertLevel { Off, Cheap, Full };
enum class SolveMode { Auto, Subexp, Oracle };

struct SolverConfig {
    int n0 = 8;                        // at most this many vertices -> brute force
    long long branch_cap = 100000000;  // total guesses before giving up loudly
    AssertLevel assert_level = AssertLevel::Cheap;
    SolveMode mode = SolveMode::Auto;
    int workers = 0; // 0 = MPKC_THREADS / OpenMP default
    int oracle_limit = 16;
};

struct StatsView {
    long long nodes = 0;
    long long branches = 0;
    long long case_a_nodes = 0;
    long long case_b_nodes = 0;
    long long case_a_branches = 0;
    long long case_b_branches = 0;
    long long subexp_branches = 0;
    long long oracle_calls = 0;
    long long disjoint_checks = 0;
    long long disjoint_failures = 0;
    long long chair_dominator_checks = 0;

    StatsView& operator+=(const StatsView& o);
};

// The short-path split: A_j holds the vertices adjacent to the j-th path
// vertex and to no earlier one; the final set holds everything outside N[P].
struct CaseAPartition {
    InducedPath path;
    std::vector<VertexSet> around; // around[0..p-1] = A_1..A_p, around[p] = V \ N[P]
};

CaseAPartition case_a_partition(const Graph& g, const InducedPath& p);
void check_case_a_partition(const Graph& g, const CaseAPartition& part); // InternalError on failure

// One branch of the short-path guessing: a partial coloring of the path plus,
// per path position and color, a separator set of at most two vertices that
// stand in for that position's color class.
struct GuessA {
    std::vector<int> path_colors;                    // per position, 0 = uncolored
    std::vector<std::vector<std::vector<int>>> seps; // [j][color-1] -> sorted vertices of A_{j+1}
};

// Revenue rewrite for one branch: colored path vertices forbid their color to
// their neighbors; separator vertices keep only their color and forbid it to
// their neighbors; and wherever a later vertex misses a separator set, that
// color is forbidden on its neighbors inside the earlier set.
Instance apply_case_a_forbiddings(const Instance& inst, const CaseAPartition& part,
                                  const GuessA& guess);

// One branch of the long-path guessing: the colors allowed on the fat
// structure plus a separator set of at most two vertices of D per color.
struct GuessB {
    std::uint32_t fat_colors = 0;
    std::vector<std::vector<int>> seps; // [color-1] -> sorted vertices of D
};

Instance apply_case_b_forbiddings(const Instance& inst, const FatDecomposition& dec,
                                  const GuessB& guess);

// Inclusion-minimal subset of s0 with the same neighborhood into t, by greedy
// removal in ascending vertex order. Under the structural hypotheses that
// hold in (bull,E)-free graphs the result has at most two vertices.
VertexSet minimal_dominators(const Graph& g, const VertexSet& s0, const VertexSet& t);

// Optimum for a complete graph: an injective vertex-to-color assignment, so
// an exact maximum-weight matching.
Solution solve_complete(const Instance& inst);

class Solver {
public:
    explicit Solver(SolverConfig cfg = {});

    // Dispatches per cfg.mode; Auto runs the structural recursion.
    Solution solve(const Instance& inst);
    // Clique win-win wrapper: strips large cliques while they exist, then
    // falls back to the structural recursion.
    Solution solve_subexponential(const Instance& inst);

    StatsView stats() const;
    const SolverConfig& config() const { return cfg_; }

private:
    struct Ctx {
        int depth = 0;
        Ctx child() const { return Ctx{depth + 1}; }
    };

    Solution dispatch(const Instance& inst, Ctx ctx);
    Solution case_a(const Instance& inst, const InducedPath& path, Ctx ctx);
    Solution case_b(const Instance& inst, const InducedPath& path, Ctx ctx);
    Solution subexp(const Instance& inst, Ctx ctx);
    InducedPath build_path(const Instance& inst) const;
    void count_branch(std::atomic<long long>& bucket);
    void root_class_check(const Instance& inst);
    bool parallel_here(const Ctx& ctx) const;

    SolverConfig cfg_;
    int workers_;
    bool chair_free_root_ = false;

    struct Stats {
        std::atomic<long long> nodes{0};
        std::atomic<long long> branches{0};
        std::atomic<long long> case_a_nodes{0};
        std::atomic<long long> case_b_nodes{0};
        std::atomic<long long> case_a_branches{0};
        std::atomic<long long> case_b_branches{0};
        std::atomic<long long> subexp_branches{0};
        std::atomic<long long> oracle_calls{0};
        std::atomic<long long> disjoint_checks{0};
        std::atomic<long long> disjoint_failures{0};
        std::atomic<long long> chair_dominator_checks{0};
    } stats_;
};

Solution solve(const Instance& inst, const SolverConfig& cfg = {});
Solution solve_subexponential(const Instance& inst, const SolverConfig& cfg = {});

} // namespace mpkc

#endif
