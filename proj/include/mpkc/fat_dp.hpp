#ifndef MPKC_FAT_DP_HPP
#define MPKC_FAT_DP_HPP

#include <functional>
#include <vector>

#include "mpkc/decompose.hpp"
#include "mpkc/instance.hpp"

namespace mpkc {

using InnerSolver = std::function<Solution(const Instance&)>;

// Color masks 0..2^k-1 ordered by population count, then numerically; the
// canonical enumeration order for every subset guess.
std::vector<std::uint32_t> canonical_color_masks(int k);

struct FatDpOptions {
    bool verify_structure = false; // re-check the fat adjacency before solving
    bool parallel = false;         // run the inner-solver table fill in parallel
    int workers = 1;
};

// Optimum-per-part table, exposed for invariant checks: opt[i][B] is the best
// value on part i using only colors from the bitmask B.
struct FatDpTrace {
    std::vector<std::vector<Rational>> opt;
};

// Subset dynamic program over the parts of a fat path or fat cycle. Each
// table entry is produced by the inner solver on the part's subinstance with
// the complementary colors forbidden; consecutive parts are complete to each
// other, so their color sets must be disjoint, which the recurrence enforces.
// For cycles the color set allowed on the first part is guessed exhaustively
// and the last part is forced empty whenever its colors meet that guess.
Solution solve_fat(const Instance& inst, const std::vector<VertexSet>& parts, SpineKind kind,
                   const InnerSolver& inner, const FatDpOptions& opts = {},
                   FatDpTrace* trace = nullptr);

} // namespace mpkc

#endif
