#ifndef MPKC_LIST_COLORING_HPP
#define MPKC_LIST_COLORING_HPP

#include "mpkc/instance.hpp"
#include "mpkc/solver.hpp"

namespace mpkc {

// True iff every vertex can be properly colored from its own list. Encoded as
// a 0/1 revenue instance whose optimum must reach n; rejects immediately when
// the clique number exceeds k.
bool is_list_colorable(const Graph& g, const std::vector<std::uint32_t>& lists, int k,
                       const SolverConfig& cfg = {});

} // namespace mpkc

#endif
