#ifndef MPKC_GYARFAS_HPP
#define MPKC_GYARFAS_HPP

#include <vector>

#include "mpkc/graph.hpp"

namespace mpkc {

// Ordered vertex sequence; consecutive vertices adjacent, all others not.
using InducedPath = std::vector<int>;

bool is_induced_path(const Graph& g, const InducedPath& p);

// True iff every component of G - N[P] has at most floor(n/2) vertices.
bool halving_bound_holds(const Graph& g, const InducedPath& p);

// Induced path starting at `start` whose closed neighborhood leaves only
// components of at most floor(n/2) vertices behind. Requires g connected.
InducedPath gyarfas_path(const Graph& g, int start);

// Greedily appends, at either end, vertices whose whole neighborhood on the
// path is exactly that end, until none qualifies. The halving bound only
// improves, which is re-checked rather than assumed.
InducedPath extend_maximal(const Graph& g, InducedPath p);

} // namespace mpkc

#endif
