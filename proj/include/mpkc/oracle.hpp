#ifndef MPKC_ORACLE_HPP
#define MPKC_ORACLE_HPP

#include "mpkc/instance.hpp"

namespace mpkc {

// Exact optimum by backtracking over assignments V -> {uncolored} u [1..k],
// simple enough to trust by inspection. Used as the recursion base case and
// as the differential-testing ground truth. Raises ResourceError above the
// safety limit.
Solution brute_force(const Instance& inst, int safety_limit = 16);

} // namespace mpkc

#endif
