#ifndef MPKC_MATCHING_HPP
#define MPKC_MATCHING_HPP

#include <functional>
#include <utility>
#include <vector>

#include "mpkc/rational.hpp"

namespace mpkc {

// Exact maximum-weight bipartite matching between `left` items and `right`
// items, weights nonnegative; pairs with zero weight are never matched.
// Successive most-profitable augmenting paths, Bellman-Ford style, so it is
// exact over rationals and polynomial.
std::vector<std::pair<int, int>> max_weight_assignment(
    int left, int right, const std::function<const Rational&(int, int)>& weight);

} // namespace mpkc

#endif
