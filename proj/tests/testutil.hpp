#ifndef MPKC_TESTUTIL_HPP
#define MPKC_TESTUTIL_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "mpkc/instance.hpp"
#include "mpkc/patterns.hpp"

namespace mpkc::testutil {

Graph graph_of(int n, std::initializer_list<std::pair<int, int>> edges);

Instance unit_instance(Graph g, int k);

// Second oracle, independent of the backtracking one: enumerate every vertex
// subset and exhaustively color it; infeasible subsets contribute nothing.
Solution subset_enumeration_optimum(const Instance& inst);

// Maximum clique by enumerating all vertex subsets (n <= ~20).
int exhaustive_clique_number(const Graph& g);

// Pattern containment by trying every |V(p)|-subset against every labeling.
bool naive_contains_induced(const Graph& host, const Pattern& p);

// Best total weight of an independent set, weights = rev(v, 1).
Rational max_weight_independent_set(const Instance& inst);

} // namespace mpkc::testutil

#endif
