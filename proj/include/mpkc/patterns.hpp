#ifndef MPKC_PATTERNS_HPP
#define MPKC_PATTERNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mpkc/graph.hpp"

namespace mpkc {

enum class PatternKind { Bull, Chair, E };

// One of the three fixed forbidden patterns.
//
//   bull : triangle {0,1,2} with pendants 3-0 and 4-1 (5 vertices, 5 edges)
//   chair: center 0 adjacent to 1,2,3, and 1 has a pendant 4 (5 vertices, 4 edges)
//   E    : path 0-1-2-3-4 with a pendant 5 on the middle vertex 2 (6 vertices, 5 edges)
struct Pattern {
    PatternKind kind;
    std::string name;
    Graph graph;
};

const Pattern& pattern(PatternKind kind);

// Injective map pattern vertex -> host vertex whose image induces a copy of
// the pattern (adjacency and non-adjacency both preserved).
using Embedding = std::vector<int>;

bool embedding_valid(const Graph& host, const Pattern& p, const Embedding& e);

// Exhaustive backtracking search; returns the lexicographically least
// embedding (as the tuple of images in pattern-vertex order) if any exists.
std::optional<Embedding> find_induced(const Graph& host, const Pattern& p);

struct ClassMembership {
    bool bull_free = true;
    bool chair_free = true;
    bool e_free = true;
    std::optional<Embedding> bull_witness, chair_witness, e_witness;
};

ClassMembership class_membership(const Graph& g);

} // namespace mpkc

#endif
